#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end. Each subcommand wraps one library call.
 *
 * Exit status: 0 success, 1 domain error (or a negative answer such as a
 * point outside a region), 2 usage error.
 */

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "serreku/charge.hpp"
#include "serreku/chern.hpp"
#include "serreku/error.hpp"
#include "serreku/figures.hpp"
#include "serreku/json_io.hpp"
#include "serreku/kulattice.hpp"
#include "serreku/orbit.hpp"
#include "serreku/tiltplane.hpp"
#include "serreku/variety.hpp"

namespace serreku {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace cli_detail {

struct Ctx {
  VarietyParams var;
  bool as_json = false;
  std::ostream& out;
};

/// Converts argument-parsing failures into usage errors.
template <class F>
auto arg(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownObject)
      throw UsageError(flag + ": " + e.what());
    throw;
  }
}

inline Rational rat(const std::string& flag, const std::string& text) {
  return arg(flag, [&] { return Rational::parse(text); });
}

inline NumChern cls(const std::string& flag, const std::string& text, const VarietyParams& var) {
  return arg(flag, [&] { return parse_class(text, var); });
}

inline PlanePoint point(const std::string& flag, const std::string& text) {
  auto [s, q] = arg(flag, [&] { return parse_pair(text); });
  return {s, q};
}

inline std::optional<Rational> opt_rat(const std::string& flag, const std::string& text) {
  if (text.empty()) return std::nullopt;
  return rat(flag, text);
}

inline RegionId region(const std::string& flag, int i) {
  return arg(flag, [&] { return region_from_int(i); });
}

inline std::string class_text(const NumChern& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline void emit(Ctx& c, const std::string& command, json body, const std::string& human) {
  if (c.as_json) {
    json j;
    j["schema"] = "1";
    j["command"] = command;
    for (auto& [k, v] : body.items()) j[k] = v;
    c.out << j.dump(2) << "\n";
  } else {
    c.out << human;
    if (!human.empty() && human.back() != '\n') c.out << "\n";
  }
}

inline std::pair<NumChern, NumChern> basis_by_letter(const std::string& letter, const VarietyParams& var) {
  if (letter == "b" || letter == "1") return lattice_basis(RegionId::Ku1, var);
  if (letter == "c" || letter == "2") return lattice_basis(RegionId::Ku2, var);
  if (letter == "d" || letter == "3") return lattice_basis(RegionId::Ku3, var);
  throw UsageError("--basis: expected b, c or d");
}

inline std::function<NumChern(const NumChern&)> functor_by_name(const std::string& name, long k,
                                                               const VarietyParams& var) {
  if (name == "LO") return [&var](const NumChern& v) { return mutate_O(v, var); };
  if (name == "LU") return [&var](const NumChern& v) { return mutate_U(v, var); };
  if (name == "twist") return [k](const NumChern& v) { return twist(v, k); };
  if (name == "shift") return [k](const NumChern& v) { return shift(v, k); };
  if (name == "dual") return [](const NumChern& v) { return dual(v); };
  if (name == "serre") return [&var](const NumChern& v) { return serre_inverse_numeric(v, var); };
  if (name == "id") return [](const NumChern& v) { return v; };
  throw UsageError("--functor: expected LO, LU, twist, shift, dual, serre or id");
}

inline json gl_json(const GLPlusTransform& t) {
  return {{"M", to_json(t.m())}, {"det", t.det().str()}, {"M_inverse", to_json(t.m().inverse())}};
}

inline std::string gl_text(const GLPlusTransform& t) {
  std::ostringstream os;
  os << "M = " << t.m() << "\ndet = " << t.det() << "\nM^-1 = " << t.m().inverse() << "\n";
  return os.str();
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Exact numerics for tilt stability and Serre-invariant stability conditions on Kuznetsov components"};
  app.name("serreku");
  app.require_subcommand(1);
  app.fallthrough();

  int genus = 6;
  std::string config;
  bool as_json = false;
  app.add_option("--genus", genus, "even genus 6..12")->capture_default_str();
  app.add_option("--config", config, "variety config JSON");
  app.add_flag("--json", as_json, "JSON output");

  std::map<CLI::App*, std::function<int(Ctx&)>> handlers;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  // chi
  std::string chi_left, chi_right;
  {
    auto* s = sub("chi", "Euler pairing chi(left, right)");
    s->add_option("--left", chi_left)->required();
    s->add_option("--right", chi_right)->required();
    handlers[s] = [&](Ctx& c) {
      Rational x = euler(cls("--left", chi_left, c.var), cls("--right", chi_right, c.var), c.var);
      emit(c, "chi", {{"chi", x.str()}}, x.str());
      return 0;
    };
  }

  // class
  std::string class_of, class_curve;
  bool class_integrated = false;
  {
    auto* s = sub("class", "numerical class of a named object, literal class or curve ideal sheaf");
    auto* of = s->add_option("--of", class_of, "@name, JSON or rk,c1,ch2[,ch3]");
    auto* cv = s->add_option("--curve", class_curve, "degree,genus of a curve C; gives [I_C]");
    of->excludes(cv);
    s->add_flag("--integrated", class_integrated, "also print d*ch3");
    handlers[s] = [&](Ctx& c) {
      NumChern v;
      if (!class_of.empty()) {
        v = cls("--of", class_of, c.var);
      } else if (!class_curve.empty()) {
        auto [e, g] = arg("--curve", [&] { return parse_pair(class_curve); });
        if (!e.is_integer() || !g.is_integer()) throw UsageError("--curve: integers expected");
        v = curve_ideal_class(e.num().get_si(), g.num().get_si(), c.var);
      } else {
        throw UsageError("class: give --of or --curve");
      }
      json body{{"class", to_json(v)}};
      std::string human = class_text(v);
      if (class_integrated) {
        auto ic = v.integrated_ch3(c.var.degree);
        body["integrated_ch3"] = ic ? json(ic->str()) : json(nullptr);
        human += "\nintegrated ch3: " + (ic ? ic->str() : std::string("unset"));
      }
      body["bogomolov"] = satisfies_bogomolov(v, c.var);
      emit(c, "class", body, human);
      return 0;
    };
  }

  // slope
  std::string sl_s, sl_q;
  std::vector<std::string> sl_classes;
  {
    auto* s = sub("slope", "tilt slope mu_{s,q} of one or more classes, with their order");
    s->add_option("--s", sl_s)->required();
    s->add_option("--q", sl_q)->required();
    s->add_option("--class", sl_classes)->required();
    handlers[s] = [&](Ctx& c) {
      PlanePoint p{rat("--s", sl_s), rat("--q", sl_q)};
      std::vector<NumChern> vs;
      for (const auto& t : sl_classes) vs.push_back(cls("--class", t, c.var));
      json arr = json::array();
      std::string human;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        Slope m = slope(p, vs[i], c.var);
        arr.push_back({{"class", sl_classes[i]}, {"slope", m.str()}});
        human += sl_classes[i] + ": " + m.str() + "\n";
      }
      json body{{"slopes", arr}};
      if (vs.size() > 1) {
        SlopeOrder ord = slope_order(p, vs, c.var);
        json perm = json::array();
        std::string line = "order:";
        for (auto i : ord.permutation) {
          perm.push_back(sl_classes[i]);
          line += " " + sl_classes[i];
        }
        json ties = json::array();
        for (auto [a, b] : ord.ties) ties.push_back({sl_classes[a], sl_classes[b]});
        body["order"] = perm;
        body["ties"] = ties;
        human += line + "\n";
      }
      emit(c, "slope", body, human);
      return 0;
    };
  }

  // region
  std::string rg_s, rg_q;
  int rg_region = 0;
  {
    auto* s = sub("region", "test membership of (s, q) in the region for Ku(X)_i");
    s->add_option("--s", rg_s)->required();
    s->add_option("--q", rg_q)->required();
    s->add_option("--region", rg_region)->required();
    handlers[s] = [&](Ctx& c) {
      PlanePoint p{rat("--s", rg_s), rat("--q", rg_q)};
      RegionStatus st = region_check(p, region("--region", rg_region), c.var);
      bool inside = st == RegionStatus::Inside;
      emit(c, "region", {{"region", rg_region}, {"inside", inside}, {"status", describe(st)}}, describe(st));
      return inside ? 0 : 1;
    };
  }

  // window
  std::string wn_s, wn_q;
  int wn_region = 0;
  {
    auto* s = sub("window", "admissible mu interval [lo, hi) of the second tilt");
    s->add_option("--s", wn_s)->required();
    s->add_option("--q", wn_q)->required();
    s->add_option("--region", wn_region)->required();
    handlers[s] = [&](Ctx& c) {
      PlanePoint p{rat("--s", wn_s), rat("--q", wn_q)};
      MuWindow w = mu_window(p, region("--region", wn_region), c.var);
      emit(c, "window", {{"lo", w.lo.str()}, {"hi", w.hi.str()}, {"lo_closed", true}, {"hi_closed", false}},
           "[" + w.lo.str() + ", " + w.hi.str() + ")");
      return 0;
    };
  }

  // wall
  std::string wl_s, wl_q, wl_class;
  {
    auto* s = sub("wall", "endpoints B-, B+ of the line through (s, q) and a class on q = s^2/2");
    s->add_option("--s", wl_s)->required();
    s->add_option("--q", wl_q)->required();
    s->add_option("--class", wl_class)->required();
    handlers[s] = [&](Ctx& c) {
      PlanePoint p{rat("--s", wl_s), rat("--q", wl_q)};
      WallEndpoints w = wall_endpoints(p, cls("--class", wl_class, c.var), c.var);
      json body{{"gradient", w.gradient.str()},
                {"b_minus", w.b_minus.str()},
                {"b_plus", w.b_plus.str()},
                {"b_minus_approx", w.b_minus.to_double()},
                {"b_plus_approx", w.b_plus.to_double()}};
      emit(c, "wall", body,
           "gradient " + w.gradient.str() + "\nB- = " + w.b_minus.str() + "\nB+ = " + w.b_plus.str());
      return 0;
    };
  }

  // charge
  std::string ch_s, ch_q, ch_beta, ch_alpha_sq, ch_mu, ch_class, ch_basis;
  {
    auto* s = sub("charge", "central charge of a class, or the charge matrix on a lattice basis");
    s->add_option("--s", ch_s);
    s->add_option("--q", ch_q);
    s->add_option("--beta", ch_beta);
    s->add_option("--alpha-sq", ch_alpha_sq);
    s->add_option("--mu", ch_mu, "rotate by 1/u, u = -mu + i (unnormalized)");
    auto* cl = s->add_option("--class", ch_class);
    auto* bs = s->add_option("--basis", ch_basis, "b, c or d");
    cl->excludes(bs);
    handlers[s] = [&](Ctx& c) {
      std::optional<Rational> mu = opt_rat("--mu", ch_mu);
      ChargeSpec spec;
      if (!ch_s.empty() && !ch_q.empty() && ch_beta.empty() && ch_alpha_sq.empty()) {
        spec = ChargeSpec::sq({rat("--s", ch_s), rat("--q", ch_q)}, mu);
      } else if (ch_s.empty() && ch_q.empty() && !ch_beta.empty() && !ch_alpha_sq.empty()) {
        spec = arg("--alpha-sq", [&] { return ChargeSpec::ab(rat("--beta", ch_beta), rat("--alpha-sq", ch_alpha_sq), mu); });
      } else {
        throw UsageError("charge: give either --s and --q, or --beta and --alpha-sq");
      }
      if (!ch_class.empty()) {
        GaussRational z = central_charge(spec, cls("--class", ch_class, c.var), c.var);
        emit(c, "charge", {{"re", z.re.str()}, {"im", z.im.str()}}, z.re.str() + " + (" + z.im.str() + ")i");
      } else if (!ch_basis.empty()) {
        ChargeMatrix cm = charge_matrix(spec, basis_by_letter(ch_basis, c.var), c.var);
        int o = orientation(cm);
        std::ostringstream os;
        os << "Z = " << cm.m << "\ndet = " << det2(cm.m) << "\norientation = " << o;
        emit(c, "charge", {{"matrix", to_json(cm.m)}, {"det", det2(cm.m).str()}, {"orientation", o}}, os.str());
      } else {
        throw UsageError("charge: give --class or --basis");
      }
      return 0;
    };
  }

  // mutate
  std::string mu_functor, mu_class;
  long mu_k = 1;
  {
    auto* s = sub("mutate", "apply LO, LU, twist, shift, dual, serre (inverse Serre on Ku(X)_3) to a class");
    s->add_option("--functor", mu_functor)->required();
    s->add_option("--class", mu_class)->required();
    s->add_option("--k", mu_k, "twist or shift amount")->capture_default_str();
    handlers[s] = [&](Ctx& c) {
      auto f = functor_by_name(mu_functor, mu_k, c.var);
      NumChern v = f(cls("--class", mu_class, c.var));
      emit(c, "mutate", {{"class", to_json(v)}}, class_text(v));
      return 0;
    };
  }

  // coords
  std::string co_class;
  int co_lattice = 1;
  {
    auto* s = sub("coords", "coordinates of a class in the basis of N(Ku(X)_i)");
    s->add_option("--class", co_class)->required();
    s->add_option("--lattice", co_lattice, "1 (b), 2 (c) or 3 (d)")->capture_default_str();
    handlers[s] = [&](Ctx& c) {
      auto basis = lattice_basis(region("--lattice", co_lattice), c.var);
      LatticeCoords lc = lattice_coords(cls("--class", co_class, c.var), basis);
      emit(c, "coords", {{"a", lc.a.str()}, {"b", lc.b.str()}, {"integral", lc.integral}},
           lc.a.str() + " " + lc.b.str() + (lc.integral ? "" : " (not integral)"));
      return 0;
    };
  }

  // ell
  long ell_radius = 50;
  int ell_lattice = 1;
  {
    auto* s = sub("ell", "max chi(v, v) over nonzero lattice vectors in a box");
    s->add_option("--radius", ell_radius)->capture_default_str();
    s->add_option("--lattice", ell_lattice)->capture_default_str();
    handlers[s] = [&](Ctx& c) {
      if (ell_radius < 1) throw UsageError("--radius must be positive");
      KuLattice L = ku_basis(region("--lattice", ell_lattice), c.var);
      EllResult r = ell_max(L, ell_radius);
      json at = json::array();
      std::string human = "max " + r.value.str() + " at";
      for (auto [x, y] : r.attained_at) {
        at.push_back({x, y});
        human += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
      }
      emit(c, "ell", {{"max", r.value.str()}, {"attained_at", at}, {"gram", to_json(L.gram)}}, human);
      return 0;
    };
  }

  // serre-check
  std::string sc_p3, sc_p2, sc_p1, sc_mu3, sc_mu2, sc_mu1;
  {
    auto* s = sub("serre-check", "numerical Serre-invariance certificate for p3, p2, p1");
    s->add_option("--p3", sc_p3, "s,q in region 3")->required();
    s->add_option("--p2", sc_p2, "s,q in region 2")->required();
    s->add_option("--p1", sc_p1, "s,q in region 1")->required();
    s->add_option("--mu3", sc_mu3);
    s->add_option("--mu2", sc_mu2);
    s->add_option("--mu1", sc_mu1);
    handlers[s] = [&](Ctx& c) {
      StabilityParam p3{point("--p3", sc_p3), opt_rat("--mu3", sc_mu3)};
      StabilityParam p2{point("--p2", sc_p2), opt_rat("--mu2", sc_mu2)};
      StabilityParam p1{point("--p1", sc_p1), opt_rat("--mu1", sc_mu1)};
      SerreCertificate cert = serre_certificate(p3, p2, p1, c.var);
      json steps = json::array();
      std::string human;
      for (const auto& st : cert.steps) {
        json js = gl_json(st.transform);
        js["description"] = st.description;
        steps.push_back(js);
        std::ostringstream os;
        os << st.description << "\n  M = " << st.transform.m() << "  det = " << st.transform.det() << "\n";
        human += os.str();
      }
      std::ostringstream os;
      os << "composite = " << cert.composite.m() << "\nlattice_fixed = " << (cert.lattice_fixed ? "true" : "false")
         << "\n" << (cert.passes() ? "PASS" : "FAIL") << "\nnote: " << cert.note;
      human += os.str();
      emit(c, "serre-check",
           {{"steps", steps},
            {"composite", gl_json(cert.composite)},
            {"lattice_fixed", cert.lattice_fixed},
            {"passes", cert.passes()},
            {"note", cert.note}},
           human);
      return cert.passes() ? 0 : 1;
    };
  }

  // orbit-solve
  std::string os_pa, os_pb, os_aba, os_abb, os_mua, os_mub, os_phi = "id";
  int os_region = 0, os_la = 0, os_lb = 0;
  {
    auto* s = sub("orbit-solve", "solve M Z_A = Z_B phi for M in GL+(2,R)");
    s->add_option("--pa", os_pa, "s,q of charge A");
    s->add_option("--pb", os_pb, "s,q of charge B");
    s->add_option("--ab-a", os_aba, "beta,alpha^2 of charge A");
    s->add_option("--ab-b", os_abb, "beta,alpha^2 of charge B");
    s->add_option("--mu-a", os_mua);
    s->add_option("--mu-b", os_mub);
    s->add_option("--region", os_region, "same-region orbit check for --pa, --pb");
    s->add_option("--lattice-a", os_la, "1, 2 or 3");
    s->add_option("--lattice-b", os_lb, "1, 2 or 3");
    s->add_option("--phi", os_phi, "lattice map A -> B: id, LO, LU, twist, shift, dual")->capture_default_str();
    handlers[s] = [&](Ctx& c) {
      std::optional<Rational> mua = opt_rat("--mu-a", os_mua), mub = opt_rat("--mu-b", os_mub);
      GLPlusTransform t = GLPlusTransform::identity();
      if (os_region != 0) {
        if (os_pa.empty() || os_pb.empty()) throw UsageError("orbit-solve --region needs --pa and --pb");
        t = same_orbit_check({point("--pa", os_pa), mua}, {point("--pb", os_pb), mub},
                             region("--region", os_region), c.var);
      } else {
        if (os_la == 0 || os_lb == 0) throw UsageError("orbit-solve: give --region, or --lattice-a and --lattice-b");
        auto spec_of = [&](const std::string& sq, const std::string& ab, const std::optional<Rational>& mu,
                           const char* which) {
          if (!sq.empty() == !ab.empty())
            throw UsageError(std::string("orbit-solve: give exactly one of --p") + which + " and --ab-" + which);
          if (!sq.empty()) return ChargeSpec::sq(point("--p", sq), mu);
          auto [beta, a2] = arg("--ab", [&] { return parse_pair(ab); });
          return ChargeSpec::ab(beta, a2, mu);
        };
        ChargeSpec sa = spec_of(os_pa, os_aba, mua, "a"), sb = spec_of(os_pb, os_abb, mub, "b");
        auto ba = lattice_basis(region("--lattice-a", os_la), c.var);
        auto bb = lattice_basis(region("--lattice-b", os_lb), c.var);
        Mat2 phi = lattice_map_matrix(functor_by_name(os_phi, 1, c.var), ba, bb);
        t = solve_gl(charge_matrix(sa, ba, c.var), charge_matrix(sb, bb, c.var), phi);
      }
      emit(c, "orbit-solve", gl_json(t), gl_text(t));
      return 0;
    };
  }

  // figure
  std::string fg_kind, fg_out, fg_window, fg_s, fg_q;
  std::vector<std::string> fg_classes;
  int fg_w = 800, fg_h = 600;
  {
    auto* s = sub("figure", "render an SVG of the (s, q)-plane");
    s->add_option("--kind", fg_kind, "li_boundary, regions, wall, slope_compare")->required();
    s->add_option("--out", fg_out, "output file (default: stdout)");
    s->add_option("--window", fg_window, "s_lo,s_hi,q_lo,q_hi");
    s->add_option("--s", fg_s);
    s->add_option("--q", fg_q);
    s->add_option("--class", fg_classes);
    s->add_option("--width", fg_w)->capture_default_str();
    s->add_option("--height", fg_h)->capture_default_str();
    handlers[s] = [&](Ctx& c) {
      FigureKind kind;
      auto need_point = [&]() -> PlanePoint {
        if (fg_s.empty() || fg_q.empty()) throw UsageError("figure --kind " + fg_kind + " needs --s and --q");
        return {rat("--s", fg_s), rat("--q", fg_q)};
      };
      if (fg_kind == "li_boundary") {
        kind = LiBoundaryFigure{};
      } else if (fg_kind == "regions") {
        kind = RegionsFigure{};
      } else if (fg_kind == "wall") {
        if (fg_classes.size() != 1) throw UsageError("figure --kind wall needs one --class");
        kind = WallFigure{need_point(), cls("--class", fg_classes[0], c.var)};
      } else if (fg_kind == "slope_compare") {
        if (fg_classes.empty()) throw UsageError("figure --kind slope_compare needs --class");
        SlopeCompareFigure sc{need_point(), {}, fg_classes};
        for (const auto& t : fg_classes) sc.vs.push_back(cls("--class", t, c.var));
        kind = sc;
      } else {
        throw UsageError("--kind: expected li_boundary, regions, wall or slope_compare");
      }
      FigureWindow w = default_window(kind);
      if (!fg_window.empty()) {
        auto parts = detail::split(fg_window, ',');
        if (parts.size() != 4) throw UsageError("--window: expected s_lo,s_hi,q_lo,q_hi");
        w = {rat("--window", parts[0]), rat("--window", parts[1]), rat("--window", parts[2]),
             rat("--window", parts[3])};
      }
      std::string svg = render(FigureSpec{kind, w, fg_w, fg_h}, c.var);
      if (fg_out.empty()) {
        c.out << svg;
        return 0;
      }
      std::ofstream f(fg_out, std::ios::binary);
      if (!f) throw UsageError("--out: cannot write '" + fg_out + "'");
      f << svg;
      emit(c, "figure", {{"out", fg_out}, {"bytes", svg.size()}}, "wrote " + fg_out);
      return 0;
    };
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto fail_json = [&](const std::string& code, const std::string& msg) {
    if (!as_json) return;
    json j;
    j["schema"] = "1";
    j["error"] = {{"code", code}, {"message", msg}};
    out << j.dump(2) << "\n";
  };

  try {
    VarietyParams var;
    try {
      var = config.empty() ? make_variety(genus) : load_variety_config(config);
    } catch (const Error& e) {
      throw UsageError(std::string(config.empty() ? "--genus: " : "--config: ") + e.what());
    }
    Ctx ctx{var, as_json, out};
    for (auto* s : app.get_subcommands()) return handlers.at(s)(ctx);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    fail_json("Usage", e.what());
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    fail_json(std::string(to_string(e.code())), e.what());
    return 1;
  }
}

}  // namespace serreku
