#pragma once

/**
 * @file figures.hpp
 * @brief Deterministic SVG pictures of the (s, q)-plane.
 *
 * Every anchor and curve sample is computed exactly and only converted to
 * double when written out. Numbers are printed with 12 significant digits.
 * Curves are sampled at 256 points per unit of s (at least 201 points per
 * curve), with exact endpoints.
 */

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "serreku/chern.hpp"
#include "serreku/error.hpp"
#include "serreku/exactalg.hpp"
#include "serreku/numchern.hpp"
#include "serreku/tiltplane.hpp"
#include "serreku/variety.hpp"

namespace serreku {

struct FigureWindow {
  Rational s_lo, s_hi, q_lo, q_hi;
};

struct LiBoundaryFigure {};
struct RegionsFigure {};
struct WallFigure {
  PlanePoint p;
  NumChern v;
};
struct SlopeCompareFigure {
  PlanePoint p;
  std::vector<NumChern> vs;
  std::vector<std::string> labels;  // optional, one per class
};

using FigureKind = std::variant<LiBoundaryFigure, RegionsFigure, WallFigure, SlopeCompareFigure>;

struct FigureSpec {
  FigureKind kind;
  FigureWindow window;
  int width_px = 800;
  int height_px = 600;
};

/// A marked point, exact.
struct Anchor {
  std::string label;
  QuadraticSurd s;
  QuadraticSurd q;
};

inline constexpr int kSamplesPerUnit = 256;
inline constexpr int kMinSamples = 201;

namespace detail {

inline std::string fmt_num(double x) {
  if (x == 0.0 || std::fabs(x) < 1e-300) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(const FigureSpec& spec) : spec_(spec) {
    const auto& w = spec.window;
    if (!(w.s_lo < w.s_hi) || !(w.q_lo < w.q_hi) || spec.width_px <= 0 || spec.height_px <= 0)
      throw Error(ErrorCode::EmptyWindow, "figure window is empty");
    sx_ = Rational(spec.width_px) / (w.s_hi - w.s_lo);
    sy_ = Rational(spec.height_px) / (w.q_hi - w.q_lo);
  }

  /// Viewport transform, applied exactly before rounding.
  double x(const QuadraticSurd& s) const {
    return ((s - QuadraticSurd(spec_.window.s_lo)) * QuadraticSurd(sx_)).to_double();
  }
  double y(const QuadraticSurd& q) const {
    return ((QuadraticSurd(spec_.window.q_hi) - q) * QuadraticSurd(sy_)).to_double();
  }

  void open() {
    const auto& w = spec_.window;
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec_.width_px << "\" height=\""
         << spec_.height_px << "\" viewBox=\"0 0 " << spec_.width_px << " " << spec_.height_px
         << "\" data-window=\"" << w.s_lo << " " << w.s_hi << " " << w.q_lo << " " << w.q_hi << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    axes();
  }

  void polyline(const std::vector<std::pair<QuadraticSurd, QuadraticSurd>>& pts, const std::string& cls,
                const std::string& stroke) {
    out_ << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << stroke
         << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [s, q] : pts) {
      if (!first) out_ << ' ';
      first = false;
      out_ << fmt_num(x(s)) << ',' << fmt_num(y(q));
    }
    out_ << "\"/>\n";
  }

  void anchor(const Anchor& a, const std::string& fill = "black") {
    double cx = x(a.s), cy = y(a.q);
    out_ << "<circle class=\"anchor\" data-label=\"" << xml_escape(a.label) << "\" data-s=\"" << a.s.str()
         << "\" data-q=\"" << a.q.str() << "\" cx=\"" << fmt_num(cx) << "\" cy=\"" << fmt_num(cy)
         << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
    out_ << "<text x=\"" << fmt_num(cx + 5) << "\" y=\"" << fmt_num(cy - 5)
         << "\" font-size=\"12\" font-family=\"sans-serif\">" << xml_escape(a.label) << "</text>\n";
  }

  std::string close() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  void axes() {
    const auto& w = spec_.window;
    std::string attrs = "stroke=\"#999\" stroke-width=\"0.75\"";
    if (w.s_lo < Rational(0) && Rational(0) < w.s_hi)
      out_ << "<line class=\"axis\" x1=\"" << fmt_num(x(Rational(0))) << "\" y1=\"0\" x2=\""
           << fmt_num(x(Rational(0))) << "\" y2=\"" << spec_.height_px << "\" " << attrs << "/>\n";
    if (w.q_lo < Rational(0) && Rational(0) < w.q_hi)
      out_ << "<line class=\"axis\" x1=\"0\" y1=\"" << fmt_num(y(Rational(0))) << "\" x2=\""
           << spec_.width_px << "\" y2=\"" << fmt_num(y(Rational(0))) << "\" " << attrs << "/>\n";
  }

  const FigureSpec& spec_;
  Rational sx_, sy_;
  std::ostringstream out_;
};

/// Exact samples of f on [a, b] (a < b, common radicand).
template <class F>
std::vector<std::pair<QuadraticSurd, QuadraticSurd>> sample(const QuadraticSurd& a, const QuadraticSurd& b,
                                                            F&& f) {
  double len = (b - a).to_double();
  long n = std::max<long>(kMinSamples, static_cast<long>(std::ceil(len * kSamplesPerUnit)) + 1);
  std::vector<std::pair<QuadraticSurd, QuadraticSurd>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  QuadraticSurd step = (b - a) * QuadraticSurd(Rational(1, n - 1));
  for (long i = 0; i < n; ++i) {
    QuadraticSurd s = i == n - 1 ? b : a + step * QuadraticSurd(Rational(i));
    pts.emplace_back(s, f(s));
  }
  return pts;
}

inline QuadraticSurd half_sq(const QuadraticSurd& s) { return QuadraticSurd(Rational(1, 2)) * s * s; }

inline void draw_parabolas(Canvas& c, const FigureWindow& w, const VarietyParams& var) {
  c.polyline(sample(w.s_lo, w.s_hi, half_sq), "parabola", "#555");
  Rational off = li_offset(var);
  c.polyline(sample(w.s_lo, w.s_hi, [&](const QuadraticSurd& s) { return half_sq(s) - QuadraticSurd(off); }),
             "li-parabola", "#555");
}

inline void draw_li_boundary(Canvas& c, const FigureWindow& w, const VarietyParams& var) {
  for (const auto& piece : li_boundary_pieces(w.s_lo, w.s_hi, var)) {
    auto f = [&](const QuadraticSurd& s) { return li_boundary_q(piece, s, var); };
    if (piece.tangent)
      c.polyline({{piece.s_from, f(piece.s_from)}, {piece.s_to, f(piece.s_to)}}, "li-boundary tangent", "red");
    else
      c.polyline(sample(piece.s_from, piece.s_to, f), "li-boundary arc", "red");
  }
}

inline bool in_window(const Anchor& a, const FigureWindow& w) {
  return surd_cmp(QuadraticSurd(w.s_lo), a.s) <= 0 && surd_cmp(a.s, QuadraticSurd(w.s_hi)) <= 0 &&
         surd_cmp(QuadraticSurd(w.q_lo), a.q) <= 0 && surd_cmp(a.q, QuadraticSurd(w.q_hi)) <= 0;
}

inline std::string line_bundle_label(long k) {
  if (k == 0) return "O";
  if (k == 1) return "O(H)";
  if (k == -1) return "O(-H)";
  return "O(" + std::to_string(k) + "H)";
}

inline Anchor point_anchor(const std::string& label, const PlanePoint& p) { return {label, p.s, p.q}; }

/// Line q = m s + b through p, across the window.
inline std::vector<std::pair<QuadraticSurd, QuadraticSurd>> window_line(const FigureWindow& w,
                                                                        const Rational& m,
                                                                        const PlanePoint& p) {
  auto at = [&](const Rational& s) { return QuadraticSurd(p.q + m * (s - p.s)); };
  return {{w.s_lo, at(w.s_lo)}, {w.s_hi, at(w.s_hi)}};
}

/// Gradient of the line from p towards v; rank-zero classes give a direction.
inline std::optional<Rational> line_gradient(const PlanePoint& p, const NumChern& v, const VarietyParams& var) {
  auto [n, d] = slope_parts(p, v, var);
  if (d.is_zero()) return std::nullopt;
  return n / d;
}

}  // namespace detail

/// Labeled exact points the figure marks, in drawing order.
inline std::vector<Anchor> figure_anchors(const FigureSpec& spec, const VarietyParams& var) {
  std::vector<Anchor> out;
  const auto& w = spec.window;
  auto push = [&](Anchor a) {
    if (detail::in_window(a, w)) out.push_back(std::move(a));
  };
  auto line_bundles = [&]() {
    for (long k = Rational(w.s_lo.floor()).num().get_si(); k <= Rational(w.s_hi.floor()).num().get_si() + 1; ++k)
      push({detail::line_bundle_label(k), Rational(k), Rational(k * k, 2)});
  };
  std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, LiBoundaryFigure>) {
          line_bundles();
        } else if constexpr (std::is_same_v<K, RegionsFigure>) {
          line_bundles();
          std::string e2 = var.is_gm() ? "U" : "E2", e2d = var.is_gm() ? "Udual" : "E2dual";
          push(detail::point_anchor(e2, detail::affine_point(catalog(var, "E2"))));
          push(detail::point_anchor(e2d, detail::affine_point(catalog(var, "E2dual"))));
        } else if constexpr (std::is_same_v<K, WallFigure>) {
          push(detail::point_anchor("p", kind.p));
          auto rp = reduced_point(kind.v);
          if (const auto* pt = std::get_if<PlanePoint>(&rp)) push(detail::point_anchor("v", *pt));
          WallEndpoints we = wall_endpoints(kind.p, kind.v, var);
          push({"B-", we.b_minus, detail::half_sq(we.b_minus)});
          push({"B+", we.b_plus, detail::half_sq(we.b_plus)});
        } else {
          push(detail::point_anchor("p", kind.p));
          for (std::size_t i = 0; i < kind.vs.size(); ++i) {
            auto rp = reduced_point(kind.vs[i]);
            std::string label = i < kind.labels.size() ? kind.labels[i] : "v" + std::to_string(i + 1);
            if (const auto* pt = std::get_if<PlanePoint>(&rp)) push(detail::point_anchor(label, *pt));
          }
        }
      },
      spec.kind);
  return out;
}

inline std::string render(const FigureSpec& spec, const VarietyParams& var) {
  detail::Canvas c(spec);
  const auto& w = spec.window;
  c.open();
  std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, LiBoundaryFigure>) {
          detail::draw_parabolas(c, w, var);
          detail::draw_li_boundary(c, w, var);
        } else if constexpr (std::is_same_v<K, RegionsFigure>) {
          detail::draw_parabolas(c, w, var);
          detail::draw_li_boundary(c, w, var);
          for (RegionId r : {RegionId::Ku1, RegionId::Ku2, RegionId::Ku3}) {
            auto [a, b] = region_endpoints(r, var);
            c.polyline({{a.s, a.q}, {b.s, b.q}},
                       "region-boundary region-" + std::to_string(static_cast<int>(r)), "red");
          }
        } else if constexpr (std::is_same_v<K, WallFigure>) {
          c.polyline(detail::sample(w.s_lo, w.s_hi, detail::half_sq), "parabola", "#555");
          WallEndpoints we = wall_endpoints(kind.p, kind.v, var);
          c.polyline(detail::window_line(w, we.gradient, kind.p), "wall-line", "blue");
        } else {
          detail::draw_parabolas(c, w, var);
          for (std::size_t i = 0; i < kind.vs.size(); ++i) {
            auto m = detail::line_gradient(kind.p, kind.vs[i], var);
            const char* color = i % 2 == 0 ? "blue" : "red";
            std::string cls = "slope-line slope-" + std::to_string(i + 1);
            if (m) {
              c.polyline(detail::window_line(w, *m, kind.p), cls, color);
            } else {
              c.polyline({{kind.p.s, w.q_lo}, {kind.p.s, w.q_hi}}, cls, color);
            }
          }
        }
      },
      spec.kind);
  for (const auto& a : figure_anchors(spec, var)) c.anchor(a);
  return c.close();
}

/// Default windows for the CLI and the golden files.
inline FigureWindow default_window(const FigureKind& kind) {
  if (std::holds_alternative<LiBoundaryFigure>(kind)) return {-3, 3, Rational(-1, 2), 5};
  if (std::holds_alternative<RegionsFigure>(kind)) return {Rational(-3, 2), Rational(3, 2), Rational(-1, 5), Rational(3, 5)};
  return {-1, 1, Rational(-1, 5), Rational(1, 2)};
}

}  // namespace serreku
