#include "okdh/plot.hpp"

#include <algorithm>
#include <sstream>

namespace okdh {

namespace {

constexpr long kWidth = 800, kHeight = 600, kMargin = 60;
constexpr long kInterior = 100;

std::string coord(const Rational& q) { return to_decimal(q, 12); }

// Half-plane index for an exact angular sort around a center.
int half(const Rational& x, const Rational& y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Plot& plot) {
  std::vector<const PlotPoint*> all;
  for (const auto& l : plot.layers) {
    for (const auto& p : l.points) all.push_back(&p);
  }
  if (all.empty()) throw ValidationError("nothing to plot");

  Rational x0 = all.front()->x, x1 = x0, y0 = 0, y1 = 0;
  for (const auto* p : all) {
    x0 = std::min(x0, p->x);
    x1 = std::max(x1, p->x);
    y0 = std::min(y0, p->y);
    y1 = std::max(y1, p->y);
  }
  const Rational lx = x0, hx = x1, ly = y0, hy = y1;  // exact extremes for labels
  if (x0 == x1) {
    x0 -= Rational(1, 2);
    x1 += Rational(1, 2);
  }
  if (y0 == y1) y1 = y0 + 1;
  const Rational sx = Rational(kWidth - 2 * kMargin) / (x1 - x0);
  const Rational sy = Rational(kHeight - 2 * kMargin) / (y1 - y0);
  auto px = [&](const Rational& x) { return coord(kMargin + (x - x0) * sx); };
  auto py = [&](const Rational& y) { return coord(kHeight - kMargin - (y - y0) * sy); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!plot.title.empty()) {
    os << "<text x=\"" << kWidth / 2 << "\" y=\"30\" text-anchor=\"middle\" font-size=\"18\">"
       << escape(plot.title) << "</text>\n";
  }
  // axes through y = 0 and x = x0
  os << "<line x1=\"" << px(x0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(0)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x0) << "\" y2=\"" << py(y1)
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << px(lx) << "\" y=\"" << kHeight - kMargin / 2 << "\" text-anchor=\"middle\">"
     << to_string(lx) << "</text>\n";
  os << "<text x=\"" << px(hx) << "\" y=\"" << kHeight - kMargin / 2 << "\" text-anchor=\"middle\">"
     << to_string(hx) << "</text>\n";
  os << "<text x=\"" << kMargin / 2 << "\" y=\"" << py(hy) << "\" text-anchor=\"middle\">"
     << to_string(hy) << "</text>\n";
  if (ly != 0) {
    os << "<text x=\"" << kMargin / 2 << "\" y=\"" << py(ly) << "\" text-anchor=\"middle\">"
       << to_string(ly) << "</text>\n";
  }

  long legend_y = 50;
  for (const auto& l : plot.layers) {
    switch (l.kind) {
      case PlotLayer::Kind::stems:
        for (const auto& p : l.points) {
          os << "<line class=\"stem\" x1=\"" << px(p.x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(p.x)
             << "\" y2=\"" << py(p.y) << "\" stroke=\"" << l.color << "\" stroke-width=\"2\"/>\n";
          os << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\" fill=\"" << l.color
             << "\"/>\n";
        }
        break;
      case PlotLayer::Kind::polyline:
      case PlotLayer::Kind::polygon: {
        os << (l.kind == PlotLayer::Kind::polygon ? "<polygon" : "<polyline") << " points=\"";
        for (std::size_t i = 0; i < l.points.size(); ++i) {
          os << (i ? " " : "") << px(l.points[i].x) << "," << py(l.points[i].y);
        }
        os << "\" fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"2\"/>\n";
        break;
      }
    }
    if (!l.label.empty()) {
      os << "<text x=\"" << kWidth - kMargin << "\" y=\"" << legend_y << "\" text-anchor=\"end\" fill=\""
         << l.color << "\">" << escape(l.label) << "</text>\n";
      legend_y += 18;
    }
  }
  os << "</svg>\n";
  return os.str();
}

PlotLayer stems_layer(const DiscreteMeasure& m, std::string color) {
  PlotLayer l{PlotLayer::Kind::stems, {}, std::move(color), "atoms"};
  for (const auto& a : m.atoms()) l.points.push_back({a.location, a.mass});
  return l;
}

PlotLayer function_layer(const PiecewisePolynomial& f, std::string color, std::string label) {
  PlotLayer l{PlotLayer::Kind::polyline, {}, std::move(color), std::move(label)};
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const Rational& lo = f.breakpoints[i];
    const Rational& hi = f.breakpoints[i + 1];
    for (long k = 0; k <= kInterior + 1; ++k) {
      const Rational t = lo + (hi - lo) * ratio(k, kInterior + 1);
      l.points.push_back({t, f.pieces[i](t)});
    }
  }
  return l;
}

std::vector<PlotLayer> density_layers(const PiecewisePolyMeasure& m, std::string color) {
  std::vector<PlotLayer> out;
  if (!m.density().pieces.empty()) out.push_back(function_layer(m.density(), color, "density"));
  if (m.atom()) {
    out.push_back({PlotLayer::Kind::stems, {{m.atom()->location, m.atom()->mass}}, color, "atom"});
  }
  if (out.empty()) throw ValidationError("empty measure");
  return out;
}

PlotLayer body_layer(const RationalPolytope& p, std::string color, std::string label) {
  if (p.dim() > 2) throw ValidationError("only 1-D and 2-D bodies can be drawn");
  if (p.is_empty()) throw ValidationError("empty body");
  PlotLayer l{PlotLayer::Kind::polygon, {}, std::move(color), std::move(label)};
  const auto& vs = p.vertices();
  if (p.dim() == 1) {
    l.kind = PlotLayer::Kind::polyline;
    for (const auto& v : vs) l.points.push_back({v[0], 0});
    return l;
  }
  Rational cx = 0, cy = 0;
  for (const auto& v : vs) {
    cx += v[0];
    cy += v[1];
  }
  cx /= static_cast<long>(vs.size());
  cy /= static_cast<long>(vs.size());
  std::vector<RationalVector> sorted = vs;
  std::sort(sorted.begin(), sorted.end(), [&](const RationalVector& a, const RationalVector& b) {
    const Rational ax = a[0] - cx, ay = a[1] - cy, bx = b[0] - cx, by = b[1] - cy;
    const int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
  });
  for (const auto& v : sorted) l.points.push_back({v[0], v[1]});
  return l;
}

}  // namespace okdh
