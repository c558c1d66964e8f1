#pragma once

// SVG rendering of exact data. Inputs are exact rationals; the only
// rounding is when coordinates are printed (12 significant digits).

#include <string>
#include <vector>

#include "okdh/measure.hpp"
#include "okdh/polytope.hpp"
#include "okdh/restricted_volume.hpp"

namespace okdh {

struct PlotPoint {
  Rational x, y;
};

struct PlotLayer {
  enum class Kind { stems, polyline, polygon };
  Kind kind = Kind::polyline;
  std::vector<PlotPoint> points;
  std::string color = "#1f77b4";
  std::string label;
};

struct Plot {
  std::string title;
  std::vector<PlotLayer> layers;
};

/// Fixed 800x600 viewport, linear scaling, axes labeled with the exact data
/// extremes. Throws ValidationError when there is nothing to draw.
std::string render_svg(const Plot& plot);

/// Atoms as stems.
PlotLayer stems_layer(const DiscreteMeasure& m, std::string color = "#d62728");

/// Density sampled at every breakpoint plus 100 interior points per interval;
/// an atom, if any, is drawn as an extra stem layer.
std::vector<PlotLayer> density_layers(const PiecewisePolyMeasure& m, std::string color = "#1f77b4");

/// One polyline through the graph of a piecewise polynomial.
PlotLayer function_layer(const PiecewisePolynomial& f, std::string color, std::string label);

/// Boundary of a 2-D polytope (vertices in counterclockwise order), or a
/// 1-D polytope drawn as a segment on the x-axis.
PlotLayer body_layer(const RationalPolytope& p, std::string color, std::string label);

}  // namespace okdh
