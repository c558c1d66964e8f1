#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "okdh/rational.hpp"

namespace okdh {

/// Half-space <normal, x> >= rhs.
struct Inequality {
  RationalVector normal;
  Rational rhs;

  Rational slack(std::span<const Rational> x) const { return dot(normal, x) - rhs; }
  bool satisfied_by(std::span<const Rational> x) const { return slack(x) >= 0; }

  /// Same half-space with a primitive integer normal. Two inequalities that
  /// describe the same half-space normalize to equal values.
  Inequality normalized() const;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

bool operator<(const Inequality& a, const Inequality& b);

struct LatticePoint {
  IntegerVector coords;

  std::size_t dim() const { return coords.size(); }
  RationalVector to_rational() const;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

bool operator<(const LatticePoint& a, const LatticePoint& b);

class UnboundedPolytopeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A bounded convex polytope in Q^d. Values are immutable; the vertex list
/// is computed on first use and shared between copies.
class RationalPolytope {
 public:
  /// Throws UnboundedPolytopeError if the inequalities admit a recession
  /// direction and the set is nonempty.
  static RationalPolytope from_hrep(std::size_t dim, std::vector<Inequality> hrep);

  /// Convex hull of the given points.
  static RationalPolytope from_vrep(std::size_t dim, std::vector<RationalVector> points);

  static RationalPolytope empty(std::size_t dim);

  std::size_t dim() const;
  const std::vector<Inequality>& hrep() const;

  /// Extreme points, sorted lexicographically.
  const std::vector<RationalVector>& vertices() const;

  bool is_empty() const { return vertices().empty(); }
  int affine_dim() const;
  bool is_full_dimensional() const { return affine_dim() == static_cast<int>(dim()); }
  bool contains(std::span<const Rational> x) const;

  RationalPolytope dilated(const Rational& factor) const;

  /// Intersection with extra half-spaces. The result is bounded because this
  /// polytope is, so no recession check is needed.
  RationalPolytope intersected(const std::vector<Inequality>& extra) const;

 private:
  friend RationalPolytope convex_hull(std::vector<RationalVector> points);
  static RationalPolytope from_seeded(std::size_t dim, std::vector<Inequality> hrep,
                                      std::vector<RationalVector> vertices);

  struct State;
  explicit RationalPolytope(std::shared_ptr<State> state);
  std::shared_ptr<State> state_;
};

/// Integer points of m*P in lexicographic order.
std::vector<LatticePoint> lattice_points(const RationalPolytope& p, std::int64_t m);

/// Exact d-dimensional volume; zero when P is lower-dimensional.
Rational volume(const RationalPolytope& p);

enum class FanApex {
  centroid,      // cone every face over its vertex centroid
  first_vertex,  // pulling triangulation from the lexicographically first vertex
};

/// Triangulation of a full-dimensional polytope into d-simplices, each given
/// by its d+1 corner points. Lower-dimensional input yields no simplices.
std::vector<std::vector<RationalVector>> triangulate(const RationalPolytope& p,
                                                     FanApex apex = FanApex::centroid);

Rational simplex_volume(const std::vector<RationalVector>& corners);

/// Vertices of {x : hrep}, by intersecting every d-subset of the
/// hyperplanes. Assumes the set is bounded.
std::vector<RationalVector> enumerate_vertices(std::size_t dim, const std::vector<Inequality>& hrep);

RationalPolytope convex_hull(std::vector<RationalVector> points);

}  // namespace okdh
