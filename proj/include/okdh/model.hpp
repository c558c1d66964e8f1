#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "okdh/linalg.hpp"
#include "okdh/polytope.hpp"

namespace okdh {

/// Affine unimodular map u -> M u + c on exponent vectors. Encodes the
/// valuation attached to a torus-invariant admissible flag.
struct FlagMap {
  IntegerMatrix matrix;
  IntegerVector translation;

  static FlagMap identity(std::size_t d);

  std::size_t dim() const { return matrix.size(); }
  Integer determinant() const;
  RationalVector apply(std::span<const Rational> u) const;
  RationalVector apply(const LatticePoint& u) const { return apply(u.to_rational()); }
  /// Valuation vector of the monomial u in R_m: M u + m c, so that
  /// valuation(u, m)/m = apply(u/m).
  RationalVector valuation(const LatticePoint& u, std::int64_t m) const;
};

/// Monomial basis of R_m = H^0(X, mL).
struct GradedPiece {
  std::int64_t level = 0;
  std::vector<LatticePoint> basis;
};

/// A polarized toric variety (X, L) given by its moment polytope P, with
/// sections of mL identified with the lattice points of mP.
class ToricModel {
 public:
  /// (P^d, O(k)): P = k times the standard simplex.
  static ToricModel projective_space(int d, int k);

  /// Validates that P is full-dimensional with integer vertices and that the
  /// flag map is unimodular of matching dimension.
  static ToricModel from_polytope(const RationalPolytope& p, FlagMap flag);
  static ToricModel from_polytope(const RationalPolytope& p) {
    return from_polytope(p, FlagMap::identity(p.dim()));
  }

  /// Hirzebruch surface F_a polarized by the trapezoid
  /// conv{(0,0), (a+b,0), (0,1), (b,1)}.
  static ToricModel hirzebruch(int a, int b);

  static ToricModel product(const ToricModel& x, const ToricModel& y);

  const RationalPolytope& polytope() const { return polytope_; }
  std::size_t dim() const { return polytope_.dim(); }
  const FlagMap& flag_map() const { return flag_; }

  /// m = 0 yields the constants {0}.
  GradedPiece graded_piece(std::int64_t m) const;
  std::size_t h0(std::int64_t m) const { return graded_piece(m).basis.size(); }

  /// Vol(L) = d! vol(P).
  Rational volume_of_L() const;

 private:
  ToricModel(RationalPolytope p, FlagMap flag) : polytope_(std::move(p)), flag_(std::move(flag)) {}
  RationalPolytope polytope_;
  FlagMap flag_;
};

}  // namespace okdh
