#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "okdh/model.hpp"

namespace okdh {

/// Affine form (u, m) -> <slope, u> + offset * m, homogeneous in (u, m).
struct AffinePiece {
  RationalVector slope;
  Rational offset;

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Sorted vanishing numbers a_0(m) <= ... <= a_{n_m}(m) at one level.
/// Repeated values are kept; length is h0(m).
struct VanishingNumbers {
  std::int64_t m = 0;
  RationalVector values;

  const Rational& a_min() const { return values.front(); }
  const Rational& a_max() const { return values.back(); }
  Rational mass_plus() const;
  /// dim F^t R_m: number of values >= t.
  std::size_t filtered_dim(const Rational& t) const;
};

/// {(x, s) : x in domain, 0 <= s <= min_i(<slope_i, x> + offset_i)} in one
/// dimension higher. The weight must be non-negative on the domain.
RationalPolytope region_under_graph(const RationalPolytope& domain,
                                    const std::vector<AffinePiece>& pieces);

/// Multiplicative R-filtration of the section ring given by a concave
/// piecewise-linear weight w(u, m) = min_i(<a_i, u> + b_i m):
///   F^t R_m = span{ monomials u in mP : w(u, m) >= t }.
class WeightFiltration {
 public:
  /// Rejects an empty piece list, mismatched dimensions, and weights that are
  /// negative at some vertex of P (the diagnostic names the vertex).
  WeightFiltration(ToricModel model, std::vector<AffinePiece> pieces);

  static WeightFiltration zero(ToricModel model);

  const ToricModel& model() const { return model_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  std::size_t dim() const { return model_.dim(); }

  /// Throws if u is not a lattice point of mP.
  Rational weight(const LatticePoint& u, std::int64_t m) const;
  Rational weight_unchecked(const LatticePoint& u, std::int64_t m) const;
  /// Homogenized weight min_i(<a_i, x> + b_i) at a point of P.
  Rational homogeneous_weight(std::span<const Rational> x) const;

  std::size_t filtered_dim(std::int64_t m, const Rational& t) const;
  VanishingNumbers vanishing_numbers(std::int64_t m) const;
  Rational a_max(std::int64_t m) const { return vanishing_numbers(m).a_max(); }
  Rational a_min(std::int64_t m) const { return vanishing_numbers(m).a_min(); }
  Rational mass_plus(std::int64_t m) const { return vanishing_numbers(m).mass_plus(); }

  /// lim a_max(m)/m = sup a_max(m)/m, i.e. the maximum of the homogenized
  /// weight over P. Also serves as the linear-boundedness constant.
  const Rational& a_max_limit() const { return a_max_limit_; }

 private:
  ToricModel model_;
  std::vector<AffinePiece> pieces_;
  Rational a_max_limit_;
};

}  // namespace okdh
