#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "okdh/filtration.hpp"
#include "okdh/polynomial.hpp"

namespace okdh {

/// Delta(L): the moment polytope pushed through the flag map.
RationalPolytope okounkov_body(const ToricModel& model);

/// G_F on Delta(L): the filtration's homogenized weight written in flag
/// coordinates, G(x) = min_i(<a_i', x> + b_i').
class ConcaveTransform {
 public:
  explicit ConcaveTransform(const WeightFiltration& filt);

  const RationalPolytope& domain() const { return domain_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const Rational& max() const { return max_; }

  /// Throws if x is outside Delta(L).
  Rational operator()(std::span<const Rational> x) const;
  Rational eval_unchecked(std::span<const Rational> x) const;

  /// {x in Delta(L) : G(x) >= t}.
  RationalPolytope superlevel_set(const Rational& t) const;

  /// {(x, t) : x in Delta(L), 0 <= t <= G(x)}.
  RationalPolytope region_under_graph() const;

 private:
  RationalPolytope domain_;
  std::vector<AffinePiece> pieces_;
  Rational max_;
};

Rational concave_transform_eval(const WeightFiltration& filt, std::span<const Rational> x);

/// Okounkov body of R^t_. , realized as the superlevel set {G >= t}.
RationalPolytope slice_body(const WeightFiltration& filt, const Rational& t);

/// h(t) = vol{G >= t}: continuous and piecewise polynomial of degree <= d on
/// [0, a_max], equal to vol Delta(L) for t <= 0 and to 0 for t > a_max.
/// When a_max = 0 there are no pieces and h jumps straight from vol Delta(L)
/// to 0.
class SliceVolumeFunction {
 public:
  SliceVolumeFunction(PiecewisePolynomial h, Rational total);

  const PiecewisePolynomial& piecewise() const { return h_; }
  const RationalVector& breakpoints() const { return h_.breakpoints; }
  const Rational& a_max() const { return h_.breakpoints.back(); }
  const Rational& total_volume() const { return total_; }

  Rational operator()(const Rational& t) const;

  /// h(a_max) = vol{G = a_max}; positive exactly when the pushforward measure
  /// has an atom at a_max.
  Rational mass_at_max() const { return (*this)(a_max()); }

  /// integral of h over [0, a_max].
  Rational integral() const { return h_.integral(); }

 private:
  PiecewisePolynomial h_;
  Rational total_;
};

/// Breakpoints are the heights of the vertices of the region under the graph
/// of G; on each interval the polynomial is interpolated from d+1 exact slice
/// volumes and confirmed on one more sample.
SliceVolumeFunction slice_volume_function(const WeightFiltration& filt);

/// The filtered Okounkov body {(x, t) : x in Delta(L), 0 <= t <= G(x)}.
RationalPolytope filtered_body(const WeightFiltration& filt);

struct FilteredBodyVolume {
  Rational by_triangulation;  // (d+1)-volume of the lifted body
  Rational by_layer_cake;     // integral of h over [0, a_max]
};

FilteredBodyVolume filtered_body_volume_routes(const WeightFiltration& filt);

/// Exact volume of the filtered body; throws InvariantViolation if the two
/// routes disagree.
Rational filtered_body_volume(const WeightFiltration& filt);

/// Elements (m, flag(u)) of the semigroup of R^t_. for m <= m_max.
struct SemigroupSample {
  Rational t;
  std::int64_t m_max = 0;
  std::vector<std::pair<std::int64_t, RationalVector>> points;

  bool contains(std::int64_t m, const RationalVector& x) const;
};

SemigroupSample semigroup_sample(const WeightFiltration& filt, const Rational& t,
                                 std::int64_t m_max);

/// Inner approximation of Delta(R^t_.): convex hull of flag(u)/m over the
/// semigroup elements with m <= m_max. Levels m <= m_max/2 are skipped since
/// (2m, 2u) is also a sample and gives the same point.
RationalPolytope semigroup_oracle(const WeightFiltration& filt, const Rational& t,
                                  std::int64_t m_max);

/// g_m(t) = m^{-d} dim F^{mt} R_m.
Rational normalized_filtered_dim(const WeightFiltration& filt, std::int64_t m, const Rational& t);
Rational normalized_filtered_dim(const VanishingNumbers& vn, std::size_t d, const Rational& t);

}  // namespace okdh
