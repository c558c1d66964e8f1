#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "okdh/filtration.hpp"
#include "okdh/polynomial.hpp"

namespace okdh {

struct Atom {
  Rational location;
  Rational mass;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite sum of point masses; locations strictly increasing, masses > 0.
class DiscreteMeasure {
 public:
  /// Atoms at equal locations are merged by summing their mass.
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  Rational total_mass() const;
  Rational expectation() const;
  Rational cdf(const Rational& t) const;         // mass of (-inf, t]
  Rational cdf_before(const Rational& t) const;  // mass of (-inf, t)
  DiscreteMeasure scaled(const Rational& c) const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Absolutely continuous part with a polynomial density on each interval of
/// a partition, plus at most one atom.
class PiecewisePolyMeasure {
 public:
  PiecewisePolyMeasure(PiecewisePolynomial density, std::optional<Atom> atom);

  const PiecewisePolynomial& density() const { return density_; }
  const RationalVector& breakpoints() const { return density_.breakpoints; }
  const std::optional<Atom>& atom() const { return atom_; }

  Rational total_mass() const;
  Rational expectation() const;
  Rational cdf(const Rational& t) const;
  Rational cdf_before(const Rational& t) const;
  /// Density at t, taken from the piece to the right at interior breakpoints.
  Rational density_at(const Rational& t) const;
  PiecewisePolyMeasure scaled(const Rational& c) const;

  friend bool operator==(const PiecewisePolyMeasure&, const PiecewisePolyMeasure&);

 private:
  Rational continuous_cdf(const Rational& t) const;
  PiecewisePolynomial density_;
  std::optional<Atom> atom_;
};

using Measure = std::variant<DiscreteMeasure, PiecewisePolyMeasure>;

Rational total_mass(const Measure& m);
Rational expectation(const Measure& m);

/// nu_m = (1/h0(m)) sum_j delta_{a_j(m)/m}.
DiscreteMeasure nu_m(const WeightFiltration& filt, std::int64_t m);
DiscreteMeasure nu_m(const VanishingNumbers& vn);

/// mu_m = (h0(m)/m^d) nu_m.
DiscreteMeasure mu_m(const WeightFiltration& filt, std::int64_t m);

/// mu = (G_F)_* lambda, lambda = Lebesgue measure on Delta(L). Density is
/// -h'(t) for the slice volume h; an atom appears only at a_max, when G is
/// constant at its maximum on a full-dimensional set.
PiecewisePolyMeasure limit_measure_mu(const WeightFiltration& filt);

/// nu = (d!/Vol(L)) mu, a probability measure.
PiecewisePolyMeasure limit_measure_nu(const WeightFiltration& filt);

/// sup_t |F_A(t) - F_B(t)| for probability measures. Exact whenever one side
/// is discrete; for two continuous measures the density difference must be
/// piecewise linear so that every candidate extremum is rational.
Rational kolmogorov_distance(const Measure& a, const Measure& b);

struct SweepRow {
  std::int64_t m = 0;
  Rational expectation;  // E(nu_m)
  Rational kolmogorov;   // distance(nu_m, nu)
};

/// Rows in the order of m_list, which must be nonempty and strictly
/// increasing. Levels are evaluated concurrently (see OKDH_THREADS).
std::vector<SweepRow> convergence_sweep(const WeightFiltration& filt,
                                        const std::vector<std::int64_t>& m_list);

}  // namespace okdh
