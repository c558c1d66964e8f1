#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "okdh/filtration.hpp"
#include "okdh/polynomial.hpp"

namespace okdh {

/// A torus-invariant prime divisor E over X, entering only through its order
/// of vanishing on monomials: ord_E(u, m) = <normal, u> + offset * m.
class DivisorData {
 public:
  /// normal must be a nonzero primitive integer vector and ord_E must be
  /// non-negative on P.
  DivisorData(ToricModel model, IntegerVector normal, Integer offset);

  /// Accepts a single-piece filtration with integer data.
  static DivisorData from_filtration(const WeightFiltration& filt);

  const WeightFiltration& filtration() const { return filtration_; }
  const ToricModel& model() const { return filtration_.model(); }
  const IntegerVector& normal() const { return normal_; }
  const Integer& offset() const { return offset_; }
  std::size_t dim() const { return filtration_.dim(); }

 private:
  IntegerVector normal_;
  Integer offset_;
  WeightFiltration filtration_;
};

struct RestrictedCount {
  std::int64_t m = 0;
  Integer order;          // ceil(m t), the vanishing order actually used
  bool rounded = false;   // m t was not an integer
  std::size_t count = 0;  // h0(X|E, mL - order E)
};

/// Number of degree-m monomials vanishing to order exactly ceil(mt) along E;
/// these span the image of restricting F^{mt} R_m to E.
RestrictedCount restricted_h0(const DivisorData& div, std::int64_t m, const Rational& t);

/// (d-1)!/m^{d-1} h0(X|E, mL - mtE).
Rational restricted_volume_estimate(const DivisorData& div, std::int64_t m, const Rational& t);

/// limsup proxy over a finite increasing list of levels: the supremum of the
/// estimates over the later half of the list.
Rational restricted_volume_limsup(const DivisorData& div, const Rational& t,
                                  const std::vector<std::int64_t>& m_list);

/// t -> Vol(L - tE) = d! vol{ord_E >= t} on [0, a_max].
class VolumeFunction {
 public:
  VolumeFunction(PiecewisePolynomial vol, Rational vol_L);

  const PiecewisePolynomial& piecewise() const { return vol_; }
  const Rational& a_max() const { return vol_.breakpoints.back(); }
  Rational operator()(const Rational& t) const;
  /// Right derivative on [0, a_max).
  Rational derivative(const Rational& t) const;
  /// sup{t : Vol(L - tE) > 0}.
  Rational big_threshold() const;

 private:
  PiecewisePolynomial vol_;
  Rational vol_L_;
};

VolumeFunction volume_function(const DivisorData& div);

/// Vol_{X|E}(L - tE) = -(1/d) d/dt Vol(L - tE) for t in [0, a_max).
Rational restricted_volume(const DivisorData& div, const Rational& t);

/// Vol_{X|E}(L - tE) on [0, a_max] computed independently of the volume
/// function: (d-1)! times the lattice-normalized volume of the cross-section
/// {ord_E = t} of P.
PiecewisePolynomial restricted_volume_function(const DivisorData& div);

struct Theorem5Interval {
  Rational lo, hi;
  Polynomial nu_density;          // density of the limit measure nu
  Polynomial restricted_density;  // d * Vol_{X|E}(L - tE) / Vol(L)
  bool pass = false;
};

struct Theorem5Report {
  std::vector<Theorem5Interval> intervals;
  bool atom_free = false;  // nu has no atom
  Rational a_max_limit;
  Rational big_threshold;  // sup{t : Vol(L - tE) > 0}
  bool threshold_pass = false;

  bool passed() const;
  std::string to_string() const;
};

/// Compares the limit measure with d Vol_{X|E}(L - tE)/Vol(L) dt interval by
/// interval, as exact polynomials, and a_max with the bigness threshold.
Theorem5Report verify_theorem_5(const DivisorData& div);

}  // namespace okdh
