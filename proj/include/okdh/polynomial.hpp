#pragma once

#include <string>
#include <vector>

#include "okdh/rational.hpp"

namespace okdh {

/// Univariate polynomial in t with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RationalVector coefficients);
  static Polynomial constant(const Rational& c) { return Polynomial(RationalVector{c}); }
  static Polynomial monomial(const Rational& c, unsigned degree);

  /// Unique polynomial of degree < xs.size() through the given samples.
  static Polynomial interpolate(const RationalVector& xs, const RationalVector& ys);

  const RationalVector& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial antiderivative() const;  // constant term zero
  Rational integral(const Rational& a, const Rational& b) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// e.g. "2 - 2*t + 1/3*t^2"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  RationalVector coeffs_;
};

/// A function on [breakpoints.front(), breakpoints.back()] given by one
/// polynomial per open interval between consecutive breakpoints.
struct PiecewisePolynomial {
  RationalVector breakpoints;
  std::vector<Polynomial> pieces;  // pieces.size() == breakpoints.size() - 1

  /// Index of the piece whose closed interval [t_i, t_{i+1}] contains t,
  /// preferring the piece to the right at interior breakpoints.
  std::size_t piece_index(const Rational& t) const;
  Rational integral() const;
};

}  // namespace okdh
