#include "okdh/polynomial.hpp"

#include <algorithm>

namespace okdh {

Polynomial::Polynomial(RationalVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  RationalVector v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::interpolate(const RationalVector& xs, const RationalVector& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw ValidationError("interpolation needs matching, nonempty sample lists");
  }
  Polynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis = constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw ValidationError("interpolation nodes must be distinct");
      basis = basis * Polynomial(RationalVector{-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    out = out + basis * (ys[i] / denom);
  }
  return out;
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  RationalVector v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative() const {
  RationalVector v(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return Polynomial(std::move(v));
}

Rational Polynomial::integral(const Rational& a, const Rational& b) const {
  const Polynomial f = antiderivative();
  return f(b) - f(a);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  RationalVector v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  RationalVector v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  RationalVector v = coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (i == 0) {
      out += okdh::to_string(mag);
      continue;
    }
    if (mag != 1) out += okdh::to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::size_t PiecewisePolynomial::piece_index(const Rational& t) const {
  if (pieces.empty()) throw ValidationError("piecewise polynomial has no pieces");
  if (t < breakpoints.front() || t > breakpoints.back()) {
    throw ValidationError("t = " + okdh::to_string(t) + " outside [" +
                          okdh::to_string(breakpoints.front()) + ", " +
                          okdh::to_string(breakpoints.back()) + "]");
  }
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
  idx = idx == 0 ? 0 : idx - 1;
  return std::min(idx, pieces.size() - 1);
}

Rational PiecewisePolynomial::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    total += pieces[i].integral(breakpoints[i], breakpoints[i + 1]);
  }
  return total;
}

}  // namespace okdh
