#include "okdh/rational.hpp"

#include <cctype>

namespace okdh {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(s)) {
      throw ValidationError("not a rational number: \"" + std::string(text) + "\"");
    }
    return Rational(parse_integer(s));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-') {
    throw ValidationError("not a rational number: \"" + std::string(text) + "\"");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_decimal(const Rational& q, int significant) {
  if (significant < 1) throw ValidationError("significant digits must be positive");
  if (q == 0) {
    return significant == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(significant - 1), '0');
  }
  const bool negative = q < 0;
  const Rational a = abs(q);

  // exponent e with 10^e <= a < 10^(e+1)
  long e = static_cast<long>(Integer(a.get_num()).get_str().size()) -
           static_cast<long>(Integer(a.get_den()).get_str().size());
  auto pow10 = [](long k) {
    Rational r(1);
    Integer ten = 10;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) r = Rational(p);
    else r = Rational(Integer(1), p);
    return r;
  };
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;

  // digits = round(a * 10^(significant-1-e))
  Rational scaled = a * pow10(significant - 1 - e);
  Integer digits = floor(scaled + Rational(1, 2));
  Integer limit;
  Integer ten = 10;
  mpz_pow_ui(limit.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(significant));
  if (digits >= limit) {
    digits /= 10;
    ++e;
  }
  std::string ds = digits.get_str();

  std::string out = negative ? "-" : "";
  if (e >= 21 || e < -7) {
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
    return out;
  }
  if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    return out;
  }
  const auto int_len = static_cast<std::size_t>(e + 1);
  if (int_len >= ds.size()) {
    out += ds + std::string(int_len - ds.size(), '0');
    return out;
  }
  out += ds.substr(0, int_len) + "." + ds.substr(int_len);
  return out;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw ValidationError("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace okdh
