#include "okdh/restricted_volume.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "okdh/linalg.hpp"
#include "okdh/measure.hpp"
#include "okdh/okounkov.hpp"

namespace okdh {

namespace {

std::vector<AffinePiece> single_piece(const IntegerVector& normal, const Integer& offset) {
  RationalVector a;
  for (const auto& c : normal) a.emplace_back(c);
  return {AffinePiece{std::move(a), Rational(offset)}};
}

const IntegerVector& validated(const IntegerVector& normal) {
  Integer g = 0;
  for (const auto& c : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw ValidationError("divisor weight is zero; E must be a nonzero divisor");
  if (g != 1) {
    throw ValidationError("divisor normal is not primitive (gcd " + g.get_str() +
                          "); ord_E of a prime divisor has a primitive normal");
  }
  return normal;
}

// Unimodular V with normal * V = e_1, built from integer column operations.
IntegerMatrix unimodular_completion(IntegerVector r) {
  const std::size_t d = r.size();
  IntegerMatrix v = identity_integer(d);
  auto column_op = [&](std::size_t j, std::size_t i, const Integer& q) {
    // column j -= q * column i
    r[j] -= q * r[i];
    for (std::size_t k = 0; k < d; ++k) v[k][j] -= q * v[k][i];
  };
  while (true) {
    std::size_t pivot = d;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (r[i] == 0) continue;
      ++nonzero;
      if (pivot == d || abs(r[i]) < abs(r[pivot])) pivot = i;
    }
    if (nonzero == 1) {
      if (r[pivot] < 0) {
        r[pivot] = -r[pivot];
        for (std::size_t k = 0; k < d; ++k) v[k][pivot] = -v[k][pivot];
      }
      if (pivot != 0) {
        std::swap(r[0], r[pivot]);
        for (std::size_t k = 0; k < d; ++k) std::swap(v[k][0], v[k][pivot]);
      }
      return v;
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (j == pivot || r[j] == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), r[j].get_mpz_t(), r[pivot].get_mpz_t());
      column_op(j, pivot, q);
    }
  }
}

// Lattice-normalized (d-1)-volume of {u in P : <normal, u> + offset = t}.
struct CrossSection {
  std::size_t d;
  std::vector<Inequality> rotated;  // P in coordinates y = V^{-1} u
  Integer offset;

  Rational operator()(const Rational& t) const {
    const Rational y1 = t - offset;
    if (d == 1) {
      RationalVector y{y1};
      for (const auto& h : rotated) {
        if (!h.satisfied_by(y)) return 0;
      }
      return 1;
    }
    std::vector<Inequality> section;
    for (const auto& h : rotated) {
      RationalVector n(h.normal.begin() + 1, h.normal.end());
      section.push_back({std::move(n), h.rhs - h.normal[0] * y1});
    }
    return volume(RationalPolytope::from_hrep(d - 1, std::move(section)));
  }
};

CrossSection cross_section(const DivisorData& div) {
  const std::size_t d = div.dim();
  const IntegerMatrix v = unimodular_completion(div.normal());
  const RationalMatrix vt = transpose(to_rational(v));
  CrossSection cs{d, {}, div.offset()};
  for (const auto& h : div.model().polytope().hrep()) cs.rotated.push_back({multiply(vt, h.normal), h.rhs});
  return cs;
}

}  // namespace

// ---------------------------------------------------------------------------

DivisorData::DivisorData(ToricModel model, IntegerVector normal, Integer offset)
    : normal_(validated(normal)),
      offset_(std::move(offset)),
      filtration_(std::move(model), single_piece(normal_, offset_)) {}

DivisorData DivisorData::from_filtration(const WeightFiltration& filt) {
  if (filt.pieces().size() != 1) {
    throw ValidationError("a divisor needs a single-piece weight, got " +
                          std::to_string(filt.pieces().size()) + " pieces");
  }
  const auto& p = filt.pieces().front();
  IntegerVector normal;
  for (std::size_t i = 0; i < p.slope.size(); ++i) {
    if (p.slope[i].get_den() != 1) {
      throw ValidationError("divisor weight coefficient a[" + std::to_string(i) + "] = " +
                            to_string(p.slope[i]) + " is not an integer");
    }
    normal.push_back(p.slope[i].get_num());
  }
  if (p.offset.get_den() != 1) {
    throw ValidationError("divisor weight offset b = " + to_string(p.offset) +
                          " is not an integer");
  }
  return DivisorData(filt.model(), std::move(normal), p.offset.get_num());
}

RestrictedCount restricted_h0(const DivisorData& div, std::int64_t m, const Rational& t) {
  if (m < 1) throw ValidationError("level m must be >= 1, got " + std::to_string(m));
  RestrictedCount out;
  out.m = m;
  const Rational mt = t * m;
  out.order = ceil(mt);
  out.rounded = mt != Rational(out.order);
  const Rational order(out.order);
  for (const auto& u : div.model().graded_piece(m).basis) {
    if (div.filtration().weight_unchecked(u, m) == order) ++out.count;
  }
  return out;
}

Rational restricted_volume_estimate(const DivisorData& div, std::int64_t m, const Rational& t) {
  const auto d = static_cast<unsigned>(div.dim());
  const auto c = restricted_h0(div, m, t);
  return factorial(d - 1) * Rational(static_cast<long>(c.count)) / pow(Rational(m), d - 1);
}

Rational restricted_volume_limsup(const DivisorData& div, const Rational& t,
                                  const std::vector<std::int64_t>& m_list) {
  if (m_list.empty()) throw ValidationError("m_list must be nonempty");
  Rational best = 0;
  for (std::size_t i = m_list.size() / 2; i < m_list.size(); ++i) {
    best = std::max(best, restricted_volume_estimate(div, m_list[i], t));
  }
  return best;
}

// ---------------------------------------------------------------------------

VolumeFunction::VolumeFunction(PiecewisePolynomial vol, Rational vol_L)
    : vol_(std::move(vol)), vol_L_(std::move(vol_L)) {}

Rational VolumeFunction::operator()(const Rational& t) const {
  if (t <= 0) return vol_L_;
  if (t > a_max()) return 0;
  return vol_.pieces[vol_.piece_index(t)](t);
}

Rational VolumeFunction::derivative(const Rational& t) const {
  if (t < 0 || t >= a_max()) {
    throw ValidationError("t = " + to_string(t) + " outside [0, " + to_string(a_max()) + ")");
  }
  return vol_.pieces[vol_.piece_index(t)].derivative()(t);
}

Rational VolumeFunction::big_threshold() const {
  for (std::size_t i = vol_.pieces.size(); i > 0; --i) {
    if (!vol_.pieces[i - 1].is_zero()) return vol_.breakpoints[i];
  }
  return 0;
}

VolumeFunction volume_function(const DivisorData& div) {
  const auto h = slice_volume_function(div.filtration());
  const Rational df = factorial(static_cast<unsigned>(div.dim()));
  PiecewisePolynomial vol = h.piecewise();
  for (auto& p : vol.pieces) p = p * df;
  return VolumeFunction(std::move(vol), div.model().volume_of_L());
}

Rational restricted_volume(const DivisorData& div, const Rational& t) {
  const auto vol = volume_function(div);
  return -vol.derivative(t) / static_cast<long>(div.dim());
}

PiecewisePolynomial restricted_volume_function(const DivisorData& div) {
  const std::size_t d = div.dim();
  const Rational a_max = div.filtration().a_max_limit();
  std::set<Rational> bps{Rational(0), a_max};
  for (const auto& v : div.model().polytope().vertices()) {
    const Rational w = div.filtration().homogeneous_weight(v);
    if (w <= a_max) bps.insert(w);
  }
  const CrossSection section = cross_section(div);
  const Rational df = factorial(static_cast<unsigned>(d - 1));
  PiecewisePolynomial out;
  out.breakpoints.assign(bps.begin(), bps.end());
  const long samples = static_cast<long>(d) + 1;
  for (std::size_t i = 0; i + 1 < out.breakpoints.size(); ++i) {
    const Rational& lo = out.breakpoints[i];
    const Rational& hi = out.breakpoints[i + 1];
    RationalVector xs, ys;
    for (long k = 1; k <= samples; ++k) {
      Rational t = lo + (hi - lo) * ratio(k, samples + 1);
      ys.push_back(df * section(t));
      xs.push_back(std::move(t));
    }
    const Rational cx = xs.back(), cy = ys.back();
    xs.pop_back();
    ys.pop_back();
    Polynomial p = Polynomial::interpolate(xs, ys);
    if (p(cx) != cy) {
      throw InvariantViolation("cross-section volume is not polynomial on [" + to_string(lo) +
                               ", " + to_string(hi) + "]");
    }
    out.pieces.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------

bool Theorem5Report::passed() const {
  return atom_free && threshold_pass && !intervals.empty() &&
         std::all_of(intervals.begin(), intervals.end(),
                     [](const Theorem5Interval& i) { return i.pass; });
}

std::string Theorem5Report::to_string() const {
  std::ostringstream os;
  for (const auto& i : intervals) {
    os << (i.pass ? "pass" : "FAIL") << " [" << okdh::to_string(i.lo) << ", "
       << okdh::to_string(i.hi) << "]  nu: " << i.nu_density.to_string()
       << "  d*Vol_X|E/Vol(L): " << i.restricted_density.to_string() << "\n";
  }
  os << (atom_free ? "pass" : "FAIL") << " limit measure has no atom\n";
  os << (threshold_pass ? "pass" : "FAIL") << " a_max = " << okdh::to_string(a_max_limit)
     << ", sup{t : Vol(L - tE) > 0} = " << okdh::to_string(big_threshold) << "\n";
  return os.str();
}

Theorem5Report verify_theorem_5(const DivisorData& div) {
  Theorem5Report report;
  const auto nu = limit_measure_nu(div.filtration());
  const auto restricted = restricted_volume_function(div);
  const Rational scale = Rational(static_cast<long>(div.dim())) / div.model().volume_of_L();

  std::set<Rational> grid(nu.breakpoints().begin(), nu.breakpoints().end());
  grid.insert(restricted.breakpoints.begin(), restricted.breakpoints.end());
  const RationalVector pts(grid.begin(), grid.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Theorem5Interval iv{pts[i], pts[i + 1], {}, {}, false};
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (!nu.density().pieces.empty()) {
      iv.nu_density = nu.density().pieces[nu.density().piece_index(mid)];
    }
    iv.restricted_density = restricted.pieces[restricted.piece_index(mid)] * scale;
    iv.pass = iv.nu_density == iv.restricted_density;
    report.intervals.push_back(std::move(iv));
  }
  report.atom_free = !nu.atom().has_value();
  report.a_max_limit = div.filtration().a_max_limit();
  report.big_threshold = volume_function(div).big_threshold();
  report.threshold_pass = report.a_max_limit == report.big_threshold;
  return report;
}

}  // namespace okdh
