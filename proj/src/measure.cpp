#include "okdh/measure.hpp"

#include <algorithm>
#include <set>

#include "okdh/okounkov.hpp"
#include "okdh/parallel.hpp"

namespace okdh {

// ---------------------------------------------------------------------------
// DiscreteMeasure

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.location < b.location; });
  for (auto& a : atoms) {
    if (a.mass <= 0) {
      throw ValidationError("atom at " + to_string(a.location) + " has non-positive mass " +
                            to_string(a.mass));
    }
    if (!atoms_.empty() && atoms_.back().location == a.location) atoms_.back().mass += a.mass;
    else atoms_.push_back(std::move(a));
  }
}

Rational DiscreteMeasure::total_mass() const {
  Rational s = 0;
  for (const auto& a : atoms_) s += a.mass;
  return s;
}

Rational DiscreteMeasure::expectation() const {
  Rational s = 0;
  for (const auto& a : atoms_) s += a.location * a.mass;
  return s;
}

Rational DiscreteMeasure::cdf(const Rational& t) const {
  Rational s = 0;
  for (const auto& a : atoms_) {
    if (a.location > t) break;
    s += a.mass;
  }
  return s;
}

Rational DiscreteMeasure::cdf_before(const Rational& t) const {
  Rational s = 0;
  for (const auto& a : atoms_) {
    if (a.location >= t) break;
    s += a.mass;
  }
  return s;
}

DiscreteMeasure DiscreteMeasure::scaled(const Rational& c) const {
  std::vector<Atom> out = atoms_;
  for (auto& a : out) a.mass *= c;
  return DiscreteMeasure(std::move(out));
}

// ---------------------------------------------------------------------------
// PiecewisePolyMeasure

PiecewisePolyMeasure::PiecewisePolyMeasure(PiecewisePolynomial density, std::optional<Atom> atom)
    : density_(std::move(density)), atom_(std::move(atom)) {
  if (density_.breakpoints.empty() || density_.pieces.size() + 1 != density_.breakpoints.size()) {
    throw ValidationError("density needs one polynomial per interval");
  }
  if (!std::is_sorted(density_.breakpoints.begin(), density_.breakpoints.end()) ||
      std::adjacent_find(density_.breakpoints.begin(), density_.breakpoints.end()) !=
          density_.breakpoints.end()) {
    throw ValidationError("density breakpoints must be strictly increasing");
  }
  if (atom_ && atom_->mass <= 0) throw ValidationError("atom mass must be positive");
}

bool operator==(const PiecewisePolyMeasure& a, const PiecewisePolyMeasure& b) {
  return a.density_.breakpoints == b.density_.breakpoints &&
         a.density_.pieces == b.density_.pieces && a.atom_ == b.atom_;
}

Rational PiecewisePolyMeasure::continuous_cdf(const Rational& t) const {
  Rational s = 0;
  for (std::size_t i = 0; i < density_.pieces.size(); ++i) {
    const Rational& lo = density_.breakpoints[i];
    if (t <= lo) break;
    const Rational hi = std::min(t, density_.breakpoints[i + 1]);
    s += density_.pieces[i].integral(lo, hi);
  }
  return s;
}

Rational PiecewisePolyMeasure::cdf(const Rational& t) const {
  Rational s = continuous_cdf(t);
  if (atom_ && atom_->location <= t) s += atom_->mass;
  return s;
}

Rational PiecewisePolyMeasure::cdf_before(const Rational& t) const {
  Rational s = continuous_cdf(t);
  if (atom_ && atom_->location < t) s += atom_->mass;
  return s;
}

Rational PiecewisePolyMeasure::density_at(const Rational& t) const {
  if (density_.pieces.empty() || t < density_.breakpoints.front() ||
      t > density_.breakpoints.back()) {
    return 0;
  }
  return density_.pieces[density_.piece_index(t)](t);
}

Rational PiecewisePolyMeasure::total_mass() const {
  Rational s = density_.integral();
  if (atom_) s += atom_->mass;
  return s;
}

Rational PiecewisePolyMeasure::expectation() const {
  const Polynomial t = Polynomial::monomial(1, 1);
  Rational s = 0;
  for (std::size_t i = 0; i < density_.pieces.size(); ++i) {
    s += (t * density_.pieces[i]).integral(density_.breakpoints[i], density_.breakpoints[i + 1]);
  }
  if (atom_) s += atom_->location * atom_->mass;
  return s;
}

PiecewisePolyMeasure PiecewisePolyMeasure::scaled(const Rational& c) const {
  if (c <= 0) throw ValidationError("measure scale must be positive");
  PiecewisePolynomial d = density_;
  for (auto& p : d.pieces) p = p * c;
  std::optional<Atom> a = atom_;
  if (a) a->mass *= c;
  return PiecewisePolyMeasure(std::move(d), std::move(a));
}

Rational total_mass(const Measure& m) {
  return std::visit([](const auto& x) { return x.total_mass(); }, m);
}

Rational expectation(const Measure& m) {
  return std::visit([](const auto& x) { return x.expectation(); }, m);
}

// ---------------------------------------------------------------------------
// measures of a filtration

DiscreteMeasure nu_m(const VanishingNumbers& vn) {
  const Rational mass = ratio(1, static_cast<long>(vn.values.size()));
  std::vector<Atom> atoms;
  atoms.reserve(vn.values.size());
  for (const auto& a : vn.values) atoms.push_back({a / vn.m, mass});
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure nu_m(const WeightFiltration& filt, std::int64_t m) {
  return nu_m(filt.vanishing_numbers(m));
}

DiscreteMeasure mu_m(const WeightFiltration& filt, std::int64_t m) {
  const auto vn = filt.vanishing_numbers(m);
  const Rational scale =
      Rational(static_cast<long>(vn.values.size())) / pow(Rational(m), static_cast<unsigned>(filt.dim()));
  return nu_m(vn).scaled(scale);
}

PiecewisePolyMeasure limit_measure_mu(const WeightFiltration& filt) {
  const auto h = slice_volume_function(filt);
  PiecewisePolynomial density;
  density.breakpoints = h.breakpoints();
  for (const auto& p : h.piecewise().pieces) density.pieces.push_back(-p.derivative());
  std::optional<Atom> atom;
  if (const Rational top = h.mass_at_max(); top > 0) atom = Atom{h.a_max(), top};
  return PiecewisePolyMeasure(std::move(density), std::move(atom));
}

PiecewisePolyMeasure limit_measure_nu(const WeightFiltration& filt) {
  const Rational scale = factorial(static_cast<unsigned>(filt.dim())) / filt.model().volume_of_L();
  return limit_measure_mu(filt).scaled(scale);
}

// ---------------------------------------------------------------------------
// Kolmogorov distance

namespace {

void add_candidates(const Measure& m, std::set<Rational>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DiscreteMeasure>) {
          for (const auto& a : x.atoms()) out.insert(a.location);
        } else {
          out.insert(x.breakpoints().begin(), x.breakpoints().end());
          if (x.atom()) out.insert(x.atom()->location);
        }
      },
      m);
}

// Interior critical points of F_A - F_B when both are continuous: roots of
// the density difference.
void add_critical_points(const PiecewisePolyMeasure& a, const PiecewisePolyMeasure& b,
                         std::set<Rational>& candidates) {
  const std::vector<Rational> grid(candidates.begin(), candidates.end());
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Rational mid = (grid[i] + grid[i + 1]) / 2;
    auto piece = [&](const PiecewisePolyMeasure& m) {
      const auto& bp = m.breakpoints();
      if (m.density().pieces.empty() || mid < bp.front() || mid > bp.back()) return Polynomial();
      return m.density().pieces[m.density().piece_index(mid)];
    };
    const Polynomial diff = piece(a) - piece(b);
    if (diff.degree() <= 0) continue;
    if (diff.degree() > 1) {
      throw ValidationError(
          "kolmogorov distance between continuous measures needs a piecewise linear density "
          "difference");
    }
    const Rational root = -diff.coefficients()[0] / diff.coefficients()[1];
    if (root > grid[i] && root < grid[i + 1]) candidates.insert(root);
  }
}

}  // namespace

Rational kolmogorov_distance(const Measure& a, const Measure& b) {
  const Rational ma = total_mass(a), mb = total_mass(b);
  if (ma != 1 || mb != 1) {
    throw ValidationError("kolmogorov distance needs probability measures, got total masses " +
                          to_string(ma) + " and " + to_string(mb));
  }
  std::set<Rational> candidates;
  add_candidates(a, candidates);
  add_candidates(b, candidates);
  if (std::holds_alternative<PiecewisePolyMeasure>(a) &&
      std::holds_alternative<PiecewisePolyMeasure>(b)) {
    const auto& pa = std::get<PiecewisePolyMeasure>(a);
    const auto& pb = std::get<PiecewisePolyMeasure>(b);
    if (pa == pb) return 0;
    add_critical_points(pa, pb, candidates);
  }
  auto cdf = [](const Measure& m, const Rational& t) {
    return std::visit([&](const auto& x) { return x.cdf(t); }, m);
  };
  auto before = [](const Measure& m, const Rational& t) {
    return std::visit([&](const auto& x) { return x.cdf_before(t); }, m);
  };
  Rational best = 0;
  for (const auto& t : candidates) {
    best = std::max(best, Rational(abs(cdf(a, t) - cdf(b, t))));
    best = std::max(best, Rational(abs(before(a, t) - before(b, t))));
  }
  return best;
}

std::vector<SweepRow> convergence_sweep(const WeightFiltration& filt,
                                        const std::vector<std::int64_t>& m_list) {
  if (m_list.empty()) throw ValidationError("m_list must be nonempty");
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 1) throw ValidationError("m_list entries must be >= 1, got " + std::to_string(m_list[i]));
    if (i > 0 && m_list[i] <= m_list[i - 1]) {
      throw ValidationError("m_list must be strictly increasing");
    }
  }
  const Measure limit = limit_measure_nu(filt);
  return parallel_map(m_list.size(), [&](std::size_t i) {
    const Measure nu = nu_m(filt, m_list[i]);
    return SweepRow{m_list[i], expectation(nu), kolmogorov_distance(nu, limit)};
  });
}

}  // namespace okdh
