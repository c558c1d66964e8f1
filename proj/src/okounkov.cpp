#include "okdh/okounkov.hpp"

#include <algorithm>
#include <set>

#include "okdh/linalg.hpp"

namespace okdh {

namespace {

struct InverseFlag {
  RationalMatrix inv_t;  // M^{-T}
  RationalVector shift;  // c
};

InverseFlag invert(const FlagMap& f) {
  auto inv = inverse(to_rational(f.matrix));
  if (!inv) throw ValidationError("flag map is singular");
  RationalVector c;
  for (const auto& v : f.translation) c.emplace_back(v);
  return {transpose(*inv), std::move(c)};
}

}  // namespace

RationalPolytope okounkov_body(const ToricModel& model) {
  // <n, u> >= r with u = M^{-1}(x - c)  <=>  <M^{-T} n, x> >= r + <M^{-T} n, c>
  const auto f = invert(model.flag_map());
  std::vector<Inequality> h;
  for (const auto& i : model.polytope().hrep()) {
    RationalVector n = multiply(f.inv_t, i.normal);
    Rational r = i.rhs + dot(n, f.shift);
    h.push_back({std::move(n), std::move(r)});
  }
  return RationalPolytope::from_hrep(model.dim(), std::move(h));
}

ConcaveTransform::ConcaveTransform(const WeightFiltration& filt)
    : domain_(okounkov_body(filt.model())), max_(filt.a_max_limit()) {
  const auto f = invert(filt.model().flag_map());
  for (const auto& p : filt.pieces()) {
    RationalVector a = multiply(f.inv_t, p.slope);
    Rational b = p.offset - dot(a, f.shift);
    pieces_.push_back({std::move(a), std::move(b)});
  }
}

Rational ConcaveTransform::eval_unchecked(std::span<const Rational> x) const {
  Rational best;
  bool first = true;
  for (const auto& p : pieces_) {
    Rational w = dot(p.slope, x) + p.offset;
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

Rational ConcaveTransform::operator()(std::span<const Rational> x) const {
  if (x.size() != domain_.dim() || !domain_.contains(x)) {
    throw ValidationError("concave transform evaluated outside the Okounkov body");
  }
  return eval_unchecked(x);
}

RationalPolytope ConcaveTransform::superlevel_set(const Rational& t) const {
  std::vector<Inequality> extra;
  for (const auto& p : pieces_) extra.push_back({p.slope, t - p.offset});
  return domain_.intersected(extra);
}

RationalPolytope ConcaveTransform::region_under_graph() const {
  return okdh::region_under_graph(domain_, pieces_);
}

Rational concave_transform_eval(const WeightFiltration& filt, std::span<const Rational> x) {
  return ConcaveTransform(filt)(x);
}

RationalPolytope slice_body(const WeightFiltration& filt, const Rational& t) {
  return ConcaveTransform(filt).superlevel_set(t);
}

// ---------------------------------------------------------------------------

SliceVolumeFunction::SliceVolumeFunction(PiecewisePolynomial h, Rational total)
    : h_(std::move(h)), total_(std::move(total)) {
  if (h_.breakpoints.empty() || h_.pieces.size() + 1 != h_.breakpoints.size()) {
    throw ValidationError("malformed slice volume function");
  }
}

Rational SliceVolumeFunction::operator()(const Rational& t) const {
  if (t <= 0) return total_;
  if (t > a_max()) return 0;
  return h_.pieces[h_.piece_index(t)](t);
}

SliceVolumeFunction slice_volume_function(const WeightFiltration& filt) {
  const ConcaveTransform g(filt);
  const std::size_t d = filt.dim();
  const Rational total = volume(g.domain());

  std::set<Rational> heights;
  const auto region = g.region_under_graph();
  for (const auto& v : region.vertices()) heights.insert(v.back());
  PiecewisePolynomial h;
  h.breakpoints.assign(heights.begin(), heights.end());
  if (h.breakpoints.front() != 0 || h.breakpoints.back() != g.max()) {
    throw InvariantViolation("filtered body heights do not span [0, a_max]");
  }

  const long samples = static_cast<long>(d) + 2;
  for (std::size_t i = 0; i + 1 < h.breakpoints.size(); ++i) {
    const Rational& lo = h.breakpoints[i];
    const Rational& hi = h.breakpoints[i + 1];
    RationalVector xs, ys;
    for (long k = 1; k <= samples; ++k) {
      Rational t = lo + (hi - lo) * ratio(k, samples + 1);
      ys.push_back(volume(g.superlevel_set(t)));
      xs.push_back(std::move(t));
    }
    const Rational check_x = xs.back(), check_y = ys.back();
    xs.pop_back();
    ys.pop_back();
    Polynomial p = Polynomial::interpolate(xs, ys);
    if (p(check_x) != check_y || p.degree() > static_cast<int>(d)) {
      throw InvariantViolation("slice volume is not a single polynomial on [" + to_string(lo) +
                               ", " + to_string(hi) + "]");
    }
    h.pieces.push_back(std::move(p));
  }
  return SliceVolumeFunction(std::move(h), total);
}

RationalPolytope filtered_body(const WeightFiltration& filt) {
  return ConcaveTransform(filt).region_under_graph();
}

FilteredBodyVolume filtered_body_volume_routes(const WeightFiltration& filt) {
  return {volume(filtered_body(filt)), slice_volume_function(filt).integral()};
}

Rational filtered_body_volume(const WeightFiltration& filt) {
  auto r = filtered_body_volume_routes(filt);
  if (r.by_triangulation != r.by_layer_cake) {
    throw InvariantViolation("filtered body volume mismatch: triangulation " +
                             to_string(r.by_triangulation) + " vs layer cake " +
                             to_string(r.by_layer_cake));
  }
  return r.by_triangulation;
}

// ---------------------------------------------------------------------------

bool SemigroupSample::contains(std::int64_t m, const RationalVector& x) const {
  return std::binary_search(points.begin(), points.end(), std::make_pair(m, x));
}

SemigroupSample semigroup_sample(const WeightFiltration& filt, const Rational& t,
                                 std::int64_t m_max) {
  if (m_max < 1) throw ValidationError("m_max must be >= 1, got " + std::to_string(m_max));
  SemigroupSample s{t, m_max, {}};
  const auto& flag = filt.model().flag_map();
  for (std::int64_t m = 1; m <= m_max; ++m) {
    for (const auto& u : filt.model().graded_piece(m).basis) {
      if (filt.weight_unchecked(u, m) >= t * m) s.points.emplace_back(m, flag.valuation(u, m));
    }
  }
  std::sort(s.points.begin(), s.points.end());
  return s;
}

RationalPolytope semigroup_oracle(const WeightFiltration& filt, const Rational& t,
                                  std::int64_t m_max) {
  if (m_max < 1) throw ValidationError("m_max must be >= 1, got " + std::to_string(m_max));
  const auto& flag = filt.model().flag_map();
  std::vector<RationalVector> pts;
  for (std::int64_t m = m_max / 2 + 1; m <= m_max; ++m) {
    for (const auto& u : filt.model().graded_piece(m).basis) {
      if (filt.weight_unchecked(u, m) < t * m) continue;
      auto x = flag.valuation(u, m);
      for (auto& c : x) c /= m;
      pts.push_back(std::move(x));
    }
  }
  if (pts.empty()) return RationalPolytope::empty(filt.dim());
  return convex_hull(std::move(pts));
}

Rational normalized_filtered_dim(const VanishingNumbers& vn, std::size_t d, const Rational& t) {
  return Rational(static_cast<long>(vn.filtered_dim(t * vn.m))) /
         pow(Rational(vn.m), static_cast<unsigned>(d));
}

Rational normalized_filtered_dim(const WeightFiltration& filt, std::int64_t m, const Rational& t) {
  return normalized_filtered_dim(filt.vanishing_numbers(m), filt.dim(), t);
}

}  // namespace okdh
