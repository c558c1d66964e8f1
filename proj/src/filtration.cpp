#include "okdh/filtration.hpp"

#include <algorithm>

namespace okdh {

namespace {

void require_level(std::int64_t m) {
  if (m < 1) throw ValidationError("level m must be >= 1, got " + std::to_string(m));
}

std::string format_point(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

Rational VanishingNumbers::mass_plus() const {
  Rational s = 0;
  for (const auto& a : values) {
    if (a > 0) s += a;
  }
  return s;
}

std::size_t VanishingNumbers::filtered_dim(const Rational& t) const {
  auto it = std::lower_bound(values.begin(), values.end(), t);
  return static_cast<std::size_t>(values.end() - it);
}

RationalPolytope region_under_graph(const RationalPolytope& domain,
                                    const std::vector<AffinePiece>& pieces) {
  const std::size_t d = domain.dim();
  std::vector<Inequality> h;
  for (const auto& i : domain.hrep()) {
    RationalVector n = i.normal;
    n.push_back(0);
    h.push_back({std::move(n), i.rhs});
  }
  RationalVector up(d + 1);
  up[d] = 1;
  h.push_back({up, 0});
  for (const auto& p : pieces) {
    RationalVector n = p.slope;
    n.push_back(-1);
    h.push_back({std::move(n), -p.offset});
  }
  return RationalPolytope::from_hrep(d + 1, std::move(h));
}

WeightFiltration::WeightFiltration(ToricModel model, std::vector<AffinePiece> pieces)
    : model_(std::move(model)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw ValidationError("filtration needs at least one piece");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].slope.size() != model_.dim()) {
      throw ValidationError("filtration piece " + std::to_string(i) + " has slope of length " +
                            std::to_string(pieces_[i].slope.size()) + ", model dimension is " +
                            std::to_string(model_.dim()));
    }
  }
  // w is concave, so its minimum over P is attained at a vertex.
  for (const auto& v : model_.polytope().vertices()) {
    const Rational w = homogeneous_weight(v);
    if (w < 0) {
      throw ValidationError("filtration weight is negative (" + to_string(w) + ") at vertex " +
                            format_point(v) + " of P; F^0 R_m = R_m requires w >= 0");
    }
  }
  // The maximum is not at a vertex of P in general; take it over the region
  // under the graph.
  const auto region = region_under_graph(model_.polytope(), pieces_);
  a_max_limit_ = 0;
  for (const auto& v : region.vertices()) a_max_limit_ = std::max(a_max_limit_, v.back());
}

WeightFiltration WeightFiltration::zero(ToricModel model) {
  const std::size_t d = model.dim();
  return WeightFiltration(std::move(model), {AffinePiece{RationalVector(d), 0}});
}

Rational WeightFiltration::weight_unchecked(const LatticePoint& u, std::int64_t m) const {
  Rational best;
  bool first = true;
  for (const auto& p : pieces_) {
    Rational w = p.offset * m;
    for (std::size_t i = 0; i < u.coords.size(); ++i) w += p.slope[i] * u.coords[i];
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

Rational WeightFiltration::weight(const LatticePoint& u, std::int64_t m) const {
  require_level(m);
  if (u.dim() != dim() || !model_.polytope().dilated(m).contains(u.to_rational())) {
    throw ValidationError("point " + format_point(u.to_rational()) + " is not in " +
                          std::to_string(m) + "P");
  }
  return weight_unchecked(u, m);
}

Rational WeightFiltration::homogeneous_weight(std::span<const Rational> x) const {
  Rational best;
  bool first = true;
  for (const auto& p : pieces_) {
    Rational w = dot(p.slope, x) + p.offset;
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

std::size_t WeightFiltration::filtered_dim(std::int64_t m, const Rational& t) const {
  require_level(m);
  std::size_t n = 0;
  for (const auto& u : model_.graded_piece(m).basis) {
    if (weight_unchecked(u, m) >= t) ++n;
  }
  return n;
}

VanishingNumbers WeightFiltration::vanishing_numbers(std::int64_t m) const {
  require_level(m);
  VanishingNumbers out{m, {}};
  const auto piece = model_.graded_piece(m);
  out.values.reserve(piece.basis.size());
  for (const auto& u : piece.basis) out.values.push_back(weight_unchecked(u, m));
  std::stable_sort(out.values.begin(), out.values.end());
  return out;
}

}  // namespace okdh
