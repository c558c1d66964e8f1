#include "okdh/model.hpp"

namespace okdh {

FlagMap FlagMap::identity(std::size_t d) {
  return FlagMap{identity_integer(d), IntegerVector(d, 0)};
}

Integer FlagMap::determinant() const {
  const Rational det = okdh::determinant(to_rational(matrix));
  return det.get_num();
}

RationalVector FlagMap::apply(std::span<const Rational> u) const {
  if (u.size() != dim()) throw ValidationError("flag map applied to a point of wrong dimension");
  RationalVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational s = translation[i];
    for (std::size_t j = 0; j < dim(); ++j) s += matrix[i][j] * u[j];
    out[i] = s;
  }
  return out;
}

RationalVector FlagMap::valuation(const LatticePoint& u, std::int64_t m) const {
  if (u.dim() != dim()) throw ValidationError("flag map applied to a point of wrong dimension");
  RationalVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Integer s = translation[i] * m;
    for (std::size_t j = 0; j < dim(); ++j) s += matrix[i][j] * u.coords[j];
    out[i] = s;
  }
  return out;
}

ToricModel ToricModel::projective_space(int d, int k) {
  if (d < 1) throw ValidationError("projective space: d must be >= 1, got " + std::to_string(d));
  if (k < 1) throw ValidationError("projective space: k must be >= 1, got " + std::to_string(k));
  const auto n = static_cast<std::size_t>(d);
  std::vector<Inequality> h;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n);
    e[i] = 1;
    h.push_back({e, 0});
  }
  h.push_back({RationalVector(n, Rational(-1)), -k});
  return from_polytope(RationalPolytope::from_hrep(n, std::move(h)), FlagMap::identity(n));
}

ToricModel ToricModel::from_polytope(const RationalPolytope& p, FlagMap flag) {
  const std::size_t d = p.dim();
  if (!p.is_full_dimensional()) {
    throw ValidationError("model polytope must be full-dimensional: affine dimension " +
                          std::to_string(p.affine_dim()) + " in R^" + std::to_string(d));
  }
  for (const auto& v : p.vertices()) {
    for (const auto& c : v) {
      if (c.get_den() != 1) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
        throw ValidationError("model polytope has a non-integral vertex (" + s + ")");
      }
    }
  }
  if (flag.matrix.size() != d || flag.translation.size() != d) {
    throw ValidationError("flag_map must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  for (const auto& row : flag.matrix) {
    if (row.size() != d) {
      throw ValidationError("flag_map must be " + std::to_string(d) + "x" + std::to_string(d));
    }
  }
  const Integer det = flag.determinant();
  if (det != 1 && det != -1) {
    throw ValidationError("flag_map is not unimodular: determinant " + det.get_str());
  }
  return ToricModel(p, std::move(flag));
}

ToricModel ToricModel::hirzebruch(int a, int b) {
  if (a < 0 || b < 1) {
    throw ValidationError("hirzebruch: need a >= 0 and b >= 1, got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b));
  }
  auto p = RationalPolytope::from_vrep(2, {{0, 0}, {a + b, 0}, {0, 1}, {b, 1}});
  return from_polytope(p, FlagMap::identity(2));
}

ToricModel ToricModel::product(const ToricModel& x, const ToricModel& y) {
  const std::size_t dx = x.dim(), dy = y.dim(), d = dx + dy;
  std::vector<Inequality> h;
  for (const auto& i : x.polytope().hrep()) {
    RationalVector n(d);
    for (std::size_t k = 0; k < dx; ++k) n[k] = i.normal[k];
    h.push_back({n, i.rhs});
  }
  for (const auto& i : y.polytope().hrep()) {
    RationalVector n(d);
    for (std::size_t k = 0; k < dy; ++k) n[dx + k] = i.normal[k];
    h.push_back({n, i.rhs});
  }
  FlagMap f{IntegerMatrix(d, IntegerVector(d, 0)), IntegerVector(d, 0)};
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < dx; ++j) f.matrix[i][j] = x.flag_map().matrix[i][j];
    f.translation[i] = x.flag_map().translation[i];
  }
  for (std::size_t i = 0; i < dy; ++i) {
    for (std::size_t j = 0; j < dy; ++j) f.matrix[dx + i][dx + j] = y.flag_map().matrix[i][j];
    f.translation[dx + i] = y.flag_map().translation[i];
  }
  return from_polytope(RationalPolytope::from_hrep(d, std::move(h)), std::move(f));
}

GradedPiece ToricModel::graded_piece(std::int64_t m) const {
  if (m < 0) throw ValidationError("graded piece level must be >= 0, got " + std::to_string(m));
  if (m == 0) return {0, {LatticePoint{IntegerVector(dim(), 0)}}};
  return {m, lattice_points(polytope_, m)};
}

Rational ToricModel::volume_of_L() const {
  return factorial(static_cast<unsigned>(dim())) * volume(polytope_);
}

}  // namespace okdh
