#include "okdh/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "okdh/linalg.hpp"

namespace okdh {

// ---------------------------------------------------------------------------
// Inequality / LatticePoint

Inequality Inequality::normalized() const {
  Integer lcm = rhs.get_den();
  for (const auto& a : normal) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
  Integer g = 0;
  for (const auto& a : normal) {
    Integer n = a.get_num() * (lcm / a.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) g = 1;  // zero normal: keep the rhs as is, only clear denominators
  Rational scale(lcm, g);
  scale.canonicalize();
  Inequality out;
  out.normal.reserve(normal.size());
  for (const auto& a : normal) out.normal.push_back(a * scale);
  out.rhs = rhs * scale;
  return out;
}

bool operator<(const Inequality& a, const Inequality& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.rhs < b.rhs;
}

RationalVector LatticePoint::to_rational() const {
  RationalVector r;
  r.reserve(coords.size());
  for (const auto& c : coords) r.emplace_back(c);
  return r;
}

bool operator<(const LatticePoint& a, const LatticePoint& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

// ---------------------------------------------------------------------------
// vertex enumeration

namespace {

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string format_vector(const RationalVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

void check_dims(std::size_t dim, const std::vector<Inequality>& hrep) {
  if (dim == 0) throw ValidationError("polytope dimension must be positive");
  for (const auto& h : hrep) {
    if (h.normal.size() != dim) {
      throw ValidationError("inequality has " + std::to_string(h.normal.size()) +
                            " coefficients, expected " + std::to_string(dim));
    }
  }
}

void check_bounded(std::size_t dim, const std::vector<Inequality>& hrep) {
  std::vector<Inequality> cone;
  cone.reserve(hrep.size() + 2 * dim);
  for (const auto& h : hrep) cone.push_back({h.normal, 0});
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector e(dim);
    e[i] = 1;
    cone.push_back({e, -1});
    e[i] = -1;
    cone.push_back({e, -1});
  }
  // {A y >= 0} is trivial iff its box truncation has no vertex besides 0.
  const RationalVector zero(dim);
  RationalVector direction;
  for (const auto& v : enumerate_vertices(dim, cone)) {
    if (v != zero) {
      direction = v;
      break;
    }
  }
  if (direction.empty()) return;

  // A nonempty set with a recession direction is unbounded. Emptiness is
  // decided on the pointed part P ∩ lineality^⊥.
  RationalMatrix a;
  for (const auto& h : hrep) a.push_back(h.normal);
  std::vector<Inequality> pointed = hrep;
  for (const auto& l : nullspace(a, dim)) {
    pointed.push_back({l, 0});
    RationalVector neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    pointed.push_back({neg, 0});
  }
  if (enumerate_vertices(dim, pointed).empty()) return;
  throw UnboundedPolytopeError("unbounded polytope: recession direction " +
                               format_vector(direction));
}

}  // namespace

std::vector<RationalVector> enumerate_vertices(std::size_t dim,
                                               const std::vector<Inequality>& hrep) {
  std::vector<RationalVector> out;
  for_each_combination(hrep.size(), dim, [&](const std::vector<std::size_t>& rows) {
    RationalMatrix a;
    RationalVector b;
    a.reserve(dim);
    for (auto r : rows) {
      a.push_back(hrep[r].normal);
      b.push_back(hrep[r].rhs);
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) return;
    for (const auto& h : hrep) {
      if (!h.satisfied_by(*x)) return;
    }
    out.push_back(std::move(*x));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// RationalPolytope

struct RationalPolytope::State {
  std::size_t dim = 0;
  std::vector<Inequality> hrep;
  mutable std::once_flag once;
  mutable std::vector<RationalVector> vertices;
  mutable int affine_dim = -1;

  void ensure() const {
    std::call_once(once, [this] {
      vertices = enumerate_vertices(dim, hrep);
      affine_dim = affine_dimension(vertices);
    });
  }

  void seed(std::vector<RationalVector> v) {
    std::call_once(once, [&] {
      vertices = std::move(v);
      affine_dim = affine_dimension(vertices);
    });
  }
};

RationalPolytope::RationalPolytope(std::shared_ptr<State> state) : state_(std::move(state)) {}

RationalPolytope RationalPolytope::from_hrep(std::size_t dim, std::vector<Inequality> hrep) {
  check_dims(dim, hrep);
  check_bounded(dim, hrep);
  auto s = std::make_shared<State>();
  s->dim = dim;
  s->hrep = std::move(hrep);
  return RationalPolytope(std::move(s));
}

RationalPolytope RationalPolytope::from_vrep(std::size_t dim, std::vector<RationalVector> points) {
  if (points.empty()) return empty(dim);
  for (const auto& p : points) {
    if (p.size() != dim) throw ValidationError("vertex dimension mismatch");
  }
  return convex_hull(std::move(points));
}

RationalPolytope RationalPolytope::empty(std::size_t dim) {
  if (dim == 0) throw ValidationError("polytope dimension must be positive");
  auto s = std::make_shared<State>();
  s->dim = dim;
  RationalVector e(dim);
  e[0] = 1;
  s->hrep.push_back({e, 1});
  e[0] = -1;
  s->hrep.push_back({e, 0});
  s->seed({});
  return RationalPolytope(std::move(s));
}

RationalPolytope RationalPolytope::from_seeded(std::size_t dim, std::vector<Inequality> hrep,
                                               std::vector<RationalVector> vertices) {
  auto s = std::make_shared<State>();
  s->dim = dim;
  s->hrep = std::move(hrep);
  s->seed(std::move(vertices));
  return RationalPolytope(std::move(s));
}

std::size_t RationalPolytope::dim() const { return state_->dim; }
const std::vector<Inequality>& RationalPolytope::hrep() const { return state_->hrep; }

const std::vector<RationalVector>& RationalPolytope::vertices() const {
  state_->ensure();
  return state_->vertices;
}

int RationalPolytope::affine_dim() const {
  state_->ensure();
  return state_->affine_dim;
}

bool RationalPolytope::contains(std::span<const Rational> x) const {
  if (x.size() != dim()) throw ValidationError("point dimension mismatch");
  if (is_empty()) return false;
  return std::all_of(hrep().begin(), hrep().end(),
                     [&](const Inequality& h) { return h.satisfied_by(x); });
}

RationalPolytope RationalPolytope::dilated(const Rational& factor) const {
  if (factor <= 0) throw ValidationError("dilation factor must be positive");
  auto s = std::make_shared<State>();
  s->dim = dim();
  s->hrep = hrep();
  for (auto& h : s->hrep) h.rhs *= factor;
  auto v = vertices();
  for (auto& p : v) {
    for (auto& c : p) c *= factor;
  }
  s->seed(std::move(v));
  return RationalPolytope(std::move(s));
}

RationalPolytope RationalPolytope::intersected(const std::vector<Inequality>& extra) const {
  check_dims(dim(), extra);
  auto s = std::make_shared<State>();
  s->dim = dim();
  s->hrep = hrep();
  s->hrep.insert(s->hrep.end(), extra.begin(), extra.end());
  return RationalPolytope(std::move(s));
}

// ---------------------------------------------------------------------------
// lattice points

namespace {

struct IntegerInequality {
  IntegerVector normal;
  Integer rhs;  // <normal, u> >= rhs
};

IntegerInequality clear_denominators(const Inequality& h, std::int64_t m) {
  const Inequality n = h.normalized();
  IntegerInequality out;
  Rational rhs = n.rhs * m;
  Integer scale = rhs.get_den();
  for (const auto& a : n.normal) out.normal.push_back(a.get_num() * scale);
  out.rhs = rhs.get_num();
  return out;
}

bool satisfies(const IntegerInequality& h, const IntegerVector& u) {
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += h.normal[i] * u[i];
  return s >= h.rhs;
}

std::vector<LatticePoint> scan_bounding_box(const RationalPolytope& p, std::int64_t m,
                                            const std::vector<IntegerInequality>& ineqs) {
  const std::size_t d = p.dim();
  IntegerVector lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational mn = p.vertices().front()[k], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    lo[k] = ceil(mn * m);
    hi[k] = floor(mx * m);
    if (lo[k] > hi[k]) return {};
  }
  std::vector<LatticePoint> out;
  IntegerVector u = lo;
  while (true) {
    if (std::all_of(ineqs.begin(), ineqs.end(),
                    [&](const IntegerInequality& h) { return satisfies(h, u); })) {
      out.push_back({u});
    }
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (u[k] < hi[k]) {
        ++u[k];
        for (std::size_t j = k + 1; j < d; ++j) u[j] = lo[j];
        break;
      }
      if (k == 0) return out;
    }
  }
}

// Fourier-Motzkin: projections[k] describes the projection onto the first k+1
// coordinates.
std::vector<std::vector<IntegerInequality>> projection_chain(std::vector<IntegerInequality> sys,
                                                             std::size_t d) {
  std::vector<std::vector<IntegerInequality>> chain(d);
  chain[d - 1] = sys;
  for (std::size_t var = d - 1; var > 0; --var) {
    std::vector<IntegerInequality> next, pos, neg;
    for (auto& h : chain[var]) {
      if (h.normal[var] > 0) pos.push_back(h);
      else if (h.normal[var] < 0) neg.push_back(h);
      else next.push_back(h);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Integer cp = -n.normal[var];
        const Integer cn = p.normal[var];
        IntegerInequality c;
        c.normal.resize(d);
        for (std::size_t i = 0; i < d; ++i) c.normal[i] = cp * p.normal[i] + cn * n.normal[i];
        c.rhs = cp * p.rhs + cn * n.rhs;
        Integer g = 0;
        for (const auto& a : c.normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g > 1) {
          for (auto& a : c.normal) a /= g;
          mpz_cdiv_q(c.rhs.get_mpz_t(), c.rhs.get_mpz_t(), g.get_mpz_t());
        }
        next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
      if (a.normal != b.normal) return a.normal < b.normal;
      return a.rhs < b.rhs;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const auto& a, const auto& b) {
                             return a.normal == b.normal && a.rhs == b.rhs;
                           }),
               next.end());
    chain[var - 1] = std::move(next);
  }
  return chain;
}

void enumerate_pruned(const std::vector<std::vector<IntegerInequality>>& chain, std::size_t level,
                      IntegerVector& prefix, std::vector<LatticePoint>& out) {
  const std::size_t d = prefix.size();
  bool has_lo = false, has_hi = false;
  Integer lo, hi;
  for (const auto& h : chain[level]) {
    Integer rest = h.rhs;
    for (std::size_t i = 0; i < level; ++i) rest -= h.normal[i] * prefix[i];
    const Integer& a = h.normal[level];
    if (a == 0) {
      if (rest > 0) return;
      continue;
    }
    Integer b;
    if (a > 0) {
      mpz_cdiv_q(b.get_mpz_t(), rest.get_mpz_t(), a.get_mpz_t());
      if (!has_lo || b > lo) lo = b;
      has_lo = true;
    } else {
      mpz_fdiv_q(b.get_mpz_t(), rest.get_mpz_t(), a.get_mpz_t());
      if (!has_hi || b < hi) hi = b;
      has_hi = true;
    }
  }
  if (!has_lo || !has_hi) throw InvariantViolation("lattice enumeration lost a bound");
  for (Integer x = lo; x <= hi; ++x) {
    prefix[level] = x;
    if (level + 1 == d) out.push_back({prefix});
    else enumerate_pruned(chain, level + 1, prefix, out);
  }
}

}  // namespace

std::vector<LatticePoint> lattice_points(const RationalPolytope& p, std::int64_t m) {
  if (m < 1) throw ValidationError("dilation m must be >= 1, got " + std::to_string(m));
  if (p.is_empty()) return {};
  std::vector<IntegerInequality> ineqs;
  ineqs.reserve(p.hrep().size());
  for (const auto& h : p.hrep()) ineqs.push_back(clear_denominators(h, m));
  const std::size_t d = p.dim();
  if (d <= 3) return scan_bounding_box(p, m, ineqs);
  auto chain = projection_chain(std::move(ineqs), d);
  std::vector<LatticePoint> out;
  IntegerVector prefix(d);
  enumerate_pruned(chain, 0, prefix, out);
  return out;
}

// ---------------------------------------------------------------------------
// triangulation and volume

namespace {

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Fan {
  const std::vector<RationalVector>& verts;
  std::vector<std::vector<std::size_t>> tight;
  FanApex apex;

  int face_dim(const std::vector<std::size_t>& face) const {
    std::vector<RationalVector> pts;
    pts.reserve(face.size());
    for (auto i : face) pts.push_back(verts[i]);
    return affine_dimension(pts);
  }

  void run(const std::vector<std::size_t>& face, int k,
           std::vector<std::vector<RationalVector>>& out) const {
    if (k == 0) {
      out.push_back({verts[face.front()]});
      return;
    }
    RationalVector top;
    if (apex == FanApex::centroid) {
      top.assign(verts[face.front()].size(), Rational(0));
      for (auto i : face) {
        for (std::size_t c = 0; c < top.size(); ++c) top[c] += verts[i][c];
      }
      for (auto& c : top) c /= static_cast<long>(face.size());
    } else {
      top = verts[face.front()];
    }
    std::set<std::vector<std::size_t>> facets;
    for (const auto& t : tight) {
      auto g = intersect_sorted(face, t);
      if (g.size() == face.size() || g.size() < static_cast<std::size_t>(k)) continue;
      if (apex == FanApex::first_vertex && g.front() == face.front()) continue;
      if (facets.count(g)) continue;
      if (face_dim(g) == k - 1) facets.insert(std::move(g));
    }
    for (const auto& g : facets) {
      std::vector<std::vector<RationalVector>> sub;
      run(g, k - 1, sub);
      for (auto& s : sub) {
        s.push_back(top);
        out.push_back(std::move(s));
      }
    }
  }
};

}  // namespace

std::vector<std::vector<RationalVector>> triangulate(const RationalPolytope& p, FanApex apex) {
  if (!p.is_full_dimensional()) return {};
  const auto& verts = p.vertices();
  Fan fan{verts, {}, apex};
  for (const auto& h : p.hrep()) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (h.slack(verts[i]) == 0) t.push_back(i);
    }
    fan.tight.push_back(std::move(t));
  }
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<RationalVector>> out;
  fan.run(all, static_cast<int>(p.dim()), out);
  return out;
}

Rational simplex_volume(const std::vector<RationalVector>& corners) {
  const std::size_t d = corners.size() - 1;
  RationalMatrix m(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = corners[i + 1][j] - corners[0][j];
  }
  return abs(determinant(std::move(m))) / factorial(static_cast<unsigned>(d));
}

Rational volume(const RationalPolytope& p) {
  Rational total = 0;
  for (const auto& s : triangulate(p)) total += simplex_volume(s);
  return total;
}

// ---------------------------------------------------------------------------
// convex hull

namespace {

struct HullFacet {
  std::vector<std::size_t> verts;  // sorted point indices
  Inequality plane;
  bool alive = true;
};

struct FullHull {
  std::vector<Inequality> facets;
  std::vector<std::size_t> vertices;  // indices into the input
};

// Points extreme along the coordinate and diagonal directions first, then
// the rest in input order. A large early hull lets most later points be
// discarded as interior after a single pass over few facets.
std::vector<std::size_t> insertion_order(const std::vector<RationalVector>& q) {
  const std::size_t k = q.front().size();
  std::vector<RationalVector> dirs;
  for (std::size_t c = 0; c < k; ++c) {
    RationalVector e(k);
    e[c] = 1;
    dirs.push_back(e);
    e[c] = -1;
    dirs.push_back(e);
  }
  if (k <= 4) {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      RationalVector e(k);
      for (std::size_t c = 0; c < k; ++c) e[c] = (mask >> c) & 1 ? -1 : 1;
      dirs.push_back(e);
    }
  }
  std::vector<bool> taken(q.size(), false);
  std::vector<std::size_t> order;
  for (const auto& dir : dirs) {
    std::size_t best = 0;
    Rational best_value = dot(dir, q[0]);
    for (std::size_t i = 1; i < q.size(); ++i) {
      Rational v = dot(dir, q[i]);
      if (v > best_value) {
        best_value = std::move(v);
        best = i;
      }
    }
    if (!taken[best]) {
      taken[best] = true;
      order.push_back(best);
    }
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!taken[i]) order.push_back(i);
  }
  return order;
}

// Beneath-beyond on a triangulated boundary; points must affinely span Q^k.
FullHull full_dimensional_hull(const std::vector<RationalVector>& q) {
  const std::size_t k = q.front().size();
  const std::vector<std::size_t> order = insertion_order(q);
  std::vector<std::size_t> simplex{order.front()};
  RationalMatrix basis;
  for (std::size_t oi = 1; oi < order.size() && simplex.size() < k + 1; ++oi) {
    const std::size_t i = order[oi];
    RationalVector d(k);
    for (std::size_t c = 0; c < k; ++c) d[c] = q[i][c] - q[simplex.front()][c];
    basis.push_back(d);
    if (rank(basis, k) == basis.size()) simplex.push_back(i);
    else basis.pop_back();
  }
  if (simplex.size() != k + 1) throw InvariantViolation("hull: points do not span");

  RationalVector centre(k);
  for (auto i : simplex) {
    for (std::size_t c = 0; c < k; ++c) centre[c] += q[i][c];
  }
  for (auto& c : centre) c /= static_cast<long>(k + 1);

  auto make_facet = [&](std::vector<std::size_t> verts) {
    std::sort(verts.begin(), verts.end());
    RationalMatrix rows;
    for (std::size_t j = 1; j < verts.size(); ++j) {
      RationalVector d(k);
      for (std::size_t c = 0; c < k; ++c) d[c] = q[verts[j]][c] - q[verts[0]][c];
      rows.push_back(std::move(d));
    }
    auto ns = nullspace(rows, k);
    if (ns.size() != 1) throw InvariantViolation("hull: degenerate facet");
    Inequality h{ns.front(), dot(ns.front(), q[verts[0]])};
    if (h.slack(centre) < 0) {
      for (auto& a : h.normal) a = -a;
      h.rhs = -h.rhs;
    }
    return HullFacet{std::move(verts), std::move(h), true};
  };

  std::vector<HullFacet> facets;
  for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j < simplex.size(); ++j) {
      if (j != omit) v.push_back(simplex[j]);
    }
    facets.push_back(make_facet(std::move(v)));
  }

  std::vector<bool> in_simplex(q.size(), false);
  for (auto i : simplex) in_simplex[i] = true;

  for (const std::size_t i : order) {
    if (in_simplex[i]) continue;
    std::map<std::vector<std::size_t>, int> ridges;
    bool any = false;
    for (auto& f : facets) {
      if (f.plane.slack(q[i]) >= 0) continue;
      any = true;
      f.alive = false;
      for (std::size_t omit = 0; omit < f.verts.size(); ++omit) {
        std::vector<std::size_t> r;
        for (std::size_t j = 0; j < f.verts.size(); ++j) {
          if (j != omit) r.push_back(f.verts[j]);
        }
        ++ridges[r];
      }
    }
    if (!any) continue;
    std::erase_if(facets, [](const HullFacet& f) { return !f.alive; });
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      auto v = ridge;
      v.push_back(i);
      facets.push_back(make_facet(std::move(v)));
    }
  }

  FullHull out;
  std::set<Inequality> planes;
  std::set<std::size_t> used;
  for (const auto& f : facets) {
    planes.insert(f.plane.normalized());
    used.insert(f.verts.begin(), f.verts.end());
  }
  out.facets.assign(planes.begin(), planes.end());
  for (auto i : used) {
    RationalMatrix normals;
    for (const auto& h : out.facets) {
      if (h.slack(q[i]) == 0) normals.push_back(h.normal);
    }
    if (rank(normals, k) == k) out.vertices.push_back(i);
  }
  return out;
}

}  // namespace

RationalPolytope convex_hull(std::vector<RationalVector> points) {
  if (points.empty()) throw ValidationError("convex hull of an empty point set");
  const std::size_t d = points.front().size();
  if (d == 0) throw ValidationError("polytope dimension must be positive");
  for (const auto& p : points) {
    if (p.size() != d) throw ValidationError("convex hull: mixed point dimensions");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const auto& p0 = points.front();
  // Affine span, built incrementally from a fully reduced basis so that a
  // large full-dimensional point set stops after d independent differences.
  RationalMatrix basis;
  std::vector<std::size_t> basis_pivot;
  for (std::size_t i = 1; i < points.size() && basis.size() < d; ++i) {
    RationalVector v(d);
    for (std::size_t c = 0; c < d; ++c) v[c] = points[i][c] - p0[c];
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Rational f = v[basis_pivot[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < d; ++c) v[c] -= f * basis[r][c];
    }
    std::size_t pc = 0;
    while (pc < d && v[pc] == 0) ++pc;
    if (pc == d) continue;
    const Rational inv = 1 / v[pc];
    for (auto& x : v) x *= inv;
    for (auto& row : basis) {
      const Rational f = row[pc];
      if (f == 0) continue;
      for (std::size_t c = 0; c < d; ++c) row[c] -= f * v[c];
    }
    basis.push_back(std::move(v));
    basis_pivot.push_back(pc);
  }
  const auto ech = reduced_row_echelon(basis, d);
  const std::size_t k = ech.pivots.size();

  std::vector<Inequality> hrep;
  for (const auto& n : nullspace(ech.rows, d)) {
    Inequality eq{n, dot(n, p0)};
    eq = eq.normalized();
    Inequality opposite = eq;
    for (auto& a : opposite.normal) a = -a;
    opposite.rhs = -opposite.rhs;
    hrep.push_back(eq);
    hrep.push_back(opposite);
  }

  std::vector<RationalVector> vertices;
  if (k == 0) {
    vertices.push_back(p0);
  } else {
    std::vector<RationalVector> projected;
    projected.reserve(points.size());
    for (const auto& p : points) {
      RationalVector v(k);
      for (std::size_t j = 0; j < k; ++j) v[j] = p[ech.pivots[j]];
      projected.push_back(std::move(v));
    }
    auto lift = [&](const Inequality& h) {
      Inequality out{RationalVector(d), h.rhs};
      for (std::size_t j = 0; j < k; ++j) out.normal[ech.pivots[j]] = h.normal[j];
      return out.normalized();
    };
    if (k == 1) {
      std::size_t lo = 0, hi = 0;
      for (std::size_t i = 1; i < projected.size(); ++i) {
        if (projected[i][0] < projected[lo][0]) lo = i;
        if (projected[i][0] > projected[hi][0]) hi = i;
      }
      hrep.push_back(lift({{Rational(1)}, projected[lo][0]}));
      hrep.push_back(lift({{Rational(-1)}, -projected[hi][0]}));
      vertices.push_back(points[lo]);
      vertices.push_back(points[hi]);
    } else {
      auto hull = full_dimensional_hull(projected);
      for (const auto& h : hull.facets) hrep.push_back(lift(h));
      for (auto i : hull.vertices) vertices.push_back(points[i]);
    }
  }
  std::sort(vertices.begin(), vertices.end());
  std::sort(hrep.begin(), hrep.end());
  hrep.erase(std::unique(hrep.begin(), hrep.end()), hrep.end());

  return RationalPolytope::from_seeded(d, std::move(hrep), std::move(vertices));
}

}  // namespace okdh
