#include <algorithm>
#include <random>
#include <thread>

#include "doctest.h"
#include "okdh/polytope.hpp"

using namespace okdh;

namespace {

RationalPolytope simplex(std::size_t d, const Rational& k = 1) {
  std::vector<Inequality> h;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector e(d);
    e[i] = 1;
    h.push_back({e, 0});
  }
  h.push_back({RationalVector(d, Rational(-1)), -k});
  return RationalPolytope::from_hrep(d, h);
}

RationalPolytope cube(std::size_t d) {
  std::vector<Inequality> h;
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector e(d);
    e[i] = 1;
    h.push_back({e, 0});
    e[i] = -1;
    h.push_back({e, -1});
  }
  return RationalPolytope::from_hrep(d, h);
}

// Oracle: scan a generous integer box and test every inequality directly.
std::size_t brute_force_count(const RationalPolytope& p, long m, long lo, long hi) {
  const std::size_t d = p.dim();
  std::vector<long> u(d, lo);
  std::size_t count = 0;
  while (true) {
    RationalVector x;
    for (auto c : u) x.emplace_back(c);
    bool inside = true;
    for (const auto& h : p.hrep()) inside = inside && dot(h.normal, x) >= h.rhs * m;
    if (inside) ++count;
    std::size_t k = d;
    while (k > 0 && u[k - 1] == hi) u[--k] = lo;
    if (k == 0) return count;
    ++u[k - 1];
  }
}

// Oracle: shoelace area of a convex polygon given by its vertices.
Rational shoelace(std::vector<RationalVector> v) {
  RationalVector c{0, 0};
  for (const auto& p : v) {
    c[0] += p[0] / static_cast<long>(v.size());
    c[1] += p[1] / static_cast<long>(v.size());
  }
  // order by angle using exact quadrant + cross product comparison
  auto half = [&](const RationalVector& p) {
    Rational x = p[0] - c[0], y = p[1] - c[1];
    return (y < 0 || (y == 0 && x < 0)) ? 1 : 0;
  };
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    return cross > 0;
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    twice += p[0] * q[1] - p[1] * q[0];
  }
  return abs(twice) / 2;
}

}  // namespace

TEST_CASE("lattice points of small dilates") {
  std::vector<Inequality> seg{{{1}, 0}, {{-1}, -1}};
  auto unit = RationalPolytope::from_hrep(1, seg);
  auto pts = lattice_points(unit, 3);
  REQUIRE(pts.size() == 4);
  for (long i = 0; i < 4; ++i) CHECK(pts[i].coords[0] == i);

  auto s1 = lattice_points(simplex(2), 1);
  REQUIRE(s1.size() == 3);
  CHECK(s1[0].coords == IntegerVector{0, 0});
  CHECK(s1[1].coords == IntegerVector{0, 1});
  CHECK(s1[2].coords == IntegerVector{1, 0});

  CHECK(lattice_points(simplex(2), 4).size() == 15);
  CHECK(brute_force_count(simplex(2), 4, -2, 6) == 15);
  CHECK_THROWS_AS(lattice_points(simplex(2), 0), ValidationError);
}

TEST_CASE("lattice enumeration agrees with brute force, including the pruned path") {
  std::vector<RationalPolytope> cases{
      simplex(2), simplex(3, Rational(3, 2)), cube(3),
      RationalPolytope::from_vrep(2, {{0, 0}, {2, 0}, {0, 1}, {1, 1}}),
      RationalPolytope::from_vrep(2, {{Rational(1, 3), 0}, {Rational(5, 2), Rational(1, 2)},
                                      {1, Rational(7, 4)}}),
      simplex(4), cube(4),
      RationalPolytope::from_vrep(4, {{0, 0, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 0},
                                      {0, 0, Rational(3, 2), 0}, {1, 1, 1, 1}})};
  for (const auto& p : cases) {
    for (long m : {1L, 2L, 3L}) {
      auto pts = lattice_points(p, m);
      CHECK(std::is_sorted(pts.begin(), pts.end()));
      CHECK(pts.size() == brute_force_count(p, m, -1, 3 * m + 1));
      for (const auto& u : pts) CHECK(p.dilated(m).contains(u.to_rational()));
    }
  }
}

TEST_CASE("unbounded inequality systems are rejected") {
  std::vector<Inequality> half_line{{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -1}};
  CHECK_THROWS_AS(RationalPolytope::from_hrep(2, half_line), UnboundedPolytopeError);
  CHECK_THROWS_AS(RationalPolytope::from_hrep(2, {}), UnboundedPolytopeError);
  // empty but with a recession direction: still a (bounded) empty set
  std::vector<Inequality> empty_strip{{{1, 0}, 1}, {{-1, 0}, 0}};
  auto e = RationalPolytope::from_hrep(2, empty_strip);
  CHECK(e.is_empty());
  CHECK(lattice_points(e, 5).empty());
  CHECK(volume(e) == 0);
}

TEST_CASE("volumes") {
  for (std::size_t d = 1; d <= 4; ++d) CHECK(volume(cube(d)) == 1);
  CHECK(volume(simplex(2)) == Rational(1, 2));
  CHECK(volume(simplex(3)) == Rational(1, 6));
  auto quarter = simplex(2).intersected({{{-1, -1}, Rational(-1, 2)}});
  CHECK(volume(quarter) == Rational(1, 8));
  // degenerate: a segment in the plane
  auto seg = RationalPolytope::from_vrep(2, {{0, 0}, {1, 1}});
  CHECK(volume(seg) == 0);
  CHECK(triangulate(seg).empty());
}

TEST_CASE("volume is dilation-homogeneous and triangulation-independent") {
  std::vector<RationalPolytope> cases{
      simplex(2), cube(3), RationalPolytope::from_vrep(2, {{0, 0}, {2, 0}, {0, 1}, {1, 1}}),
      RationalPolytope::from_vrep(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},
                                      {Rational(1, 2), 2, Rational(1, 3)}}),
      simplex(3, Rational(5, 3))};
  for (const auto& p : cases) {
    const Rational v = volume(p);
    Rational pulled = 0;
    for (const auto& s : triangulate(p, FanApex::first_vertex)) pulled += simplex_volume(s);
    CHECK(pulled == v);
    for (long m = 1; m <= 5; ++m) {
      CHECK(volume(p.dilated(m)) == pow(Rational(m), static_cast<unsigned>(p.dim())) * v);
    }
  }
}

TEST_CASE("hrep and vrep describe the same set") {
  auto p = RationalPolytope::from_vrep(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                           {Rational(1, 2), Rational(1, 2), Rational(1, 2)}});
  for (const auto& v : p.vertices()) CHECK(p.contains(v));
  auto again = RationalPolytope::from_hrep(3, p.hrep());
  CHECK(again.vertices() == p.vertices());
}

TEST_CASE("convex hull examples") {
  auto tri = convex_hull({{0, 0}, {1, 0}, {0, 1}, {Rational(1, 4), Rational(1, 4)}});
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.hrep().size() == 3);
  CHECK(volume(tri) == Rational(1, 2));

  auto seg = convex_hull({{0, 0}, {1, 1}, {2, 2}});
  REQUIRE(seg.vertices().size() == 2);
  CHECK(seg.vertices()[0] == RationalVector{0, 0});
  CHECK(seg.vertices()[1] == RationalVector{2, 2});
  CHECK(seg.affine_dim() == 1);
  CHECK(seg.contains(RationalVector{1, 1}));
  CHECK_FALSE(seg.contains(RationalVector{1, 0}));
  CHECK_FALSE(seg.contains(RationalVector{3, 3}));

  auto pt = convex_hull({{Rational(1, 2), 3}});
  CHECK(pt.vertices().size() == 1);
  CHECK(pt.affine_dim() == 0);

  // coplanar points on a square face
  auto c = convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1},
                        {0, 1, 1}, {1, 1, 1}, {Rational(1, 2), Rational(1, 2), 0},
                        {Rational(1, 2), 0, Rational(1, 2)}});
  CHECK(c.vertices().size() == 8);
  CHECK(c.hrep().size() == 6);
  CHECK(volume(c) == 1);
}

TEST_CASE("random hull matches a pairwise half-plane oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(0, 60), den(1, 60);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<RationalVector> pts;
    for (int i = 0; i < 100; ++i) {
      int q1 = den(rng), q2 = den(rng);
      Rational x = ratio(num(rng) % (q1 + 1), q1), y = ratio(num(rng) % (q2 + 1), q2);
      pts.push_back({x, y});
    }
    auto hull = convex_hull(pts);
    for (const auto& v : hull.vertices()) {
      CHECK(v[0] >= 0);
      CHECK(v[0] <= 1);
      CHECK(v[1] >= 0);
      CHECK(v[1] <= 1);
    }
    for (const auto& p : pts) CHECK(hull.contains(p));

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<RationalVector> oracle;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool extreme = false;
      for (std::size_t j = 0; j < pts.size() && !extreme; ++j) {
        if (i == j) continue;
        // all points weakly left of i->j, and none beyond i on the line
        bool ok = true;
        for (const auto& r : pts) {
          Rational cross = (pts[j][0] - pts[i][0]) * (r[1] - pts[i][1]) -
                           (pts[j][1] - pts[i][1]) * (r[0] - pts[i][0]);
          Rational along = (pts[j][0] - pts[i][0]) * (r[0] - pts[i][0]) +
                           (pts[j][1] - pts[i][1]) * (r[1] - pts[i][1]);
          if (cross < 0 || (cross == 0 && along < 0)) ok = false;
        }
        extreme = ok;
      }
      if (extreme) oracle.push_back(pts[i]);
    }
    CHECK(hull.vertices() == oracle);
    CHECK(volume(hull) == shoelace(oracle));
  }
}

TEST_CASE("convex hull is idempotent") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<RationalVector> pts;
  for (int i = 0; i < 40; ++i) pts.push_back({ratio(num(rng), 3), num(rng), ratio(num(rng), 2)});
  auto h1 = convex_hull(pts);
  auto h2 = convex_hull(h1.vertices());
  CHECK(h1.vertices() == h2.vertices());
  CHECK(h1.hrep() == h2.hrep());
  CHECK(volume(h1) == volume(h2));
}

TEST_CASE("lazy vertex cache is safe under concurrent first use") {
  auto p = simplex(3, 7).intersected({{{-1, 1, 0}, -2}});
  std::vector<std::thread> threads;
  std::vector<std::size_t> counts(4);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    threads.emplace_back([&, i] { counts[i] = p.vertices().size(); });
  }
  for (auto& t : threads) t.join();
  for (auto c : counts) CHECK(c == counts[0]);
}
