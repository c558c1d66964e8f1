#include <cmath>

#include "doctest.h"
#include "okdh/builtin.hpp"
#include "okdh/model.hpp"

using namespace okdh;

namespace {

// C(n, k) with plain integers; oracle for simplex counts.
long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ToricModel unit_square() {
  return ToricModel::from_polytope(RationalPolytope::from_vrep(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

}  // namespace

TEST_CASE("projective space counts") {
  const auto p1 = ToricModel::projective_space(1, 1);
  for (long m = 0; m <= 12; ++m) CHECK(p1.h0(m) == static_cast<std::size_t>(m + 1));
  const auto p2 = ToricModel::projective_space(2, 1);
  for (long m = 0; m <= 12; ++m) CHECK(p2.h0(m) == static_cast<std::size_t>((m + 1) * (m + 2) / 2));
  const auto p3 = ToricModel::projective_space(3, 2);
  for (long m = 0; m <= 5; ++m) CHECK(p3.h0(m) == static_cast<std::size_t>(binomial(2 * m + 3, 3)));
  CHECK(p2.h0(3) == 10);
  CHECK(p1.graded_piece(0).basis == std::vector<LatticePoint>{LatticePoint{{0}}});
}

TEST_CASE("volume of L") {
  CHECK(ToricModel::projective_space(1, 1).volume_of_L() == 1);
  CHECK(ToricModel::projective_space(2, 1).volume_of_L() == 1);
  CHECK(ToricModel::projective_space(2, 2).volume_of_L() == 4);
  CHECK(ToricModel::projective_space(3, 1).volume_of_L() == 1);
  CHECK(unit_square().volume_of_L() == 2);
  CHECK(ToricModel::hirzebruch(1, 1).volume_of_L() == 3);
}

TEST_CASE("polytope models") {
  const auto sq = unit_square();
  for (long m = 0; m <= 8; ++m) CHECK(sq.h0(m) == static_cast<std::size_t>((m + 1) * (m + 1)));
  CHECK(sq.graded_piece(2).basis.size() == 9);

  const auto f1 = ToricModel::hirzebruch(1, 1);
  CHECK(f1.h0(1) == 5);
  // trapezoid with parallel sides 2m and m at heights 0 and m
  for (long m = 1; m <= 8; ++m) {
    long count = 0;
    for (long y = 0; y <= m; ++y) count += 2 * m - y + 1;
    CHECK(f1.h0(m) == static_cast<std::size_t>(count));
  }

  const auto prod = ToricModel::product(ToricModel::projective_space(1, 1),
                                        ToricModel::projective_space(1, 1));
  for (long m = 0; m <= 6; ++m) CHECK(prod.h0(m) == sq.h0(m));
}

TEST_CASE("unimodular flags leave h0 unchanged") {
  const auto simplex = ToricModel::projective_space(2, 1).polytope();
  const FlagMap rot{{{0, -1}, {1, 0}}, {1, 0}};
  const FlagMap shear{{{1, 3}, {0, 1}}, {0, 0}};
  const FlagMap swap{{{0, 1}, {1, 0}}, {0, 0}};
  const auto base = ToricModel::from_polytope(simplex);
  for (const auto& flag : {rot, shear, swap}) {
    const auto model = ToricModel::from_polytope(simplex, flag);
    for (long m = 0; m <= 10; ++m) CHECK(model.h0(m) == base.h0(m));
  }
}

TEST_CASE("model validation") {
  const auto half = RationalPolytope::from_vrep(2, {{0, 0}, {Rational(1, 2), 0}, {0, 1}});
  CHECK_THROWS_AS(ToricModel::from_polytope(half), ValidationError);
  try {
    ToricModel::from_polytope(half);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("1/2") != std::string::npos);
  }
  const auto segment = RationalPolytope::from_vrep(2, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(ToricModel::from_polytope(segment), ValidationError);
  const auto simplex = ToricModel::projective_space(2, 1).polytope();
  CHECK_THROWS_AS(ToricModel::from_polytope(simplex, FlagMap{{{2, 0}, {0, 1}}, {0, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(ToricModel::from_polytope(simplex, FlagMap::identity(3)), ValidationError);
  CHECK_THROWS_AS(ToricModel::projective_space(0, 1), ValidationError);
  CHECK_THROWS_AS(ToricModel::projective_space(2, 0), ValidationError);
}

TEST_CASE("normalized counts approach Vol(L)") {
  for (const auto& ex : builtin_examples()) {
    const auto& model = ex.filtration.model();
    const auto d = static_cast<unsigned>(model.dim());
    Rational previous = -1;
    for (long m : {10, 20, 40, 80}) {
      const Rational est = factorial(d) * Rational(static_cast<long>(model.h0(m))) / pow(Rational(m), d);
      const Rational gap = abs(est - model.volume_of_L());
      if (previous >= 0) CHECK_MESSAGE(gap < previous, ex.name << " m=" << m);
      previous = gap;
    }
  }
}
