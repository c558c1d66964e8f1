#include "doctest.h"
#include "okdh/builtin.hpp"
#include "okdh/measure.hpp"
#include "okdh/okounkov.hpp"

using namespace okdh;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

WeightFiltration linear(const ToricModel& model, RationalVector a) {
  return WeightFiltration(model, {AffinePiece{std::move(a), 0}});
}

// Oracle: Kolmogorov distance between nu_m and U[0,1] computed by scanning
// the CDF gap on both sides of every atom.
Rational uniform_gap(const DiscreteMeasure& d) {
  Rational best = 0, mass = 0;
  for (const auto& a : d.atoms()) {
    best = std::max(best, Rational(abs(mass - a.location)));
    mass += a.mass;
    best = std::max(best, Rational(abs(mass - a.location)));
  }
  return best;
}

}  // namespace

TEST_CASE("discrete measures") {
  const auto p1 = ToricModel::projective_space(1, 1);
  const auto p2 = ToricModel::projective_space(2, 1);
  const auto third = Rational(1, 3);
  CHECK(nu_m(linear(p1, rv({1})), 2).atoms() ==
        std::vector<Atom>{{0, third}, {Rational(1, 2), third}, {1, third}});
  CHECK(nu_m(linear(p2, rv({1, 0})), 2).atoms() ==
        std::vector<Atom>{{0, Rational(1, 2)}, {Rational(1, 2), third}, {1, Rational(1, 6)}});
  CHECK(nu_m(WeightFiltration::zero(p2), 5).atoms() == std::vector<Atom>{{0, 1}});

  const DiscreteMeasure merged({{1, Rational(1, 4)}, {0, Rational(1, 4)}, {1, Rational(1, 2)}});
  CHECK(merged.atoms() == std::vector<Atom>{{0, Rational(1, 4)}, {1, Rational(3, 4)}});
  CHECK(merged.cdf(0) == Rational(1, 4));
  CHECK(merged.cdf_before(0) == 0);
  CHECK(merged.cdf(1) == 1);
  CHECK_THROWS_AS(DiscreteMeasure({{0, 0}}), ValidationError);
  CHECK_THROWS_AS(DiscreteMeasure({{0, -1}}), ValidationError);
}

TEST_CASE("expectations") {
  const auto p1x = linear(ToricModel::projective_space(1, 1), rv({1}));
  const auto p2x = linear(ToricModel::projective_space(2, 1), rv({1, 0}));
  for (long m = 1; m <= 30; ++m) {
    CHECK(nu_m(p1x, m).expectation() == Rational(1, 2));
    CHECK(nu_m(p2x, m).expectation() == Rational(1, 3));
  }
  CHECK(DiscreteMeasure({{0, 1}}).expectation() == 0);
}

TEST_CASE("mass identities") {
  for (const auto& ex : builtin_examples()) {
    const auto& f = ex.filtration;
    const auto d = static_cast<unsigned>(f.dim());
    for (long m = 1; m <= 20; ++m) {
      const auto nu = nu_m(f, m);
      CHECK(nu.total_mass() == 1);
      const Rational h0(static_cast<long>(f.model().h0(m)));
      CHECK(nu.expectation() == f.mass_plus(m) / (m * h0));
      const auto mu = mu_m(f, m);
      CHECK(mu.total_mass() == h0 / pow(Rational(m), d));
      CHECK(mu == nu.scaled(h0 / pow(Rational(m), d)));
      for (const auto& a : nu.atoms()) {
        CHECK(a.location >= 0);
        CHECK(a.location <= f.a_max_limit());
      }
    }
    const auto nu = limit_measure_nu(f);
    const auto mu = limit_measure_mu(f);
    CHECK(nu.total_mass() == 1);
    CHECK(mu.total_mass() == f.model().volume_of_L() / factorial(d));
    CHECK(mu == nu.scaled(f.model().volume_of_L() / factorial(d)));
    CHECK(nu.expectation() == factorial(d) / f.model().volume_of_L() * mu.expectation());
    CHECK(nu.breakpoints().front() >= 0);
    CHECK(nu.breakpoints().back() == f.a_max_limit());
    CHECK_FALSE(nu.atom().has_value());
    // density is non-negative at endpoints and midpoints of every interval
    const auto& bp = nu.breakpoints();
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
      const auto& p = nu.density().pieces[i];
      CHECK(p(bp[i]) >= 0);
      CHECK(p(bp[i + 1]) >= 0);
      CHECK(p((bp[i] + bp[i + 1]) / 2) >= 0);
    }
  }
}

TEST_CASE("limit measures") {
  const auto p1x = linear(ToricModel::projective_space(1, 1), rv({1}));
  const auto p2x = linear(ToricModel::projective_space(2, 1), rv({1, 0}));
  const auto u = limit_measure_nu(p1x);
  CHECK(u.breakpoints() == rv({0, 1}));
  CHECK(u.density().pieces.front() == Polynomial::constant(1));
  CHECK(u.expectation() == Rational(1, 2));
  const auto tri = limit_measure_nu(p2x);
  CHECK(tri.density().pieces.front() == Polynomial(rv({2, -2})));
  CHECK(tri.expectation() == Rational(1, 3));
  CHECK(tri.cdf(Rational(1, 2)) == Rational(3, 4));

  const auto delta = limit_measure_nu(WeightFiltration::zero(ToricModel::projective_space(2, 1)));
  REQUIRE(delta.atom().has_value());
  CHECK(*delta.atom() == Atom{0, 1});
  CHECK(delta.expectation() == 0);
  CHECK(delta.cdf_before(0) == 0);
  CHECK(delta.cdf(0) == 1);
}

TEST_CASE("Kolmogorov distance") {
  const auto p1x = linear(ToricModel::projective_space(1, 1), rv({1}));
  const Measure nu = limit_measure_nu(p1x);
  CHECK(kolmogorov_distance(nu, nu) == 0);
  CHECK(kolmogorov_distance(Measure(nu_m(p1x, 1)), nu) == Rational(1, 2));
  CHECK(kolmogorov_distance(Measure(nu_m(p1x, 4)), nu) == Rational(1, 5));
  CHECK(kolmogorov_distance(nu, Measure(nu_m(p1x, 4))) == Rational(1, 5));
  for (long m = 1; m <= 40; ++m) {
    const auto d = nu_m(p1x, m);
    CHECK(kolmogorov_distance(Measure(d), nu) == uniform_gap(d));
    CHECK(kolmogorov_distance(Measure(d), nu) == Rational(1, m + 1));
  }
  const Measure half(DiscreteMeasure({{0, Rational(1, 2)}, {1, Rational(1, 2)}}));
  const Measure shifted(DiscreteMeasure({{Rational(1, 2), 1}}));
  CHECK(kolmogorov_distance(half, shifted) == Rational(1, 2));
  CHECK_THROWS_AS(kolmogorov_distance(Measure(DiscreteMeasure({{0, 2}})), nu), ValidationError);

  // two continuous measures: U[0,1] against density 2(1 - t); CDFs t and
  // 2t - t^2 differ by t - t^2, maximal 1/4 at t = 1/2
  const auto p2x = linear(ToricModel::projective_space(2, 1), rv({1, 0}));
  CHECK(kolmogorov_distance(nu, Measure(limit_measure_nu(p2x))) == Rational(1, 4));
}

TEST_CASE("convergence sweep") {
  const auto p1x = linear(ToricModel::projective_space(1, 1), rv({1}));
  const auto rows = convergence_sweep(p1x, {1, 2, 4});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].m == 1);
  for (const auto& r : rows) CHECK(r.expectation == Rational(1, 2));
  CHECK(rows[0].kolmogorov == Rational(1, 2));
  CHECK(rows[1].kolmogorov == Rational(1, 3));
  CHECK(rows[2].kolmogorov == Rational(1, 5));

  for (const auto& r : convergence_sweep(WeightFiltration::zero(ToricModel::projective_space(2, 1)), {1, 3, 9})) {
    CHECK(r.kolmogorov == 0);
  }
  const auto p2x = linear(ToricModel::projective_space(2, 1), rv({1, 0}));
  const auto rows2 = convergence_sweep(p2x, {2, 4, 8, 16});
  for (std::size_t i = 0; i < rows2.size(); ++i) {
    CHECK(rows2[i].expectation == Rational(1, 3));
    if (i) CHECK(rows2[i].kolmogorov < rows2[i - 1].kolmogorov);
  }
  CHECK_THROWS_AS(convergence_sweep(p1x, {}), ValidationError);
  CHECK_THROWS_AS(convergence_sweep(p1x, {2, 2}), ValidationError);

  // concurrent and sequential evaluation agree
  for (const auto& ex : builtin_examples()) {
    const std::vector<std::int64_t> ms{1, 2, 4, 8};
    const auto swept = convergence_sweep(ex.filtration, ms);
    const Measure limit = limit_measure_nu(ex.filtration);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto d = nu_m(ex.filtration, ms[i]);
      CHECK(swept[i].expectation == d.expectation());
      CHECK(swept[i].kolmogorov == kolmogorov_distance(Measure(d), limit));
    }
  }
}
