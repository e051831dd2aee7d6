#include <doctest.h>

#include <cmath>

#include "starcoef/rng.hpp"
#include "starcoef/verify.hpp"

using namespace starcoef;

namespace {

const CheckRow* find_row(const VerificationReport& rep, const std::string& prefix) {
  for (const CheckRow& row : rep.checks)
    if (row.name.rfind(prefix, 0) == 0) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("verify_jabotinsky holds on extremal and sampled functions") {
  static const int powers[] = {-3, -2, -1, 1, 2, 3};
  const Tolerance tol{1e-9, 1e-12};

  const VerificationReport on_koebe = verify_jabotinsky(koebe_alpha(0.0, 24), powers, 15, tol);
  CHECK(on_koebe.all_pass());
  CHECK(on_koebe.max_relative_excess <= 0.0);

  for (uint64_t seed : {1u, 2u, 3u}) {
    const NormalizedSchlicht f = realize(sample_starlike(0.1 * seed, seed, 24));
    CHECK(verify_jabotinsky(f, powers, 15, tol).all_pass());
  }

  static const int zero[] = {0};
  CHECK_THROWS_AS(verify_jabotinsky(koebe_alpha(0.0, 24), zero, 4, tol), ZeroPower);
}

TEST_CASE("verify_bounds_sample finds no violations") {
  const Tolerance tol{1e-8, 1e-12};
  const VerificationReport rep = verify_bounds_sample(0.0, 20, 24, 42, tol);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 20u * (8 * 23 + 11 + 13 + 9));
  for (const CheckRow& row : rep.checks) CHECK(row.ratio <= 1.0 + 1e-8);

  // Regime arithmetic for high alpha: n = 2 rows sit in T1c.
  CHECK(thm1_bound(2, 0.9).value == doctest::Approx(0.2).epsilon(1e-13));
  const VerificationReport high = verify_bounds_sample(0.9, 10, 24, 7, tol);
  CHECK(high.all_pass());
}

TEST_CASE("verify_bounds_sample is identical across thread counts") {
  const Tolerance tol{1e-8, 1e-12};
  const VerificationReport serial = verify_bounds_sample(0.3, 12, 24, 5, tol, 1);
  const VerificationReport parallel = verify_bounds_sample(0.3, 12, 24, 5, tol, 4);
  REQUIRE(serial.checks.size() == parallel.checks.size());
  for (size_t i = 0; i < serial.checks.size(); ++i) {
    CHECK(serial.checks[i].name == parallel.checks[i].name);
    CHECK(serial.checks[i].observed == parallel.checks[i].observed);
    CHECK(serial.checks[i].ratio == parallel.checks[i].ratio);
  }
}

TEST_CASE("verify_sharpness asserts attainment in sharp regimes") {
  const Tolerance tol{1e-8, 1e-12};

  // T1c at (3, 0.8): bound 2(1-0.8)/2 = 0.2, attained by the square-root family.
  const VerificationReport t1c = verify_sharpness(3, 0.8, 24, tol);
  const CheckRow* row = find_row(t1c, "thm1:sharp");
  REQUIRE(row != nullptr);
  CHECK(row->bound == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(row->ratio == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t1c.all_pass());

  // T1a at (4, 0): the classical value 14.
  const VerificationReport t1a = verify_sharpness(4, 0.0, 24, tol);
  row = find_row(t1a, "thm1:sharp");
  REQUIRE(row != nullptr);
  CHECK(row->observed == doctest::Approx(14.0).epsilon(1e-12));
  CHECK(t1a.all_pass());

  // Theorem 2 extremal at m = 2, alpha = 0.5.
  const VerificationReport t2 = verify_sharpness(2, 0.5, 24, tol);
  row = find_row(t2, "thm2:sharp");
  REQUIRE(row != nullptr);
  CHECK(row->bound == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(row->ratio == doctest::Approx(1.0).epsilon(1e-10));

  // Open regime rows are informational: compliance only, never equality.
  const VerificationReport open = verify_sharpness(4, 0.55, 24, tol);
  row = find_row(open, "thm1:open");
  REQUIRE(row != nullptr);
  CHECK(row->pass);
  CHECK(row->ratio <= 1.0 + 1e-8);
  CHECK(open.all_pass());
}

TEST_CASE("verify_sharpness across the sharp grid") {
  const Tolerance tol{1e-8, 1e-12};
  for (int n = 0; n <= 10; ++n)
    for (double alpha = 0.0; alpha < 1.0; alpha += 0.05)
      CHECK(verify_sharpness(n, alpha, 24, tol).all_pass());
}

TEST_CASE("verify_lemma1 grid") {
  const Tolerance tol{1e-12, 1e-12};
  std::vector<Lemma1Point> grid;
  for (int n = 1; n <= 6; ++n)
    for (double alpha : {0.0, 0.13, 0.5, 0.86})
      for (int g = 1; g <= 10; ++g) grid.push_back({n, alpha, g});
  const VerificationReport rep = verify_lemma1(grid, tol);
  CHECK(rep.checks.size() == grid.size());
  CHECK(rep.all_pass());
}

TEST_CASE("verify_roundtrip") {
  const Tolerance tol{1e-8, 1e-12};
  CHECK(verify_roundtrip(NormalizedSchlicht(PowerSeries::identity(16)), 16, tol).all_pass());

  const VerificationReport k0 = verify_roundtrip(koebe_alpha(0.0, 24), 12, tol);
  CHECK(k0.all_pass());
  for (const CheckRow& row : k0.checks) CHECK(row.observed <= 1e-9);

  CHECK(verify_roundtrip(realize(sample_starlike(0.3, 11, 24)), 16, tol).all_pass());
}

TEST_CASE("search_extremal explores open regimes only") {
  CHECK_THROWS_AS(search_extremal(2, 0.5, 100, 1, 24), WrongRegime);
  CHECK_THROWS_AS(search_extremal(3, 0.5, 100, 1, 24), WrongRegime);
  CHECK_THROWS_AS(search_extremal(4, 0.55, 0, 1, 24), ConfigError);

  const SearchResult one = search_extremal(4, 0.55, 1, 9, 24);
  CHECK(one.best_ratio > 0.0);
  CHECK(one.best_ratio <= 1.0 + 1e-8);

  const SearchResult run = search_extremal(4, 0.55, 600, 3, 24);
  CHECK(run.best_ratio > 0.0);
  CHECK(run.best_ratio <= 1.0 + 1e-8);
  CHECK(run.baseline_ratio > 0.0);
  CHECK(run.baseline_ratio <= 1.0 + 1e-8);
  CHECK(run.best_ratio >= run.baseline_ratio * 0.5);
  CHECK(run.bound.regime == Regime::T1b);

  // Deterministic in the seed and independent of the thread count.
  const SearchResult again = search_extremal(4, 0.55, 600, 3, 24);
  CHECK(run.best_ratio == again.best_ratio);
  const SearchResult serial = search_extremal(4, 0.55, 600, 3, 24, SearchTarget::Thm1, 1);
  CHECK(run.best_ratio == serial.best_ratio);
  REQUIRE(run.best_spec.atoms.size() == serial.best_spec.atoms.size());
  for (size_t i = 0; i < run.best_spec.atoms.size(); ++i) {
    CHECK(run.best_spec.atoms[i].x == serial.best_spec.atoms[i].x);
    CHECK(run.best_spec.atoms[i].lambda == serial.best_spec.atoms[i].lambda);
  }

  const SearchResult sigma = search_extremal(3, 0.45, 400, 5, 24, SearchTarget::Thm3);
  CHECK(sigma.bound.regime == Regime::T3b);
  CHECK(sigma.best_ratio <= 1.0 + 1e-8);
}

TEST_CASE("search ratios stay within bounds across open regimes") {
  struct Point {
    int n;
    double alpha;
  };
  for (const Point& pt : {Point{5, 0.45}, Point{6, 0.5}, Point{8, 0.4}, Point{10, 0.75}}) {
    const SearchResult r = search_extremal(pt.n, pt.alpha, 300, 13, 24);
    CHECK(r.best_ratio > 0.0);
    CHECK(r.best_ratio <= 1.0 + 1e-8);
    CHECK(r.baseline_ratio <= 1.0 + 1e-8);
  }
  for (const Point& pt : {Point{2, 0.3}, Point{4, 0.6}}) {
    const SearchResult r = search_extremal(pt.n, pt.alpha, 300, 13, 24, SearchTarget::Thm3);
    CHECK(r.best_ratio <= 1.0 + 1e-8);
  }
}

TEST_CASE("report bookkeeping") {
  const Tolerance tol{1e-8, 1e-12};
  VerificationReport rep = verify_bounds_sample(0.2, 4, 24, 21, tol);
  const size_t before = rep.checks.size();
  rep.append(verify_roundtrip(koebe_alpha(0.2, 24), 12, tol));
  CHECK(rep.checks.size() == before + 2);
  CHECK(rep.all_pass());
  // Equality-attaining draws may sit a few ulps above their bound.
  CHECK(rep.max_relative_excess <= tol.rel);
}
