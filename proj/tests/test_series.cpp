#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "starcoef/series.hpp"

using namespace starcoef;
using starcoef::testing::random_schlicht;
using starcoef::testing::random_unit_series;
using starcoef::testing::revert_forward_substitution;

namespace {

PowerSeries series(std::initializer_list<Complex> coeffs) {
  return PowerSeries(std::vector<Complex>(coeffs));
}

void check_close(Complex a, Complex b, double rel = 1e-12, double abs = 1e-12) {
  CHECK(std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs);
}

NormalizedSchlicht koebe0(int order) {
  // z/(1-z)^2 without going through the zoo module.
  return NormalizedSchlicht::from_unit(unit_pow(series({1.0, -1.0}).padded(order - 1), -2.0));
}

}  // namespace

TEST_CASE("ps_mul is the truncated Cauchy product") {
  const PowerSeries p = ps_mul(series({1.0, 1.0, 0.0}), series({1.0, -1.0, 0.0}));
  CHECK(p.order() == 2);
  check_close(p[0], 1.0);
  check_close(p[1], 0.0);
  check_close(p[2], -1.0);

  const PowerSeries a = series({3.0, Complex(0.0, 2.0), -1.0, 0.5});
  const PowerSeries one = PowerSeries::constant(1.0, 3);
  const PowerSeries id = ps_mul(one, a);
  for (int k = 0; k <= 3; ++k) check_close(id[k], a[k]);

  const PowerSeries q = ps_mul(series({1.0, 2.0, 3.0}), series({1.0, 1.0, 0.0}));
  check_close(q[0], 1.0);
  check_close(q[1], 3.0);
  check_close(q[2], 5.0);
}

TEST_CASE("compose truncates at the common order") {
  const PowerSeries g = series({0.0, 1.0, -2.0, 0.25});
  const PowerSeries through_identity = compose(PowerSeries::identity(3), g);
  for (int k = 0; k <= 3; ++k) check_close(through_identity[k], g[k]);

  const PowerSeries sq = compose(series({0.0, 0.0, 1.0, 0.0}), series({0.0, 1.0, 1.0, 0.0}));
  check_close(sq[0], 0.0);
  check_close(sq[1], 0.0);
  check_close(sq[2], 1.0);
  check_close(sq[3], 2.0);

  CHECK_THROWS_AS(compose(PowerSeries::identity(2), series({1.0, 1.0, 0.0})),
                  NonzeroConstantTerm);
}

TEST_CASE("compose round trip through reversion") {
  const NormalizedSchlicht f = koebe0(8);
  const PowerSeries h = compose(f.series(), revert(f, 8));
  check_close(h[1], 1.0, 1e-12, 1e-9);
  for (int k = 2; k <= 8; ++k) CHECK(std::abs(h[k]) <= 1e-9 * f.series().max_abs());
}

TEST_CASE("unit_pow reproduces binomial series") {
  const PowerSeries p = unit_pow(series({1.0, -1.0, 0.0, 0.0, 0.0}), -2.0);
  for (int k = 0; k <= 4; ++k) check_close(p[k], static_cast<double>(k + 1));

  // -2(1-alpha) at alpha = 1/2 is the plain geometric series.
  const PowerSeries geo = unit_pow(series({1.0, -1.0, 0.0}), -2.0 * (1.0 - 0.5));
  for (int k = 0; k <= 2; ++k) check_close(geo[k], 1.0);

  std::mt19937_64 eng(11);
  const PowerSeries u = random_unit_series(eng, 10);
  const PowerSeries zeroth = unit_pow(u, 0.0);
  check_close(zeroth[0], 1.0);
  for (int k = 1; k <= 10; ++k) check_close(zeroth[k], 0.0, 0.0, 1e-14);

  CHECK_THROWS_AS(unit_pow(series({2.0, 1.0}), 1.0), NotUnitSeries);
}

TEST_CASE("unit_pow group law") {
  std::mt19937_64 eng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const PowerSeries u = random_unit_series(eng, 12);
    const double b1 = 3.0 * signed_unit_double(eng);
    const double b2 = 3.0 * signed_unit_double(eng);
    const PowerSeries sum_route = unit_pow(u, b1 + b2);
    const PowerSeries mul_route = ps_mul(unit_pow(u, b1), unit_pow(u, b2));
    const double scale = std::max(sum_route.max_abs(), 1.0);
    for (int k = 0; k <= 12; ++k)
      CHECK(std::abs(sum_route[k] - mul_route[k]) <= 1e-11 * scale);
  }

  // Integer exponents agree with repeated multiplication within roundoff.
  std::mt19937_64 eng2(23);
  const PowerSeries u = random_unit_series(eng2, 10);
  PowerSeries cube = ps_mul(ps_mul(u, u), u);
  const PowerSeries direct = unit_pow(u, 3.0);
  for (int k = 0; k <= 10; ++k)
    CHECK(std::abs(direct[k] - cube[k]) <= 1e-13 * std::max(1.0, cube.max_abs()));
}

TEST_CASE("neg_power_coeffs expands reciprocal powers") {
  const NormalizedSchlicht k0 = koebe0(12);

  // 1/K_0^3 = (1-z)^6 / z^3
  const LaurentBlock b3 = neg_power_coeffs(k0, 3, 8);
  CHECK(b3.valuation() == -3);
  check_close(b3.unit()[0], 1.0);
  check_close(b3.unit()[2], 15.0, 1e-12, 1e-10);
  check_close(b3.coeff_at(-1), 15.0, 1e-12, 1e-10);
  check_close(b3.coeff_at(0), -20.0, 1e-12, 1e-10);

  // 1/K_0 = (1-z)^2 / z = 1/z - 2 + z
  const LaurentBlock b1 = neg_power_coeffs(k0, 1, 6);
  check_close(b1.coeff_at(0), -2.0, 1e-12, 1e-12);
  check_close(b1.coeff_at(1), 1.0, 1e-12, 1e-12);
  for (int g = 3; g <= 6; ++g) CHECK(std::abs(b1.unit()[g]) <= 1e-12);

  std::mt19937_64 eng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const NormalizedSchlicht f = random_schlicht(eng, 10);
    const LaurentBlock b = neg_power_coeffs(f, 1 + trial, 9);
    check_close(b.unit()[0], 1.0);
  }

  CHECK_THROWS_AS(neg_power_coeffs(k0, 2, 12), OrderExhausted);
}

TEST_CASE("revert computes inverse coefficients by Lagrange inversion") {
  const PowerSeries inv = revert(koebe0(12), 8);
  CHECK(inv[0] == Complex(0.0));
  CHECK(inv[1] == Complex(1.0));
  check_close(inv[2], -2.0, 1e-12, 1e-10);
  check_close(inv[3], 5.0, 1e-12, 1e-10);
  check_close(inv[4], -14.0, 1e-12, 1e-10);

  const NormalizedSchlicht ident(PowerSeries::identity(8));
  const PowerSeries inv_id = revert(ident, 8);
  for (int k = 2; k <= 8; ++k) CHECK(std::abs(inv_id[k]) <= 1e-14);

  // z/(1-z) inverts to w/(1+w).
  const NormalizedSchlicht half =
      NormalizedSchlicht::from_unit(unit_pow(series({1.0, -1.0}).padded(9), -1.0));
  const PowerSeries inv_half = revert(half, 9);
  for (int k = 1; k <= 9; ++k)
    check_close(inv_half[k], (k % 2 == 0 ? -1.0 : 1.0), 1e-12, 1e-11);
}

TEST_CASE("revert agrees with forward substitution oracle") {
  std::mt19937_64 eng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const NormalizedSchlicht f = random_schlicht(eng, 14);
    const PowerSeries lagrange = revert(f, 12);
    const PowerSeries forward = revert_forward_substitution(f, 12);
    const double scale = std::max(1.0, forward.max_abs());
    for (int k = 0; k <= 12; ++k)
      CHECK(std::abs(lagrange[k] - forward[k]) <= 1e-10 * scale);
  }
}

TEST_CASE("reversion round trip on random functions") {
  std::mt19937_64 eng(47);
  for (int trial = 0; trial < 6; ++trial) {
    const int N = 6 + static_cast<int>(eng() % 15);  // up to 20
    const NormalizedSchlicht f = random_schlicht(eng, N);
    const PowerSeries r = revert(f, N);
    const double scale = std::max({1.0, f.series().max_abs(), r.max_abs()});
    const PowerSeries fr = compose(f.series(), r);
    const PowerSeries rf = compose(r, f.series());
    CHECK(std::abs(fr[1] - 1.0) <= 1e-10 * scale);
    for (int k = 2; k <= N; ++k) {
      CHECK(std::abs(fr[k]) <= 1e-10 * scale);
      CHECK(std::abs(rf[k]) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("inverse_power_coeffs matches reversion at p = 1") {
  std::mt19937_64 eng(3);
  const NormalizedSchlicht f = random_schlicht(eng, 14);
  const LaurentBlock block = inverse_power_coeffs(f, 1, 12);
  const PowerSeries r = revert(f, 12);
  CHECK(block.valuation() == 1);
  for (int n = 1; n <= 12; ++n)
    check_close(block.coeff_at(n), r[n], 1e-12, 1e-10);
}

TEST_CASE("inverse_power_coeffs handles negative powers") {
  const NormalizedSchlicht k0 = koebe0(14);
  // 1/K_0^{-1}(w) = 1/w + 2 - w + 2w^2 - ...
  const LaurentBlock block = inverse_power_coeffs(k0, -1, 6);
  CHECK(block.valuation() == -1);
  check_close(block.coeff_at(-1), 1.0);
  check_close(block.coeff_at(0), 2.0, 1e-12, 1e-10);
  check_close(block.coeff_at(1), -1.0, 1e-12, 1e-10);
  check_close(block.coeff_at(2), 2.0, 1e-12, 1e-10);

  std::mt19937_64 eng(7);
  for (int p : {-3, -2, 2, 3}) {
    const NormalizedSchlicht f = random_schlicht(eng, 16);
    const LaurentBlock b = inverse_power_coeffs(f, p, 8);
    check_close(b.coeff_at(p), 1.0);
  }

  CHECK_THROWS_AS(inverse_power_coeffs(k0, 0, 5), ZeroPower);
}

TEST_CASE("inverse powers: identity route equals direct powering") {
  std::mt19937_64 eng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const NormalizedSchlicht f = random_schlicht(eng, 20);
    for (int p : {-3, -2, -1, 1, 2, 3}) {
      const int N = 15;
      const LaurentBlock via_identity = inverse_power_coeffs(f, p, N);
      const PowerSeries r = revert(f, N + std::max(0, -p) + 1);
      const PowerSeries powered =
          unit_pow(NormalizedSchlicht(r).unit_part(), static_cast<double>(p));
      double scale = 1.0;
      for (int n = p; n <= N; ++n)
        scale = std::max({scale, std::abs(via_identity.coeff_at(n)), std::abs(powered[n - p])});
      for (int n = p; n <= N; ++n)
        CHECK(std::abs(via_identity.coeff_at(n) - powered[n - p]) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("log_derivative returns the q sequence") {
  const PowerSeries q0 = log_derivative(koebe0(12), 10);
  check_close(q0[0], 1.0);
  for (int n = 1; n <= 10; ++n) check_close(q0[n], 2.0, 1e-12, 1e-11);

  const PowerSeries q_id = log_derivative(NormalizedSchlicht(PowerSeries::identity(8)), 7);
  check_close(q_id[0], 1.0);
  for (int n = 1; n <= 7; ++n) CHECK(std::abs(q_id[n]) <= 1e-14);

  // K_alpha: q_n = 2(1-alpha) for n >= 1.
  const double alpha = 0.3;
  const NormalizedSchlicht ka =
      NormalizedSchlicht::from_unit(unit_pow(series({1.0, -1.0}).padded(11), -2.0 * (1.0 - alpha)));
  const PowerSeries qa = log_derivative(ka, 10);
  for (int n = 1; n <= 10; ++n) check_close(qa[n], 2.0 * (1.0 - alpha), 1e-11, 1e-11);
}

TEST_CASE("log_derivative is additive over products") {
  std::mt19937_64 eng(53);
  for (int trial = 0; trial < 6; ++trial) {
    const PowerSeries u = random_unit_series(eng, 12);
    const PowerSeries v = random_unit_series(eng, 12);
    const NormalizedSchlicht fu = NormalizedSchlicht::from_unit(u);
    const NormalizedSchlicht fv = NormalizedSchlicht::from_unit(v);
    const NormalizedSchlicht fuv = NormalizedSchlicht::from_unit(ps_mul(u, v));
    const PowerSeries qu = log_derivative(fu, 11);
    const PowerSeries qv = log_derivative(fv, 11);
    const PowerSeries quv = log_derivative(fuv, 11);
    for (int n = 1; n <= 11; ++n) check_close(quv[n], qu[n] + qv[n], 1e-10, 1e-10);
  }
}

TEST_CASE("magnitude guard aborts eroded computations") {
  CHECK_THROWS_AS(unit_pow(series({1.0, -1.0}).padded(24), -200.0), PrecisionErosion);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{Complex(nan, 0.0)}), PrecisionErosion);
}

TEST_CASE("LaurentBlock window semantics") {
  const LaurentBlock block(-2, series({1.0, 4.0, 6.0}));
  CHECK(block.coeff_at(-3) == Complex(0.0));
  CHECK(block.coeff_at(-2) == Complex(1.0));
  CHECK(block.coeff_at(0) == Complex(6.0));
  CHECK(block.coeff_at(1) == Complex(0.0));
  CHECK_THROWS_AS(LaurentBlock(-1, series({0.0, 1.0})), NotUnitSeries);
}
