// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <complex>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "starcoef/rng.hpp"
#include "starcoef/series.hpp"

namespace starcoef::testing {

/// Reversion by degree-by-degree forward substitution on compose(f, g) = z.
/// The production path goes through Lagrange inversion; this one never
/// touches negative powers.
inline PowerSeries revert_forward_substitution(const NormalizedSchlicht& f, int N) {
  std::vector<Complex> g(static_cast<size_t>(N) + 1, Complex(0.0));
  g[1] = 1.0;
  const PowerSeries outer = f.series().truncated(std::min(N, f.order()));
  for (int n = 2; n <= N; ++n) {
    // With a_1 = 1, bumping g_n shifts [z^n] of f(g) by exactly g_n.
    const PowerSeries h = compose(outer, PowerSeries(g));
    g[static_cast<size_t>(n)] -= h[n];
  }
  return PowerSeries(std::move(g));
}

/// Random unit series 1 + c_1 z + ... with coefficients in the unit disc.
inline PowerSeries random_unit_series(std::mt19937_64& eng, int order) {
  std::vector<Complex> c(static_cast<size_t>(order) + 1);
  c[0] = 1.0;
  for (int k = 1; k <= order; ++k)
    c[static_cast<size_t>(k)] = Complex(signed_unit_double(eng), signed_unit_double(eng)) * 0.5;
  return PowerSeries(std::move(c));
}

inline NormalizedSchlicht random_schlicht(std::mt19937_64& eng, int order) {
  return NormalizedSchlicht::from_unit(random_unit_series(eng, order - 1));
}

/// Exact min of Re(z K_a'/K_a) - alpha on the grid, from the closed form
/// (1 + (1-2a)z)/(1-z); no truncation involved.
inline double koebe_margin_oracle(double alpha, std::span<const double> radii,
                                  int points_per_circle) {
  double margin = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    for (int j = 0; j < points_per_circle; ++j) {
      const double theta = 2.0 * 3.14159265358979323846 * j / points_per_circle;
      const Complex z = r * Complex(std::cos(theta), std::sin(theta));
      const Complex val = (1.0 + (1.0 - 2.0 * alpha) * z) / (1.0 - z);
      margin = std::min(margin, val.real() - alpha);
    }
  }
  return margin;
}

}  // namespace starcoef::testing
