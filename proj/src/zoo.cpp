#include "starcoef/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "starcoef/rng.hpp"

namespace starcoef {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw AlphaOutOfRange("alpha must lie in [0, 1)");
}

PowerSeries one_minus_z(int order) {
  std::vector<Complex> c(static_cast<size_t>(std::max(order, 0)) + 1, Complex(0.0));
  c[0] = 1.0;
  if (order >= 1) c[1] = -1.0;
  return PowerSeries(std::move(c));
}

Complex horner(const PowerSeries& p, Complex z) {
  Complex acc(0.0);
  for (int k = p.order(); k >= 0; --k) acc = acc * z + p[k];
  return acc;
}

}  // namespace

void validate_spec(const StarlikeSpec& spec) {
  check_alpha(spec.alpha);
  if (spec.atoms.empty()) throw std::invalid_argument("spec needs at least one atom");
  if (spec.order < 1) throw BadIndex("spec order must be >= 1");
  double total = 0.0;
  for (const HerglotzAtom& a : spec.atoms) {
    if (std::abs(std::abs(a.x) - 1.0) > 1e-14)
      throw std::invalid_argument("atom positions must lie on the unit circle");
    if (a.lambda < 0.0) throw std::invalid_argument("atom weights must be nonnegative");
    total += a.lambda;
  }
  if (std::abs(total - 1.0) > 1e-14)
    throw std::invalid_argument("atom weights must sum to 1");
}

NormalizedSchlicht realize(const StarlikeSpec& spec) {
  validate_spec(spec);
  const int m = spec.order - 1;
  PowerSeries prod = PowerSeries::constant(1.0, m);
  for (const HerglotzAtom& a : spec.atoms) {
    std::vector<Complex> lin(static_cast<size_t>(m) + 1, Complex(0.0));
    lin[0] = 1.0;
    if (m >= 1) lin[1] = -a.x;
    prod = ps_mul(prod, unit_pow(PowerSeries(std::move(lin)), -2.0 * (1.0 - spec.alpha) * a.lambda));
  }
  return NormalizedSchlicht::from_unit(prod);
}

NormalizedSchlicht koebe_alpha(double alpha, int order) {
  check_alpha(alpha);
  if (order < 1) throw BadIndex("order must be >= 1");
  return NormalizedSchlicht::from_unit(unit_pow(one_minus_z(order - 1), -2.0 * (1.0 - alpha)));
}

NormalizedSchlicht koebe_alpha_n(double alpha, int n, int order) {
  check_alpha(alpha);
  if (n < 2) throw BadIndex("koebe_alpha_n requires n >= 2");
  if (order < 1) throw BadIndex("order must be >= 1");
  const int kmax = (order - 1) / n;
  const PowerSeries ut = unit_pow(one_minus_z(kmax), -2.0 * (1.0 - alpha) / n);
  std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
  for (int k = 0; k <= kmax; ++k) c[static_cast<size_t>(1 + k * n)] = ut[k];
  return NormalizedSchlicht(PowerSeries(std::move(c)));
}

StarlikeSpec draw_starlike(std::mt19937_64& eng, double alpha, int order) {
  check_alpha(alpha);
  if (order < 1) throw BadIndex("order must be >= 1");
  StarlikeSpec spec;
  spec.alpha = alpha;
  spec.order = order;
  const int count = 1 + static_cast<int>(eng() % 6);
  spec.atoms.resize(static_cast<size_t>(count));
  for (HerglotzAtom& a : spec.atoms) {
    const double theta = 2.0 * std::numbers::pi * unit_double(eng);
    a.x = Complex(std::cos(theta), std::sin(theta));
  }
  // Flat Dirichlet weights via normalized exponentials.
  double total = 0.0;
  for (HerglotzAtom& a : spec.atoms) {
    a.lambda = -std::log(1.0 - unit_double(eng));
    total += a.lambda;
  }
  if (total < 1e-300) {
    for (HerglotzAtom& a : spec.atoms) a.lambda = 1.0 / count;
  } else {
    for (HerglotzAtom& a : spec.atoms) a.lambda /= total;
  }
  return spec;
}

StarlikeSpec sample_starlike(double alpha, uint64_t seed, int order) {
  std::mt19937_64 eng(splitmix64(seed));
  StarlikeSpec spec = draw_starlike(eng, alpha, order);
  spec.seed = seed;
  return spec;
}

double starlike_order_margin(const NormalizedSchlicht& f, double alpha,
                             std::span<const double> radii, int points_per_circle) {
  if (points_per_circle < 1) throw BadIndex("need at least one sample point per circle");
  for (double r : radii)
    if (!(r > 0.0 && r <= 0.99))
      throw std::invalid_argument("sample radii must lie in (0, 0.99]");
  const PowerSeries u = f.unit_part();
  const PowerSeries du = derivative(u);
  double margin = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    for (int j = 0; j < points_per_circle; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / points_per_circle;
      const Complex z = r * Complex(std::cos(theta), std::sin(theta));
      // z f'/f = 1 + z u'/u with u = f/z; no evaluation at the origin needed.
      const Complex val = 1.0 + z * horner(du, z) / horner(u, z);
      margin = std::min(margin, val.real() - alpha);
    }
  }
  return margin;
}

SigmaSeries to_sigma(const NormalizedSchlicht& f) {
  const int G = f.order() - 1;
  const LaurentBlock block = neg_power_coeffs(f, 1, G);
  SigmaSeries s;
  s.b.resize(static_cast<size_t>(std::max(G, 1)), Complex(0.0));
  for (int m = 0; m + 1 <= G; ++m) s.b[static_cast<size_t>(m)] = block.unit()[m + 1];
  return s;
}

NormalizedSchlicht from_sigma(const SigmaSeries& g) {
  // 1/f(z) = 1/z + b_0 + b_1 z + ...  =>  f = z (1 + b_0 z + b_1 z^2 + ...)^{-1}
  std::vector<Complex> den(g.b.size() + 1, Complex(0.0));
  den[0] = 1.0;
  for (size_t m = 0; m < g.b.size(); ++m) den[m + 1] = g.b[m];
  return NormalizedSchlicht::from_unit(unit_pow(PowerSeries(std::move(den)), -1.0));
}

SigmaSeries sigma_inverse_coeffs(const NormalizedSchlicht& f, int N) {
  if (N < 0) throw BadIndex("N must be >= 0");
  if (N + 1 > f.order() - 1) throw OrderExhausted("sigma inverse coefficients beyond truncation");
  SigmaSeries s;
  s.b.assign(static_cast<size_t>(N) + 1, Complex(0.0));
  s.b[0] = log_derivative(f, 1)[1];
  for (int n = 1; n <= N; ++n)
    s.b[static_cast<size_t>(n)] =
        -neg_power_coeffs(f, n, n + 1).unit()[n + 1] / static_cast<double>(n);
  return s;
}

SigmaSeries theorem2_extremal(int m, double alpha, int N) {
  check_alpha(alpha);
  if (m < 0) throw BadIndex("m must be >= 0");
  if (N < 0) throw BadIndex("N must be >= 0");
  const double beta = 2.0 * (1.0 - alpha) / (m + 1);
  const int kmax = (N + 1) / (m + 1);
  const PowerSeries ut = unit_pow(one_minus_z(kmax), beta);
  SigmaSeries s;
  s.b.assign(static_cast<size_t>(N) + 1, Complex(0.0));
  for (int k = 1; k <= kmax; ++k) {
    const int j = k * (m + 1) - 1;
    if (j <= N) s.b[static_cast<size_t>(j)] = ut[k];
  }
  return s;
}

nlohmann::ordered_json spec_to_json(const StarlikeSpec& spec) {
  nlohmann::ordered_json j;
  j["alpha"] = spec.alpha;
  j["atoms"] = nlohmann::ordered_json::array();
  for (const HerglotzAtom& a : spec.atoms)
    j["atoms"].push_back({{"re", a.x.real()}, {"im", a.x.imag()}, {"lambda", a.lambda}});
  j["seed"] = spec.seed;
  return j;
}

StarlikeSpec spec_from_json(const nlohmann::json& j, int order) {
  StarlikeSpec spec;
  spec.alpha = j.at("alpha").get<double>();
  spec.seed = j.value("seed", uint64_t{0});
  spec.order = order;
  for (const auto& a : j.at("atoms"))
    spec.atoms.push_back(
        {Complex(a.at("re").get<double>(), a.at("im").get<double>()), a.at("lambda").get<double>()});
  validate_spec(spec);
  return spec;
}

}  // namespace starcoef
