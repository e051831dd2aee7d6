#include "starcoef/series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace starcoef {

namespace {

void check_magnitudes(const std::vector<Complex>& c) {
  for (const Complex& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw PrecisionErosion("non-finite coefficient");
    if (std::abs(v.real()) > kCoeffMagnitudeGuard || std::abs(v.imag()) > kCoeffMagnitudeGuard)
      throw PrecisionErosion("coefficient magnitude exceeds 1e14 guard");
  }
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, Complex(0.0));
  check_magnitudes(coeffs_);
}

PowerSeries PowerSeries::constant(Complex value, int order) {
  std::vector<Complex> c(static_cast<size_t>(std::max(order, 0)) + 1, Complex(0.0));
  c[0] = value;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::identity(int order) {
  if (order < 1) throw BadIndex("identity series needs order >= 1");
  std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
  c[1] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw OrderExhausted("truncation order outside stored range");
  std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::padded(int new_order) const {
  if (new_order < order()) throw BadIndex("padded() cannot shrink a series");
  std::vector<Complex> c = coeffs_;
  c.resize(static_cast<size_t>(new_order) + 1, Complex(0.0));
  return PowerSeries(std::move(c));
}

double PowerSeries::max_abs() const {
  double m = 0.0;
  for (const Complex& v : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

NormalizedSchlicht::NormalizedSchlicht(PowerSeries series) : series_(std::move(series)) {
  if (series_.order() < 1 || series_[0] != Complex(0.0) || series_[1] != Complex(1.0))
    throw std::invalid_argument("normalized series requires c_0 = 0 and c_1 = 1");
}

NormalizedSchlicht NormalizedSchlicht::from_unit(const PowerSeries& unit) {
  if (unit[0] != Complex(1.0)) throw NotUnitSeries("unit part must start with 1");
  std::vector<Complex> c(static_cast<size_t>(unit.order()) + 2, Complex(0.0));
  for (int k = 0; k <= unit.order(); ++k) c[static_cast<size_t>(k) + 1] = unit[k];
  return NormalizedSchlicht(PowerSeries(std::move(c)));
}

PowerSeries NormalizedSchlicht::unit_part() const {
  std::vector<Complex> c(static_cast<size_t>(order()), Complex(0.0));
  for (int k = 1; k <= order(); ++k) c[static_cast<size_t>(k) - 1] = series_[k];
  return PowerSeries(std::move(c));
}

LaurentBlock::LaurentBlock(int valuation, PowerSeries unit)
    : valuation_(valuation), unit_(std::move(unit)) {
  if (unit_[0] == Complex(0.0))
    throw NotUnitSeries("Laurent unit part must have nonzero constant term");
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a[k] + b[k];
  return PowerSeries(std::move(c));
}

PowerSeries ps_scale(const PowerSeries& a, Complex factor) {
  std::vector<Complex> c = a.coeffs();
  for (Complex& v : c) v *= factor;
  return PowerSeries(std::move(c));
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0));
  for (int i = 0; i <= n; ++i) {
    const Complex ai = a[i];
    if (ai == Complex(0.0)) continue;
    for (int j = 0; i + j <= n; ++j) c[static_cast<size_t>(i + j)] += ai * b[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner[0] != Complex(0.0))
    throw NonzeroConstantTerm("compose requires inner constant term zero");
  const int n = std::min(outer.order(), inner.order());
  const PowerSeries in_t = inner.truncated(n);
  // Horner in the truncated series ring.
  PowerSeries acc = PowerSeries::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k)
    acc = ps_add(ps_mul(acc, in_t), PowerSeries::constant(outer[k], n));
  return acc;
}

PowerSeries unit_pow(const PowerSeries& h, double beta) {
  if (h[0] != Complex(1.0)) throw NotUnitSeries("unit_pow requires h_0 = 1");
  const int n = h.order();
  std::vector<Complex> p(static_cast<size_t>(n) + 1, Complex(0.0));
  p[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    Complex acc(0.0);
    for (int k = 1; k <= m; ++k)
      acc += (beta * k - static_cast<double>(m - k)) * h[k] * p[static_cast<size_t>(m - k)];
    p[static_cast<size_t>(m)] = acc / static_cast<double>(m);
  }
  return PowerSeries(std::move(p));
}

PowerSeries derivative(const PowerSeries& a) {
  if (a.order() == 0) return PowerSeries();
  std::vector<Complex> c(static_cast<size_t>(a.order()), Complex(0.0));
  for (int k = 0; k < a.order(); ++k)
    c[static_cast<size_t>(k)] = static_cast<double>(k + 1) * a[k + 1];
  return PowerSeries(std::move(c));
}

LaurentBlock neg_power_coeffs(const NormalizedSchlicht& f, int n, int G) {
  if (n < 1) throw BadIndex("neg_power_coeffs requires n >= 1");
  if (G < 0 || G > f.order() - 1)
    throw OrderExhausted("requested Laurent coefficients beyond truncation");
  return LaurentBlock(-n, unit_pow(f.unit_part().truncated(G), -static_cast<double>(n)));
}

PowerSeries revert(const NormalizedSchlicht& f, int N) {
  if (N < 1 || N > f.order()) throw OrderExhausted("reversion order outside truncation");
  std::vector<Complex> c(static_cast<size_t>(N) + 1, Complex(0.0));
  c[1] = 1.0;
  for (int m = 2; m <= N; ++m) {
    const LaurentBlock block = neg_power_coeffs(f, m, m - 1);
    c[static_cast<size_t>(m)] = block.unit()[m - 1] / static_cast<double>(m);
  }
  return PowerSeries(std::move(c));
}

LaurentBlock inverse_power_coeffs(const NormalizedSchlicht& f, int p, int N) {
  if (p == 0) throw ZeroPower("inverse_power_coeffs requires p != 0");
  if (N < p) throw BadIndex("inverse_power_coeffs requires N >= p");
  if (N - p > f.order() - 1)
    throw OrderExhausted("inverse power coefficients beyond truncation");
  std::vector<Complex> a(static_cast<size_t>(N - p) + 1, Complex(0.0));
  a[0] = 1.0;  // the n = p leading coefficient
  const PowerSeries fz = f.unit_part();
  for (int n = p; n <= N; ++n) {
    if (n == p) continue;
    const int g = n - p;
    if (n == 0) {
      // The constant term of (f^{-1})^p equals q_{-p} of the logarithmic
      // derivative; the residue identity below does not cover n = 0.
      a[static_cast<size_t>(g)] = log_derivative(f, -p)[-p];
      continue;
    }
    // A_n^{(p)} = (p/n) a_{-p}^{(-n)}; for n < 0 the block below is a
    // positive power of f.
    const PowerSeries u = unit_pow(fz.truncated(std::min(g, fz.order())), -static_cast<double>(n));
    a[static_cast<size_t>(g)] = (static_cast<double>(p) / static_cast<double>(n)) * u[g];
  }
  return LaurentBlock(p, PowerSeries(std::move(a)));
}

PowerSeries log_derivative(const NormalizedSchlicht& f, int N) {
  if (N < 0 || N > f.order() - 1)
    throw OrderExhausted("log_derivative order outside truncation");
  const PowerSeries u = f.unit_part();
  // z f'/f = 1 + z u'/u with u = f/z.
  const PowerSeries ratio = ps_mul(derivative(u), unit_pow(u, -1.0));
  std::vector<Complex> q(static_cast<size_t>(N) + 1, Complex(0.0));
  q[0] = 1.0;
  for (int m = 1; m <= N; ++m) q[static_cast<size_t>(m)] = ratio[m - 1];
  return PowerSeries(std::move(q));
}

}  // namespace starcoef
