#include "starcoef/bounds.hpp"

#include <cmath>

namespace starcoef {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw AlphaOutOfRange("alpha must lie in [0, 1)");
}

// Compensated double-double arithmetic for the telescoping-identity check.
// The explicit summation cancels catastrophically whenever a factor
// 2n(1-alpha)-j sits near zero (terms of size ~1e3 collapsing to ~1e-4), so
// plain doubles cannot reach the 1e-12 agreement the identity suite asserts.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

DD dd_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

DD dd_div_d(DD a, double b) {
  const double q1 = a.hi / b;
  const DD p = two_prod(q1, b);
  const double q2 = ((a.hi - p.hi) + (a.lo - p.lo)) / b;
  return quick_two_sum(q1, q2);
}

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::T1a: return "T1a";
    case Regime::T1b: return "T1b";
    case Regime::T1c: return "T1c";
    case Regime::T2: return "T2";
    case Regime::T3a: return "T3a";
    case Regime::T3b: return "T3b";
    case Regime::T3c: return "T3c";
    case Regime::L2_4: return "L2-4";
    case Regime::L2_5: return "L2-5";
    case Regime::L2_6: return "L2-6";
  }
  return "?";
}

std::string sharpness_name(Sharpness s) {
  return s == Sharpness::SharpKnown ? "SharpKnown" : "Open";
}

std::string extremal_name(const Extremal& e) {
  switch (e.kind) {
    case Extremal::Kind::None: return "none";
    case Extremal::Kind::KoebeAlpha: return "K_alpha";
    case Extremal::Kind::KoebeAlphaN: return "K_alpha_n=" + std::to_string(e.index);
    case Extremal::Kind::SigmaExtremal: return "sigma_m=" + std::to_string(e.index);
  }
  return "?";
}

int interval_index(double alpha, int n) {
  if (n < 1) throw BadIndex("interval_index requires n >= 1");
  check_alpha(alpha);
  const double t = static_cast<double>(n) * alpha;
  const double r = std::round(t);
  long k = std::abs(t - r) <= 1e-12 ? static_cast<long>(r) : static_cast<long>(std::floor(t));
  if (k < 0) k = 0;
  if (k > n - 1) k = n - 1;  // roundoff at the upper endpoint only
  return static_cast<int>(k);
}

double gamma_ratio_product(double c, int m) {
  if (m < 0) throw BadIndex("gamma_ratio_product requires m >= 0");
  double p = 1.0;
  // Multiply before dividing so integer-valued c stays exact.
  for (int j = 0; j < m; ++j) p = p * (c - j) / (j + 1);
  return p;
}

BoundResult lemma2_bound(int n, int g, double alpha) {
  if (n < 1 || g < 1) throw BadIndex("lemma2_bound requires n >= 1 and g >= 1");
  const int k = interval_index(alpha, n);
  const double c = 2.0 * n * (1.0 - alpha);
  if (k == n - 1) {
    const Extremal ext = g == 1 ? Extremal::koebe() : Extremal::koebe_n(g);
    return {c / g, Regime::L2_6, k, Sharpness::SharpKnown, ext};
  }
  if (g <= n - k)
    return {gamma_ratio_product(c, g), Regime::L2_4, k, Sharpness::SharpKnown, Extremal::koebe()};
  return {static_cast<double>(n - k) / g * gamma_ratio_product(c, n - k), Regime::L2_5, k,
          Sharpness::Open, Extremal::none()};
}

Lemma1Sides lemma1_check(int n, double alpha, int g) {
  if (n < 1 || g < 1) throw BadIndex("lemma1_check requires n >= 1 and g >= 1");
  check_alpha(alpha);
  const double na = n * (1.0 - alpha);
  const double c = 2.0 * na;

  DD sum{na, 0.0};
  DD prod{1.0, 0.0};
  for (int m = 1; m <= g - 1; ++m) {
    prod = dd_div_d(dd_mul_d(prod, c - (m - 1)), m);
    sum = dd_add(sum, dd_mul_d(dd_mul(prod, prod), na - m));
  }
  const DD lhs = dd_mul_d(dd_mul_d(sum, na), 4.0);

  DD root{c, 0.0};  // j = 0 factor; the remaining ones carry the factorial
  for (int j = 1; j <= g - 1; ++j) root = dd_div_d(dd_mul_d(root, c - j), j);
  const DD rhs = dd_mul(root, root);
  return {lhs.hi + lhs.lo, rhs.hi + rhs.lo};
}

BoundResult thm1_bound(int n, double alpha) {
  if (n < 2) throw BadIndex("thm1_bound requires n >= 2");
  const int k = interval_index(alpha, n);
  const double c = 2.0 * n * (1.0 - alpha);
  if (k <= 1)
    return {gamma_ratio_product(c, n - 1) / n, Regime::T1a, k, Sharpness::SharpKnown,
            Extremal::koebe()};
  if (k == n - 1)
    return {2.0 * (1.0 - alpha) / (n - 1), Regime::T1c, k, Sharpness::SharpKnown,
            Extremal::koebe_n(n - 1)};
  return {static_cast<double>(n - k) / (static_cast<double>(n) * (n - 1)) *
              gamma_ratio_product(c, n - k),
          Regime::T1b, k, Sharpness::Open, Extremal::none()};
}

KlzBounds klz_bounds(double alpha) {
  check_alpha(alpha);
  const double a2 = 2.0 * (1.0 - alpha);
  const double a3 = alpha <= 2.0 / 3.0 ? (1.0 - alpha) * (5.0 - 6.0 * alpha) : 1.0 - alpha;
  return {a2, a3};
}

double loewner_bound(int n) {
  if (n < 2) throw BadIndex("loewner_bound requires n >= 2");
  return gamma_ratio_product(2.0 * n, n - 1) / n;
}

BoundResult thm2_bound(int m, double alpha) {
  if (m < 0) throw BadIndex("thm2_bound requires m >= 0");
  check_alpha(alpha);
  return {2.0 * (1.0 - alpha) / (m + 1), Regime::T2, 0, Sharpness::SharpKnown,
          Extremal::sigma(m)};
}

BoundResult thm3_bound(int n, double alpha) {
  if (n < 0) throw BadIndex("thm3_bound requires n >= 0");
  check_alpha(alpha);
  if (n == 0)
    return {2.0 * (1.0 - alpha), Regime::T3a, 0, Sharpness::SharpKnown, Extremal::koebe()};
  const int k = interval_index(alpha, n);
  if (k == n - 1)
    return {2.0 * (1.0 - alpha) / (n + 1), Regime::T3c, k, Sharpness::SharpKnown,
            Extremal::koebe_n(n + 1)};
  const double c = 2.0 * n * (1.0 - alpha);
  return {static_cast<double>(n - k) / (static_cast<double>(n) * (n + 1)) *
              gamma_ratio_product(c, n - k),
          Regime::T3b, k, Sharpness::Open, Extremal::none()};
}

}  // namespace starcoef
