#pragma once

#include <complex>
#include <vector>

#include "starcoef/errors.hpp"

namespace starcoef {

using Complex = std::complex<double>;

// Binomial-type coefficient growth (~4^n) erodes the double mantissa long
// before overflow, so any coefficient above this magnitude aborts with
// PrecisionErosion. At the default order 24 at least 7 safe digits remain.
inline constexpr double kCoeffMagnitudeGuard = 1e14;
inline constexpr int kDefaultOrder = 24;

/// Truncated complex Taylor series c_0 + c_1 z + ... + c_N z^N.
///
/// Immutable after construction; all operations below are pure functions, so
/// values can be shared freely across threads.
class PowerSeries {
 public:
  PowerSeries() : coeffs_(1, Complex(0.0)) {}
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries constant(Complex value, int order);
  /// The series z (requires order >= 1).
  static PowerSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^k; zero beyond the truncation order.
  Complex operator[](int k) const {
    return k >= 0 && k <= order() ? coeffs_[static_cast<size_t>(k)] : Complex(0.0);
  }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  PowerSeries truncated(int new_order) const;
  PowerSeries padded(int new_order) const;
  double max_abs() const;

 private:
  std::vector<Complex> coeffs_;
};

/// A series z + a_2 z^2 + ... (c_0 = 0 and c_1 = 1 exactly).
class NormalizedSchlicht {
 public:
  explicit NormalizedSchlicht(PowerSeries series);
  /// Builds z * u from a unit series u (u_0 = 1); result has order u.order()+1.
  static NormalizedSchlicht from_unit(const PowerSeries& unit);

  const PowerSeries& series() const { return series_; }
  int order() const { return series_.order(); }
  Complex operator[](int k) const { return series_[k]; }
  /// f(z)/z as a unit power series of order N-1.
  PowerSeries unit_part() const;

 private:
  PowerSeries series_;
};

/// Valuation v plus a unit series u (u_0 != 0), representing
/// sum_{g>=0} u_g z^{v+g}. Houses the negative-power coefficient blocks.
class LaurentBlock {
 public:
  LaurentBlock(int valuation, PowerSeries unit);

  int valuation() const { return valuation_; }
  const PowerSeries& unit() const { return unit_; }
  /// Coefficient of z^exponent (zero outside the stored window).
  Complex coeff_at(int exponent) const {
    return unit_[exponent - valuation_];
  }

 private:
  int valuation_;
  PowerSeries unit_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const PowerSeries& a, Complex factor);

/// Cauchy product truncated to min(a.order, b.order).
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

/// outer(inner(z)) truncated at the common order. inner must have zero
/// constant term; throws NonzeroConstantTerm otherwise.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// h(z)^beta for a unit series (h_0 = 1), via the J.C.P. Miller recurrence
/// n p_n = sum_{k=1..n} (beta k - (n-k)) h_k p_{n-k}. One pass, no branch-cut
/// bookkeeping, exact recurrence structure even for real beta.
PowerSeries unit_pow(const PowerSeries& h, double beta);

/// Termwise derivative; order shrinks by one (a constant differentiates to
/// the zero series of order 0).
PowerSeries derivative(const PowerSeries& a);

/// Coefficients a_{-n+g}^{(-n)} of 1/f(z)^n = sum_g a_{-n+g}^{(-n)} z^{-n+g},
/// g = 0..G, as a LaurentBlock with valuation -n and unit constant term 1.
LaurentBlock neg_power_coeffs(const NormalizedSchlicht& f, int n, int G);

/// Series of f^{-1} through order N by Lagrange inversion:
/// c_1 = 1 and c_n = (1/n) a_{-1}^{(-n)} for n = 2..N.
PowerSeries revert(const NormalizedSchlicht& f, int N);

/// Coefficients A_n^{(p)} of (f^{-1}(w))^p for n = p..N, valuation p,
/// leading coefficient 1. Off-leading terms come from A_n^{(p)} = (p/n)
/// a_{-p}^{(-n)}; the n = 0 term (p negative) comes from the logarithmic
/// derivative. Throws ZeroPower for p = 0.
LaurentBlock inverse_power_coeffs(const NormalizedSchlicht& f, int p, int N);

/// The sequence q with q_0 = 1 and z f'(z)/f(z) = sum_n q_n z^n.
PowerSeries log_derivative(const NormalizedSchlicht& f, int N);

}  // namespace starcoef
