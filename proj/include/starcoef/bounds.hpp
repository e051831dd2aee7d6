#pragma once

#include <string>

#include "starcoef/errors.hpp"

namespace starcoef {

// Which closed-form case fired. T1*/T3* are the inverse-coefficient bound
// families, T2 the direct Sigma-class coefficient bound, L2-* the
// negative-power coefficient cases feeding them.
enum class Regime { T1a, T1b, T1c, T2, T3a, T3b, T3c, L2_4, L2_5, L2_6 };

enum class Sharpness { SharpKnown, Open };

struct Extremal {
  enum class Kind { None, KoebeAlpha, KoebeAlphaN, SigmaExtremal };
  Kind kind = Kind::None;
  int index = 0;  // n for KoebeAlphaN, m for SigmaExtremal

  static Extremal none() { return {}; }
  static Extremal koebe() { return {Kind::KoebeAlpha, 0}; }
  static Extremal koebe_n(int n) { return {Kind::KoebeAlphaN, n}; }
  static Extremal sigma(int m) { return {Kind::SigmaExtremal, m}; }
};

/// A bound value plus the regime that produced it and its sharpness status.
struct BoundResult {
  double value = 0.0;
  Regime regime = Regime::T1a;
  int interval_k = 0;
  Sharpness sharp = Sharpness::Open;
  Extremal extremal;
};

std::string regime_name(Regime r);
std::string sharpness_name(Sharpness s);
std::string extremal_name(const Extremal& e);

/// Index k of the half-open interval [k/n, (k+1)/n) containing alpha.
/// Products n*alpha within 1e-12 of an integer snap to it, so grid points
/// intended to sit on a boundary land in the upper interval.
int interval_index(double alpha, int n);

/// prod_{j=0..m-1} (c - j)/(j + 1), the pole-free telescoping form of
/// Gamma(c+1) / (Gamma(m+1) Gamma(c+1-m)). Empty product is 1. Every gamma
/// quotient in the bound formulas is evaluated through this product.
double gamma_ratio_product(double c, int m);

/// Bound on |a_{-n+g}^{(-n)}| for f starlike of order alpha.
BoundResult lemma2_bound(int n, int g, double alpha);

/// Both sides of the telescoping identity
///   4n(1-a)[n(1-a) + sum_{m=1..g-1} (n(1-a)-m) prod_m^2]
///     = prod_{j=0..g-1} (2n(1-a)-j)^2 / ((g-1)!)^2
/// evaluated independently; callers assert equality.
struct Lemma1Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};
Lemma1Sides lemma1_check(int n, double alpha, int g);

/// Bound on |A_n| for inverses of starlike functions of order alpha, n >= 2.
BoundResult thm1_bound(int n, double alpha);

/// The two classical low-order inverse-coefficient bounds: |A_2| <= 2(1-a)
/// and the two-branch |A_3| bound switching at alpha = 2/3.
struct KlzBounds {
  double a2 = 0.0;
  double a3 = 0.0;
};
KlzBounds klz_bounds(double alpha);

/// |A_n| bound at alpha = 0: Gamma(2n+1)/(Gamma(n+2) Gamma(n+1)).
double loewner_bound(int n);

/// Bound on |b_m| for the Sigma class of order alpha: 2(1-alpha)/(m+1).
BoundResult thm2_bound(int m, double alpha);

/// Bound on |B_n| for inverses in the Sigma class of order alpha, n >= 0.
BoundResult thm3_bound(int n, double alpha);

}  // namespace starcoef
