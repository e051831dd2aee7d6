#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "starcoef/series.hpp"

namespace starcoef {

/// Point mass x on the unit circle with weight lambda. A convex combination
/// of atoms generates z f'/f = alpha + (1-alpha) sum_k lambda_k
/// (1+x_k z)/(1-x_k z), so the realized function is starlike of order alpha
/// by construction.
struct HerglotzAtom {
  Complex x;
  double lambda = 0.0;
};

/// Order alpha plus Herglotz atoms: a constructive membership certificate.
struct StarlikeSpec {
  double alpha = 0.0;
  std::vector<HerglotzAtom> atoms;
  int order = kDefaultOrder;
  uint64_t seed = 0;  // reproducibility record; 0 for hand-built specs
};

void validate_spec(const StarlikeSpec& spec);

/// f(z) = z prod_k (1 - x_k z)^{-2(1-alpha) lambda_k}, truncated at spec.order.
NormalizedSchlicht realize(const StarlikeSpec& spec);

/// K_alpha(z) = z (1-z)^{-2(1-alpha)}; a_n = prod_{j=2..n} (j-2 alpha)/(j-1).
NormalizedSchlicht koebe_alpha(double alpha, int order);

/// K_{alpha,n}(z) = z (1-z^n)^{-2(1-alpha)/n}; only exponents 1 mod n survive.
NormalizedSchlicht koebe_alpha_n(double alpha, int n, int order);

/// Random member of S*(alpha): 1..6 atoms uniform on the circle, flat
/// Dirichlet weights. Deterministic in (alpha, seed, order).
StarlikeSpec sample_starlike(double alpha, uint64_t seed, int order);

/// Engine-level sampler behind sample_starlike, for callers that manage
/// their own RNG streams (the extremal search). Does not set spec.seed.
StarlikeSpec draw_starlike(std::mt19937_64& eng, double alpha, int order);

/// min over the sample grid of Re(z f'/f) - alpha by polynomial evaluation of
/// the truncated series. Heuristic: truncation error grows sharply toward
/// |z| = 1, so keep radii at or below 0.9 and budget the order accordingly.
double starlike_order_margin(const NormalizedSchlicht& f, double alpha,
                             std::span<const double> radii, int points_per_circle);

/// Expansion z + b_0 + b_1/z + ... about infinity; stores b_0..b_N, the
/// leading z term is implicit. Also carries the inverse coefficients B_n.
struct SigmaSeries {
  std::vector<Complex> b;
  int order() const { return static_cast<int>(b.size()) - 1; }
};

/// g(z) = 1/f(1/z): b_m = a_m^{(-1)}, the 1/f expansion read about infinity.
SigmaSeries to_sigma(const NormalizedSchlicht& f);

/// Inverse transform: rebuilds f with from_sigma(to_sigma(f)) = f.
NormalizedSchlicht from_sigma(const SigmaSeries& g);

/// Coefficients B_n of g^{-1}(w) = w + B_0 + B_1/w + ... for the g induced by
/// f: B_0 = q_1 and B_n = (-1/n) a_1^{(-n)} for n >= 1.
SigmaSeries sigma_inverse_coeffs(const NormalizedSchlicht& f, int N);

/// g(z) = z (1 - z^{-(m+1)})^{2(1-alpha)/(m+1)}, whose coefficient b_m has
/// magnitude exactly 2(1-alpha)/(m+1).
SigmaSeries theorem2_extremal(int m, double alpha, int N);

// Reproducibility record: {alpha, atoms:[{re,im,lambda}], seed}.
nlohmann::ordered_json spec_to_json(const StarlikeSpec& spec);
StarlikeSpec spec_from_json(const nlohmann::json& j, int order = kDefaultOrder);

}  // namespace starcoef
