#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "starcoef/bounds.hpp"
#include "starcoef/series.hpp"
#include "starcoef/zoo.hpp"

namespace starcoef {

struct Tolerance {
  double rel = 1e-8;
  double abs_floor = 1e-12;
};

/// observed <= bound (1 + rel) + abs_floor
inline bool within_bound(double observed, double bound, Tolerance tol) {
  return observed <= bound * (1.0 + tol.rel) + tol.abs_floor;
}

/// |a - b| <= rel max(|a|, |b|) + abs_floor (two-sided, for sharpness rows)
inline bool within_equality(double a, double b, Tolerance tol) {
  return std::abs(a - b) <= tol.rel * std::max(std::abs(a), std::abs(b)) + tol.abs_floor;
}

struct CheckRow {
  std::string name;
  int n = 0;
  double alpha = 0.0;
  double observed = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool pass = true;
};

struct VerificationReport {
  std::vector<CheckRow> checks;
  double max_relative_excess = 0.0;  // max over rows of observed/bound - 1
  uint64_t seed = 0;
  int order = kDefaultOrder;
  Tolerance tol;

  bool all_pass() const;
  void append(VerificationReport&& other);
  void recompute_excess();
};

/// Compares (p/n) a_{-p}^{(-n)} against direct powering of the reverted
/// series, for every p in p_set and n = p..N. Requires f.order >= N + max|p|.
VerificationReport verify_jabotinsky(const NormalizedSchlicht& f, std::span<const int> p_set,
                                     int N, Tolerance tol);

/// Draws count functions and checks every coefficient family against its
/// bound: negative powers (n <= 8), inverse coefficients (n <= 12), the
/// Sigma expansion (m <= 12) and its inverse (n <= 8). Sample loop fans out
/// across threads; rows are merged in sample order, so the report is
/// identical for any thread count.
VerificationReport verify_bounds_sample(double alpha, int count, int N, uint64_t seed,
                                        Tolerance tol, int threads = 0);

/// For SharpKnown regimes at (n, alpha), computes the named extremal
/// function's coefficient and asserts equality with the bound. Open regimes
/// get an informational row with the best ratio over the candidate family
/// (K_alpha and K_{alpha,j}), checked for compliance only.
VerificationReport verify_sharpness(int n, double alpha, int N, Tolerance tol);

struct Lemma1Point {
  int n = 1;
  double alpha = 0.0;
  int g = 1;
};

VerificationReport verify_lemma1(std::span<const Lemma1Point> grid, Tolerance tol);

/// compose(f, revert(f, N)) and compose(revert(f, N), f) against the
/// identity, residuals measured relative to the largest coefficient
/// magnitude encountered.
VerificationReport verify_roundtrip(const NormalizedSchlicht& f, int N, Tolerance tol);

enum class SearchTarget { Thm1, Thm3 };

struct SearchResult {
  double best_ratio = 0.0;
  double baseline_ratio = 0.0;  // deterministic single-atom (K_alpha) reference
  StarlikeSpec best_spec;
  BoundResult bound;
};

/// Random-restart hill climb over atom angles and weights maximizing the
/// target coefficient magnitude relative to its bound. Only valid in Open
/// regimes (throws WrongRegime otherwise); never asserts sharpness. budget
/// counts objective evaluations across all restarts.
SearchResult search_extremal(int n, double alpha, long budget, uint64_t seed, int N,
                             SearchTarget target = SearchTarget::Thm1, int threads = 0);

}  // namespace starcoef
