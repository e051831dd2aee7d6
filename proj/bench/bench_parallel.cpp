// Timing comparison of the OpenMP sample fan-out against the serial
// reference path, with an equality check between the two: the merged output
// must not depend on the thread count.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "starcoef/parallel.hpp"
#include "starcoef/verify.hpp"

using namespace starcoef;

namespace {

double time_once(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double best_of(int repeats, const std::function<void()>& body) {
  double best = time_once(body);
  for (int i = 1; i < repeats; ++i) best = std::min(best, time_once(body));
  return best;
}

bool reports_equal(const VerificationReport& a, const VerificationReport& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (size_t i = 0; i < a.checks.size(); ++i) {
    const CheckRow& x = a.checks[i];
    const CheckRow& y = b.checks[i];
    if (x.name != y.name || x.observed != y.observed || x.ratio != y.ratio || x.pass != y.pass)
      return false;
  }
  return true;
}

void report_line(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s serial %8.3f s   omp(%d) %8.3f s   speedup %5.2fx   outputs %s\n", name,
              serial, hardware_threads(), parallel, serial / parallel,
              identical ? "identical" : "DIFFER");
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", hardware_threads());
  const Tolerance tol{1e-8, 1e-12};
  bool ok = true;

  {
    const int count = 600;
    VerificationReport serial_rep, parallel_rep;
    const double ts =
        best_of(2, [&] { serial_rep = verify_bounds_sample(0.3, count, 24, 11, tol, 1); });
    const double tp =
        best_of(2, [&] { parallel_rep = verify_bounds_sample(0.3, count, 24, 11, tol, 0); });
    const bool same = reports_equal(serial_rep, parallel_rep);
    ok = ok && same;
    report_line("verify_bounds_sample(600)", ts, tp, same);
  }

  {
    const long budget = 20000;
    SearchResult serial_res, parallel_res;
    const double ts = best_of(
        2, [&] { serial_res = search_extremal(5, 0.5, budget, 3, 24, SearchTarget::Thm1, 1); });
    const double tp = best_of(
        2, [&] { parallel_res = search_extremal(5, 0.5, budget, 3, 24, SearchTarget::Thm1, 0); });
    const bool same = serial_res.best_ratio == parallel_res.best_ratio;
    ok = ok && same;
    report_line("search_extremal(20000)", ts, tp, same);
  }

  if (!ok) {
    std::printf("FAIL: serial and parallel outputs differ\n");
    return 1;
  }
  return 0;
}
