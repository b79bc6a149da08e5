// Timing comparison: serial reference path vs the OpenMP trial loop, for each
// constant estimator. The two paths must agree bit-for-bit; this binary
// asserts that while it measures.
//
//   bench_estimators [dim] [trials] [seed]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "zalpha/estimators.hpp"

using namespace zalpha;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int mismatches = 0;

void report(const char* name, double serial_ms, double parallel_ms, double serial_est,
            double parallel_est) {
  const bool same = serial_est == parallel_est;
  if (!same) ++mismatches;
  std::printf("%-16s %10.1f ms %10.1f ms %7.2fx   %-9s %.17g\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, same ? "identical" : "MISMATCH", parallel_est);
}

}  // namespace

int main(int argc, char** argv) {
  EstimatorConfig cfg;
  cfg.dim = argc > 1 ? std::stoul(argv[1]) : 256;
  cfg.trials = argc > 2 ? std::stoul(argv[2]) : 20000;
  cfg.seed = argc > 3 ? std::stoull(argv[3]) : 1;
  cfg.alpha = Alpha{1.0};
  if (cfg.dim % 2 != 0) {
    std::fprintf(stderr, "dim must be even (the splitting estimator needs it)\n");
    return 2;
  }

  std::printf("dim=%zu trials=%zu seed=%llu\n", cfg.dim, cfg.trials,
              static_cast<unsigned long long>(cfg.seed));
  std::printf("%-16s %13s %13s %9s   %-9s %s\n", "estimator", "serial", "parallel", "speedup",
              "result", "estimate");

  {
    ConstantReport s, p;
    const double ts = time_ms([&] { s = quasilinearity_estimate(cfg, Execution::serial); });
    const double tp = time_ms([&] { p = quasilinearity_estimate(cfg, Execution::parallel); });
    report("qlinear", ts, tp, s.estimate, p.estimate);
  }
  {
    ConstantReport s, p;
    const double ts = time_ms([&] { s = quasi_triangle_estimate(cfg, Execution::serial); });
    const double tp = time_ms([&] { p = quasi_triangle_estimate(cfg, Execution::parallel); });
    report("qtriangle", ts, tp, s.estimate, p.estimate);
  }
  {
    ConstantReport s, p;
    const double ts = time_ms([&] { s = multiplier_constant_estimate(cfg, Execution::serial); });
    const double tp = time_ms([&] { p = multiplier_constant_estimate(cfg, Execution::parallel); });
    report("multiplier", ts, tp, s.estimate, p.estimate);
  }
  {
    UNormReport s, p;
    const double ts = time_ms([&] { s = u_norm_estimate(cfg, Execution::serial); });
    const double tp = time_ms([&] { p = u_norm_estimate(cfg, Execution::parallel); });
    const bool same = s.forward.estimate == p.forward.estimate &&
                      s.inverse.estimate == p.inverse.estimate;
    if (!same) ++mismatches;
    std::printf("%-16s %10.1f ms %10.1f ms %7.2fx   %-9s %.17g / %.17g\n", "unorm", ts, tp,
                ts / tp, same ? "identical" : "MISMATCH", p.forward.estimate,
                p.inverse.estimate);
  }

  if (mismatches != 0) {
    std::fprintf(stderr, "%d estimator(s) disagree between serial and parallel runs\n",
                 mismatches);
    return 1;
  }
  return 0;
}
