#include "zalpha/estimators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace zalpha {

namespace {

void check_config(const EstimatorConfig& cfg) {
  if (cfg.dim == 0) throw std::invalid_argument("estimator: dim must be >= 1");
  if (cfg.trials == 0) throw std::invalid_argument("estimator: trials must be >= 1");
  if (cfg.families.empty()) throw std::invalid_argument("estimator: families must be nonempty");
  if (!std::isfinite(cfg.alpha.value))
    throw std::invalid_argument("estimator: alpha must be finite");
}

Family pick_family(const std::vector<Family>& fams, Rng& rng) {
  return fams[rng.next() % fams.size()];
}

ComplexVector trial_vector(Family f, std::size_t n, Rng& rng) {
  ComplexVector v(n, Complex(0.0, 0.0));
  switch (f) {
    case Family::gaussian:
      for (auto& z : v) z = rng.gaussian();
      break;
    case Family::flat:
      // random phases, then a random 0/1 support mask: indicator-like vectors
      for (auto& z : v) z = rng.unimodular();
      for (auto& z : v)
        if (!rng.bit()) z = Complex(0.0, 0.0);
      break;
    case Family::spike: {
      const std::size_t pos = rng.next() % n;
      v[pos] = rng.unimodular();
      break;
    }
    case Family::geometric_decay:
      for (std::size_t k = 0; k < n; ++k)
        v[k] = std::exp2(-0.5 * static_cast<double>(k + 1)) * rng.unimodular();
      break;
  }
  return v;
}

ZPoint trial_point(std::size_t n, Alpha a, const std::vector<Family>& fams, Rng& rng) {
  const Family fx = pick_family(fams, rng);
  ComplexVector x = trial_vector(fx, n, rng);
  const Family fy = pick_family(fams, rng);
  ComplexVector y = trial_vector(fy, n, rng);
  return ZPoint{std::move(x), std::move(y), a};
}

ComplexVector trial_multiplier(std::size_t n, Rng& rng) {
  ComplexVector s(n);
  if (rng.bit()) {
    for (auto& z : s) z = rng.unimodular();
  } else {
    for (auto& z : s) z = rng.bit() ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  }
  return s;
}

// Deterministic argmax: larger ratio wins, ties to the smaller trial index.
// merge() of thread-local trackers is order-independent.
struct Best {
  double ratio = -1.0;
  std::uint64_t trial = std::numeric_limits<std::uint64_t>::max();

  void offer(double r, std::uint64_t t) {
    if (!std::isfinite(r)) return;
    if (r > ratio || (r == ratio && t < trial)) {
      ratio = r;
      trial = t;
    }
  }
  void merge(const Best& o) {
    if (o.ratio > ratio || (o.ratio == ratio && o.trial < trial)) {
      ratio = o.ratio;
      trial = o.trial;
    }
  }
  bool valid() const { return trial != std::numeric_limits<std::uint64_t>::max(); }
};

// TrialFn: trial index -> ratio, or a non-finite value for a skipped trial.
template <typename TrialFn>
Best max_over_trials(std::size_t trials, Execution ex, TrialFn&& fn) {
  Best best;
#ifdef _OPENMP
  if (ex == Execution::parallel) {
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(static) nowait
      for (long long t = 0; t < static_cast<long long>(trials); ++t)
        local.offer(fn(static_cast<std::uint64_t>(t)), static_cast<std::uint64_t>(t));
#pragma omp critical
      best.merge(local);
    }
    return best;
  }
#else
  (void)ex;
#endif
  for (std::uint64_t t = 0; t < trials; ++t) best.offer(fn(t), t);
  return best;
}

ConstantReport base_report(const char* name, const EstimatorConfig& cfg) {
  ConstantReport rep;
  rep.constant_name = name;
  rep.alpha = cfg.alpha;
  rep.dim = cfg.dim;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  rep.families = cfg.families;
  return rep;
}

}  // namespace

double quasilinearity_ratio(const ComplexVector& x, const ComplexVector& y, Alpha a) {
  if (x.size() != y.size())
    throw std::invalid_argument("quasilinearity_ratio: length mismatch");
  const double den = l2_norm(x) + l2_norm(y);
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  ComplexVector dev = omega(vadd(x, y), a);
  const ComplexVector ox = omega(x, a);
  const ComplexVector oy = omega(y, a);
  for (std::size_t k = 0; k < dev.size(); ++k) dev[k] -= ox[k] + oy[k];
  return l2_norm(dev) / den;
}

double quasi_triangle_ratio(const ZPoint& p, const ZPoint& q) {
  const double num = znorm(add(p, q));
  const double den = znorm(p) + znorm(q);
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return num / den;
}

double multiplier_ratio(const DiagonalMultiplier& s, const ZPoint& p) {
  const double num = znorm(multiplier_apply(s, p));
  const double den = znorm(p);
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return num / den;
}

double u_split_ratio(const ZPoint& p) {
  const auto [odd, even] = u_split(p);
  const double den = znorm(p);
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return direct_sum_norm(odd, even) / den;
}

double u_merge_ratio(const ZPoint& a, const ZPoint& b) {
  const double num = znorm(u_merge(a, b));
  const double den = direct_sum_norm(a, b);
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return num / den;
}

ConstantReport quasilinearity_estimate(const EstimatorConfig& cfg, Execution ex) {
  check_config(cfg);
  auto inputs = [&cfg](std::uint64_t t) {
    Rng rng = substream(cfg.seed, t);
    const Family fx = pick_family(cfg.families, rng);
    ComplexVector x = trial_vector(fx, cfg.dim, rng);
    const Family fy = pick_family(cfg.families, rng);
    ComplexVector y = trial_vector(fy, cfg.dim, rng);
    return std::pair{std::move(x), std::move(y)};
  };
  const Best best = max_over_trials(cfg.trials, ex, [&](std::uint64_t t) {
    const auto [x, y] = inputs(t);
    return quasilinearity_ratio(x, y, cfg.alpha);
  });
  ConstantReport rep = base_report("quasilinearity", cfg);
  if (best.valid()) {
    rep.estimate = best.ratio;
    rep.witness.trial = best.trial;
    auto [x, y] = inputs(best.trial);
    rep.witness.parts = {{"x", std::move(x)}, {"y", std::move(y)}};
  }
  return rep;
}

ConstantReport quasi_triangle_estimate(const EstimatorConfig& cfg, Execution ex) {
  check_config(cfg);
  auto inputs = [&cfg](std::uint64_t t) {
    Rng rng = substream(cfg.seed, t);
    ZPoint p = trial_point(cfg.dim, cfg.alpha, cfg.families, rng);
    // trial 0 is the duplicated pair, which pins the estimate at >= 1
    ZPoint q = (t == 0) ? p : trial_point(cfg.dim, cfg.alpha, cfg.families, rng);
    return std::pair{std::move(p), std::move(q)};
  };
  const Best best = max_over_trials(cfg.trials, ex, [&](std::uint64_t t) {
    const auto [p, q] = inputs(t);
    return quasi_triangle_ratio(p, q);
  });
  ConstantReport rep = base_report("quasi_triangle", cfg);
  if (best.valid()) {
    rep.estimate = best.ratio;
    rep.witness.trial = best.trial;
    auto [p, q] = inputs(best.trial);
    rep.witness.parts = {{"p_x", std::move(p.x)},
                         {"p_y", std::move(p.y)},
                         {"q_x", std::move(q.x)},
                         {"q_y", std::move(q.y)}};
  }
  return rep;
}

ConstantReport multiplier_constant_estimate(const EstimatorConfig& cfg, Execution ex) {
  check_config(cfg);
  auto inputs = [&cfg](std::uint64_t t) {
    Rng rng = substream(cfg.seed, t);
    ZPoint p = trial_point(cfg.dim, cfg.alpha, cfg.families, rng);
    ComplexVector s;
    switch (t) {
      case 0: s = ones_multiplier(cfg.dim).s; break;
      case 1: s = indicator_odd(cfg.dim).s; break;
      case 2: s = indicator_even(cfg.dim).s; break;
      default: s = trial_multiplier(cfg.dim, rng); break;
    }
    return std::pair{DiagonalMultiplier{std::move(s)}, std::move(p)};
  };
  const Best best = max_over_trials(cfg.trials, ex, [&](std::uint64_t t) {
    const auto [s, p] = inputs(t);
    return multiplier_ratio(s, p);
  });
  ConstantReport rep = base_report("multiplier_bound", cfg);
  if (best.valid()) {
    rep.estimate = best.ratio;
    rep.witness.trial = best.trial;
    auto [s, p] = inputs(best.trial);
    rep.witness.parts = {
        {"s", std::move(s.s)}, {"p_x", std::move(p.x)}, {"p_y", std::move(p.y)}};
  }
  return rep;
}

UNormReport u_norm_estimate(const EstimatorConfig& cfg, Execution ex) {
  check_config(cfg);
  if (cfg.dim % 2 != 0)
    throw std::invalid_argument("u_norm_estimate: dim must be even");
  // one substream drives both directions: p for the split, then the
  // half-length pair (a, b) for the merge
  auto inputs = [&cfg](std::uint64_t t) {
    Rng rng = substream(cfg.seed, t);
    ZPoint p = trial_point(cfg.dim, cfg.alpha, cfg.families, rng);
    ZPoint a = trial_point(cfg.dim / 2, cfg.alpha, cfg.families, rng);
    ZPoint b = trial_point(cfg.dim / 2, cfg.alpha, cfg.families, rng);
    return std::tuple{std::move(p), std::move(a), std::move(b)};
  };

  Best fwd_best;
  Best inv_best;
  auto run_serial = [&]() {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      const auto [p, a, b] = inputs(t);
      fwd_best.offer(u_split_ratio(p), t);
      inv_best.offer(u_merge_ratio(a, b), t);
    }
  };
#ifdef _OPENMP
  if (ex == Execution::parallel) {
#pragma omp parallel
    {
      Best fwd_local;
      Best inv_local;
#pragma omp for schedule(static) nowait
      for (long long t = 0; t < static_cast<long long>(cfg.trials); ++t) {
        const auto [p, a, b] = inputs(static_cast<std::uint64_t>(t));
        fwd_local.offer(u_split_ratio(p), static_cast<std::uint64_t>(t));
        inv_local.offer(u_merge_ratio(a, b), static_cast<std::uint64_t>(t));
      }
#pragma omp critical
      {
        fwd_best.merge(fwd_local);
        inv_best.merge(inv_local);
      }
    }
  } else {
    run_serial();
  }
#else
  (void)ex;
  run_serial();
#endif

  UNormReport out{base_report("u_split_norm", cfg), base_report("u_merge_norm", cfg)};
  if (fwd_best.valid()) {
    out.forward.estimate = fwd_best.ratio;
    out.forward.witness.trial = fwd_best.trial;
    auto [p, a, b] = inputs(fwd_best.trial);
    out.forward.witness.parts = {{"p_x", std::move(p.x)}, {"p_y", std::move(p.y)}};
  }
  if (inv_best.valid()) {
    out.inverse.estimate = inv_best.ratio;
    out.inverse.witness.trial = inv_best.trial;
    auto [p, a, b] = inputs(inv_best.trial);
    out.inverse.witness.parts = {{"a_x", std::move(a.x)},
                                 {"a_y", std::move(a.y)},
                                 {"b_x", std::move(b.x)},
                                 {"b_y", std::move(b.y)}};
  }
  return out;
}

double recompute_estimate(const ConstantReport& report) {
  if (report.witness.parts.empty()) return 0.0;
  auto get = [&report](const char* name) -> const ComplexVector& {
    for (const auto& part : report.witness.parts)
      if (part.name == name) return part.value;
    throw std::invalid_argument(std::string("recompute_estimate: missing witness part ") +
                                name);
  };
  const Alpha a = report.alpha;
  if (report.constant_name == "quasilinearity")
    return quasilinearity_ratio(get("x"), get("y"), a);
  if (report.constant_name == "quasi_triangle")
    return quasi_triangle_ratio(ZPoint{get("p_x"), get("p_y"), a},
                                ZPoint{get("q_x"), get("q_y"), a});
  if (report.constant_name == "multiplier_bound")
    return multiplier_ratio(DiagonalMultiplier{get("s")},
                            ZPoint{get("p_x"), get("p_y"), a});
  if (report.constant_name == "u_split_norm")
    return u_split_ratio(ZPoint{get("p_x"), get("p_y"), a});
  if (report.constant_name == "u_merge_norm")
    return u_merge_ratio(ZPoint{get("a_x"), get("a_y"), a},
                         ZPoint{get("b_x"), get("b_y"), a});
  throw std::invalid_argument("recompute_estimate: unknown constant " +
                              report.constant_name);
}

std::string family_set_string(const std::vector<Family>& families) {
  std::string out;
  for (Family f : all_families()) {
    bool present = false;
    for (Family g : families)
      if (g == f) present = true;
    if (!present) continue;
    if (!out.empty()) out += '+';
    out += family_name(f);
  }
  return out;
}

}  // namespace zalpha
