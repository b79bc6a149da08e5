#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zalpha/cartesian.hpp"
#include "zalpha/zspace.hpp"

namespace zalpha {

// ---------------------------------------------------------------------------
// Seeded Monte Carlo estimators for the constants of the Z_alpha geometry.
//
// Every trial draws all of its randomness from substream(seed, trial), so the
// estimate is a pure function of the configuration: the OpenMP kernel and the
// serial reference produce bit-identical reports under any schedule. Extending
// `trials` extends the trial set by a prefix rule, which makes each estimate
// monotone nondecreasing in `trials`.
//
// Structured families are randomized per trial while keeping their modulus
// profile: flat draws unimodular phases and a 0/1 support mask, spike draws a
// position and a phase, geometric-decay draws phases. Extremal behavior of the
// centralizer lives on exactly these shapes, not on Gaussian vectors.
// ---------------------------------------------------------------------------

struct EstimatorConfig {
  std::size_t dim = 0;
  Alpha alpha;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Family> families = all_families();
};

enum class Execution { parallel, serial };

struct WitnessPart {
  std::string name;
  ComplexVector value;
};

/// The inputs achieving the reported maximum, replayable via
/// recompute_estimate.
struct ArgmaxWitness {
  std::uint64_t trial = 0;
  std::vector<WitnessPart> parts;  // empty when no trial produced a ratio
};

struct ConstantReport {
  std::string constant_name;
  Alpha alpha;
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Family> families;
  double estimate = 0.0;
  ArgmaxWitness witness;
};

// Single-input ratios: the per-trial kernels, exposed for direct evaluation.
// Each returns quiet NaN when its denominator vanishes; the estimators skip
// such trials.

/// ||Omega(x+y) - Omega(x) - Omega(y)||_2 / (||x||_2 + ||y||_2)
double quasilinearity_ratio(const ComplexVector& x, const ComplexVector& y, Alpha a);

/// znorm(p+q) / (znorm(p) + znorm(q))
double quasi_triangle_ratio(const ZPoint& p, const ZPoint& q);

/// znorm((s x, s y)) / znorm((x, y))
double multiplier_ratio(const DiagonalMultiplier& s, const ZPoint& p);

/// direct_sum_norm(u_split(p)) / znorm(p)
double u_split_ratio(const ZPoint& p);

/// znorm(u_merge(a, b)) / direct_sum_norm(a, b)
double u_merge_ratio(const ZPoint& a, const ZPoint& b);

// The estimators. Each returns the max ratio over its deterministic trial set
// together with the argmax inputs. Zero-denominator trials are skipped.

/// Max quasi-linearity defect of Omega_alpha over sampled pairs (x, y) drawn
/// from cfg.families.
ConstantReport quasilinearity_estimate(const EstimatorConfig& cfg,
                                       Execution ex = Execution::parallel);

/// Max znorm(p+q)/(znorm(p)+znorm(q)). Trial 0 uses the duplicated pair
/// (p, p), so the estimate is always >= 1.
ConstantReport quasi_triangle_estimate(const EstimatorConfig& cfg,
                                       Execution ex = Execution::parallel);

/// Max znorm(multiplier_apply(s, p))/znorm(p) over multipliers with
/// ||s||_inf <= 1. Trials 0..2 use the fixed multipliers: all ones and the
/// odd/even indicators; the rest draw unimodular phases or 0/1 masks.
ConstantReport multiplier_constant_estimate(const EstimatorConfig& cfg,
                                            Execution ex = Execution::parallel);

struct UNormReport {
  ConstantReport forward;  // constant "u_split_norm"
  ConstantReport inverse;  // constant "u_merge_norm"
};

/// Norm estimates for the odd/even splitting map and its inverse. Requires an
/// even cfg.dim; the inverse direction samples half-length pairs.
UNormReport u_norm_estimate(const EstimatorConfig& cfg,
                            Execution ex = Execution::parallel);

/// Recomputes a report's ratio from its embedded witness; dispatches on
/// constant_name. Returns 0 for an empty witness. Throws on a malformed one.
double recompute_estimate(const ConstantReport& report);

std::string family_set_string(const std::vector<Family>& families);

}  // namespace zalpha
