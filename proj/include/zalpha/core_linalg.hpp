#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zalpha {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// sqrt(sum |x_k|^2). Plain sequential accumulation: appending zero entries
/// leaves every partial sum, and hence the result, bit-identical.
double l2_norm(const ComplexVector& x);

/// max_k |x_k|, 0 for the empty vector.
double linf_norm(const ComplexVector& x);

bool all_finite(const ComplexVector& x);

ComplexVector vadd(const ComplexVector& x, const ComplexVector& y);
ComplexVector vsub(const ComplexVector& x, const ComplexVector& y);
ComplexVector vscale(Complex lambda, const ComplexVector& x);
ComplexVector vconj(const ComplexVector& x);

// ---------------------------------------------------------------------------
// Deterministic random generation.
//
// A splitmix64 stream fully specified here, so results do not depend on the
// standard library's distribution internals. Substreams derived from
// (seed, index) make per-trial sampling schedule-independent.
// ---------------------------------------------------------------------------

std::uint64_t mix64(std::uint64_t z);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix64(seed)) {}

  std::uint64_t next();
  /// uniform in [0, 1), 53-bit resolution
  double uniform();
  bool bit() { return (next() & 1u) != 0; }
  /// standard complex normal CN(0,1): E|z|^2 = 1
  Complex gaussian();
  /// e^{2 pi i u}
  Complex unimodular();

 private:
  std::uint64_t state_;
};

/// Stream for trial `index` of a run keyed by `seed`. Distinct indices give
/// decorrelated streams; the derivation is pure, so any schedule that assigns
/// trial t to substream(seed, t) produces identical per-trial draws.
Rng substream(std::uint64_t seed, std::uint64_t index);

enum class Family { gaussian, flat, spike, geometric_decay };

const char* family_name(Family f);
/// parses "gaussian" | "flat" | "spike" | "geometric-decay"; throws on others
Family family_from_name(const std::string& name);
std::vector<Family> all_families();

struct RandomSpec {
  std::uint64_t seed = 0;
  Family family = Family::gaussian;
  std::size_t dim = 0;
};

/// Deterministic in spec. gaussian: i.i.d. CN(0,1); flat: all ones;
/// spike: e_1; geometric-decay: entries 2^(-k/2), k = 1..dim.
/// Throws std::invalid_argument for dim = 0.
ComplexVector sample(const RandomSpec& spec);

// ---------------------------------------------------------------------------
// Dense complex matrices, row-major.
// ---------------------------------------------------------------------------

class DenseOperator {
 public:
  DenseOperator() = default;
  DenseOperator(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

  static DenseOperator identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  /// matrix-vector product; throws std::invalid_argument on dimension mismatch
  ComplexVector apply(const ComplexVector& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> a_;
};

DenseOperator matmul(const DenseOperator& lhs, const DenseOperator& rhs);
DenseOperator matadd(const DenseOperator& lhs, const DenseOperator& rhs);
DenseOperator conj(const DenseOperator& m);
double frobenius_norm(const DenseOperator& m);
/// entrywise CN(0,1) draws from rng
DenseOperator random_operator(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace zalpha
