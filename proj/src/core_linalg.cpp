#include "zalpha/core_linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zalpha {

double l2_norm(const ComplexVector& x) {
  double s = 0.0;
  for (const Complex& z : x) s += std::norm(z);
  return std::sqrt(s);
}

double linf_norm(const ComplexVector& x) {
  double m = 0.0;
  for (const Complex& z : x) m = std::max(m, std::abs(z));
  return m;
}

bool all_finite(const ComplexVector& x) {
  for (const Complex& z : x)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexVector vadd(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vadd: length mismatch");
  ComplexVector r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] + y[k];
  return r;
}

ComplexVector vsub(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vsub: length mismatch");
  ComplexVector r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] - y[k];
  return r;
}

ComplexVector vscale(Complex lambda, const ComplexVector& x) {
  ComplexVector r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = lambda * x[k];
  return r;
}

ComplexVector vconj(const ComplexVector& x) {
  ComplexVector r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = std::conj(x[k]);
  return r;
}

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Complex Rng::gaussian() {
  // |z|^2 ~ Exp(1), uniform phase
  double u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-std::log1p(-u1));
  double phi = 2.0 * std::numbers::pi * u2;
  return Complex(r * std::cos(phi), r * std::sin(phi));
}

Complex Rng::unimodular() {
  double phi = 2.0 * std::numbers::pi * uniform();
  return Complex(std::cos(phi), std::sin(phi));
}

Rng substream(std::uint64_t seed, std::uint64_t index) {
  Rng rng(mix64(seed) ^ mix64(~index));
  return rng;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::gaussian: return "gaussian";
    case Family::flat: return "flat";
    case Family::spike: return "spike";
    case Family::geometric_decay: return "geometric-decay";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "gaussian") return Family::gaussian;
  if (name == "flat") return Family::flat;
  if (name == "spike") return Family::spike;
  if (name == "geometric-decay") return Family::geometric_decay;
  throw std::invalid_argument("unknown family: " + name);
}

std::vector<Family> all_families() {
  return {Family::gaussian, Family::flat, Family::spike, Family::geometric_decay};
}

ComplexVector sample(const RandomSpec& spec) {
  if (spec.dim == 0) throw std::invalid_argument("sample: dim must be >= 1");
  ComplexVector v(spec.dim, Complex(0.0, 0.0));
  switch (spec.family) {
    case Family::gaussian: {
      Rng rng(spec.seed);
      for (auto& z : v) z = rng.gaussian();
      break;
    }
    case Family::flat:
      for (auto& z : v) z = Complex(1.0, 0.0);
      break;
    case Family::spike:
      v[0] = Complex(1.0, 0.0);
      break;
    case Family::geometric_decay:
      for (std::size_t k = 0; k < spec.dim; ++k)
        v[k] = Complex(std::exp2(-0.5 * static_cast<double>(k + 1)), 0.0);
      break;
  }
  return v;
}

DenseOperator DenseOperator::identity(std::size_t n) {
  DenseOperator m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexVector DenseOperator::apply(const ComplexVector& x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("apply: vector length does not match operator columns");
  ComplexVector y(rows_, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < cols_; ++j) acc += a_[i * cols_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

DenseOperator matmul(const DenseOperator& lhs, const DenseOperator& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matmul: shape mismatch");
  DenseOperator out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex v = lhs.at(i, k);
      for (std::size_t j = 0; j < rhs.cols(); ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

DenseOperator matadd(const DenseOperator& lhs, const DenseOperator& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw std::invalid_argument("matadd: shape mismatch");
  DenseOperator out(lhs.rows(), lhs.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i)
    out.data()[i] = lhs.data()[i] + rhs.data()[i];
  return out;
}

DenseOperator conj(const DenseOperator& m) {
  DenseOperator out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = std::conj(m.data()[i]);
  return out;
}

double frobenius_norm(const DenseOperator& m) {
  double s = 0.0;
  for (const Complex& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

DenseOperator random_operator(std::size_t rows, std::size_t cols, Rng& rng) {
  DenseOperator m(rows, cols);
  for (Complex& z : m.data()) z = rng.gaussian();
  return m;
}

}  // namespace zalpha
