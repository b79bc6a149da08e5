#include "zalpha/cartesian.hpp"

#include <stdexcept>

namespace zalpha {

std::pair<ZPoint, ZPoint> u_split(const ZPoint& p) {
  const ZPoint& q = (p.dim() % 2 == 0) ? p : pad(p, p.dim() + 1);
  const std::size_t h = q.dim() / 2;
  ZPoint odd{ComplexVector(h), ComplexVector(h), q.alpha};
  ZPoint even{ComplexVector(h), ComplexVector(h), q.alpha};
  for (std::size_t k = 0; k < h; ++k) {
    odd.x[k] = q.x[2 * k];
    odd.y[k] = q.y[2 * k];
    even.x[k] = q.x[2 * k + 1];
    even.y[k] = q.y[2 * k + 1];
  }
  return {std::move(odd), std::move(even)};
}

ZPoint u_merge(const ZPoint& odd_part, const ZPoint& even_part) {
  if (odd_part.alpha != even_part.alpha)
    throw std::invalid_argument("u_merge: mismatched alpha");
  if (odd_part.dim() != even_part.dim())
    throw std::invalid_argument("u_merge: halves must have equal length");
  const std::size_t h = odd_part.dim();
  ZPoint out{ComplexVector(2 * h), ComplexVector(2 * h), odd_part.alpha};
  for (std::size_t k = 0; k < h; ++k) {
    out.x[2 * k] = odd_part.x[k];
    out.y[2 * k] = odd_part.y[k];
    out.x[2 * k + 1] = even_part.x[k];
    out.y[2 * k + 1] = even_part.y[k];
  }
  return out;
}

ZPoint multiplier_apply(const DiagonalMultiplier& m, const ZPoint& p) {
  if (m.s.size() != p.dim())
    throw std::invalid_argument("multiplier_apply: length mismatch");
  ZPoint out{ComplexVector(p.dim()), ComplexVector(p.dim()), p.alpha};
  for (std::size_t k = 0; k < p.dim(); ++k) {
    out.x[k] = m.s[k] * p.x[k];
    out.y[k] = m.s[k] * p.y[k];
  }
  return out;
}

DiagonalMultiplier indicator_odd(std::size_t n) {
  DiagonalMultiplier m{ComplexVector(n, Complex(0.0, 0.0))};
  for (std::size_t k = 0; k < n; k += 2) m.s[k] = Complex(1.0, 0.0);
  return m;
}

DiagonalMultiplier indicator_even(std::size_t n) {
  DiagonalMultiplier m{ComplexVector(n, Complex(0.0, 0.0))};
  for (std::size_t k = 1; k < n; k += 2) m.s[k] = Complex(1.0, 0.0);
  return m;
}

DiagonalMultiplier ones_multiplier(std::size_t n) {
  return DiagonalMultiplier{ComplexVector(n, Complex(1.0, 0.0))};
}

}  // namespace zalpha
