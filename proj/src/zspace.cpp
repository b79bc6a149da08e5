#include "zalpha/zspace.hpp"

#include <stdexcept>

namespace zalpha {

ZPoint make_zpoint(ComplexVector x, ComplexVector y, Alpha alpha) {
  if (x.size() != y.size())
    throw std::invalid_argument("make_zpoint: x and y must have equal length");
  if (!all_finite(x) || !all_finite(y))
    throw std::invalid_argument("make_zpoint: entries must be finite");
  return ZPoint{std::move(x), std::move(y), alpha};
}

ZPoint zero_point(std::size_t n, Alpha alpha) {
  return ZPoint{ComplexVector(n, Complex(0.0, 0.0)), ComplexVector(n, Complex(0.0, 0.0)),
                alpha};
}

double znorm(const ZPoint& p) {
  return l2_norm(p.x) + l2_norm(vsub(p.y, omega(p.x, p.alpha)));
}

ZPoint conjugate_point(const ZPoint& p) {
  return ZPoint{vconj(p.x), vconj(p.y), Alpha{-p.alpha.value}};
}

ZPoint add(const ZPoint& p, const ZPoint& q) {
  if (p.alpha != q.alpha) throw std::invalid_argument("add: mismatched alpha");
  if (p.dim() != q.dim()) throw std::invalid_argument("add: mismatched length");
  return ZPoint{vadd(p.x, q.x), vadd(p.y, q.y), p.alpha};
}

ZPoint scale(Complex lambda, const ZPoint& p) {
  return ZPoint{vscale(lambda, p.x), vscale(lambda, p.y), p.alpha};
}

double direct_sum_norm(const ZPoint& p, const ZPoint& q) {
  if (p.alpha != q.alpha) throw std::invalid_argument("direct_sum_norm: mismatched alpha");
  return znorm(p) + znorm(q);
}

ZPoint pad(const ZPoint& p, std::size_t new_dim) {
  if (new_dim < p.dim()) throw std::invalid_argument("pad: new_dim smaller than current");
  ZPoint out = p;
  out.x.resize(new_dim, Complex(0.0, 0.0));
  out.y.resize(new_dim, Complex(0.0, 0.0));
  return out;
}

}  // namespace zalpha
