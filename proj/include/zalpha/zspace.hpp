#pragma once

#include "zalpha/centralizer.hpp"
#include "zalpha/core_linalg.hpp"

namespace zalpha {

/// A point of a finite section of Z_alpha: a pair (x, y) of equal-length
/// complex vectors tagged with the twist parameter.
struct ZPoint {
  ComplexVector x;
  ComplexVector y;
  Alpha alpha;

  std::size_t dim() const { return x.size(); }
};

/// Validating constructor; throws std::invalid_argument on length mismatch or
/// non-finite entries.
ZPoint make_zpoint(ComplexVector x, ComplexVector y, Alpha alpha);

ZPoint zero_point(std::size_t n, Alpha alpha);

/// ||x||_2 + ||y - Omega_alpha(x)||_2
double znorm(const ZPoint& p);

/// (conj x, conj y) tagged with -alpha; an involution and a znorm isometry.
ZPoint conjugate_point(const ZPoint& p);

/// Componentwise; throws on mismatched alpha or length. Points of different
/// alpha never interoperate arithmetically.
ZPoint add(const ZPoint& p, const ZPoint& q);
ZPoint scale(Complex lambda, const ZPoint& p);

/// znorm(p) + znorm(q); throws on mismatched alpha.
double direct_sum_norm(const ZPoint& p, const ZPoint& q);

/// Appends zero coordinates to both x and y up to new_dim (znorm-neutral).
/// Dimensions are never broadcast implicitly; this is the one sanctioned way
/// to move a point into a longer section. Throws if new_dim < p.dim().
ZPoint pad(const ZPoint& p, std::size_t new_dim);

}  // namespace zalpha
