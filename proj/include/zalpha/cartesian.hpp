#pragma once

#include <utility>

#include "zalpha/zspace.hpp"

namespace zalpha {

/// A bounded scalar sequence acting coordinatewise on both halves of a ZPoint.
struct DiagonalMultiplier {
  ComplexVector s;
};

/// Splits p into its odd- and even-indexed coordinate points (1-based, so the
/// odd part starts with the first coordinate). Odd-length inputs are padded
/// with a single zero first, which leaves znorm unchanged. Both outputs carry
/// p's alpha and have half the (padded) length.
std::pair<ZPoint, ZPoint> u_split(const ZPoint& p);

/// Interleaves two same-length points back into one: the exact inverse of
/// u_split. Throws on mismatched alpha or lengths.
ZPoint u_merge(const ZPoint& odd_part, const ZPoint& even_part);

/// (s.x pointwise, s.y pointwise); throws on length mismatch.
ZPoint multiplier_apply(const DiagonalMultiplier& m, const ZPoint& p);

/// 0/1 indicators of the odd resp. even 1-based positions, and the identity
/// multiplier. indicator_odd(n) + indicator_even(n) is all ones.
DiagonalMultiplier indicator_odd(std::size_t n);
DiagonalMultiplier indicator_even(std::size_t n);
DiagonalMultiplier ones_multiplier(std::size_t n);

}  // namespace zalpha
