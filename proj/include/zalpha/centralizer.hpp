#pragma once

#include "zalpha/core_linalg.hpp"

namespace zalpha {

/// Twist parameter of Z_alpha. Points and certificates of different alpha
/// never interoperate; conjugation is the only alpha-changing map.
struct Alpha {
  double value = 0.0;

  friend bool operator==(const Alpha& a, const Alpha& b) { return a.value == b.value; }
  friend bool operator!=(const Alpha& a, const Alpha& b) { return !(a == b); }
};

/// t^(1+i*alpha) for t > 0, computed as t * e^{i alpha ln t}; 0 at t = 0
/// (the continuous limit: |t^(1+i*alpha)| = t). Throws std::domain_error for
/// t < 0 or non-finite t.
Complex f_alpha(double t, Alpha a);

/// The Kalton centralizer: entry k is xi_k * f_alpha(log(||x||_2 / |xi_k|))
/// when xi_k != 0, and 0 otherwise. Natural logarithm; the argument is >= 0
/// since |xi_k| <= ||x||_2. Entries with |xi_k|/||x||_2 below 1e-300 take the
/// zero branch (their true value is below underflow anyway).
ComplexVector omega(const ComplexVector& x, Alpha a);

}  // namespace zalpha
