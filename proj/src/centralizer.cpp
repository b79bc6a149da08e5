#include "zalpha/centralizer.hpp"

#include <cmath>
#include <stdexcept>

namespace zalpha {

Complex f_alpha(double t, Alpha a) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::domain_error("f_alpha: t must be a finite nonnegative real");
  if (t == 0.0) return Complex(0.0, 0.0);
  // cos is even and sin is odd in the phase, so conj(f_alpha(t)) equals
  // f_{-alpha}(t) bit-for-bit.
  const double phase = a.value * std::log(t);
  return Complex(t * std::cos(phase), t * std::sin(phase));
}

ComplexVector omega(const ComplexVector& x, Alpha a) {
  const double nx = l2_norm(x);
  ComplexVector out(x.size(), Complex(0.0, 0.0));
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double m = std::abs(x[k]);
    if (m == 0.0) continue;
    if (m / nx < 1e-300) continue;
    // nx >= m up to rounding; clamp shields the one-ulp case nx < m.
    const double t = std::max(0.0, std::log(nx / m));
    out[k] = x[k] * f_alpha(t, a);
  }
  return out;
}

}  // namespace zalpha
