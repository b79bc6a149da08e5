#!/usr/bin/env python3
"""High-precision oracle for the pinned values asserted in the test suites.

Evaluates the closed-form quantities with mpmath at 60 significant digits,
independently of the C++ code paths. Run it and paste the printed values
into the tests; the C++ library must reproduce them within the stated
tolerances.

    python3 tools/oracle/pinned_values.py
"""

import mpmath as mp

mp.mp.dps = 60


def f_alpha(t, alpha):
    """t^(1+i*alpha) for t > 0, continuous limit 0 at t = 0."""
    if t == 0:
        return mp.mpc(0)
    return mp.e ** ((1 + 1j * alpha) * mp.log(t))


def omega(xs, alpha):
    """Kalton centralizer applied to a finite complex sequence."""
    nrm = mp.sqrt(mp.fsum(abs(x) ** 2 for x in xs))
    out = []
    for x in xs:
        if x == 0:
            out.append(mp.mpc(0))
        else:
            out.append(x * f_alpha(mp.log(nrm / abs(x)), alpha))
    return out


def l2(xs):
    return mp.sqrt(mp.fsum(abs(x) ** 2 for x in xs))


def znorm(xs, ys, alpha):
    om = omega(xs, alpha)
    return l2(xs) + l2([y - o for y, o in zip(ys, om)])


def show(label, value):
    print(f"{label:34s} {mp.nstr(value, 20)}")


def main():
    t = mp.log(mp.sqrt(2))
    show("ln(sqrt(2))", t)

    # f_1 at t = ln sqrt(2)
    show("f_1(ln sqrt 2)", f_alpha(t, 1))

    # omega((1,1), alpha=1): both entries equal f_1(ln sqrt 2)
    om = omega([mp.mpf(1), mp.mpf(1)], 1)
    show("omega((1,1),1)[0]", om[0])

    # quasi-norm of ((1,1),(0,0)) at alpha = 1: sqrt2 * (1 + ln sqrt2)
    show("znorm(((1,1),(0,0)),1)", znorm([1, 1], [0, 0], 1))

    # quasi-linearity ratio for x=(1,0), y=(0,1):
    # ||Omega((1,1)) - Omega(e1) - Omega(e2)||_2 / (||x||+||y||)
    dev = [a - b - c for a, b, c in zip(om, omega([1, 0], 1), omega([0, 1], 1))]
    show("qlinear ratio e1,e2 (a=1)", l2(dev) / 2)

    # quasi-triangle ratio for p=((1,0),0), q=((0,1),0):
    # znorm(p+q) / (znorm(p) + znorm(q))
    num = znorm([1, 1], [0, 0], 1)
    den = znorm([1, 0], [0, 0], 1) + znorm([0, 1], [0, 0], 1)
    show("qtriangle ratio e1,e2 (a=1)", num / den)

    # multiplier ratio for s=(1,0) on p=((1,1),(0,0)):
    # znorm((s x, s y)) / znorm((x, y))
    show("multiplier ratio s=(1,0)", znorm([1, 0], [0, 0], 1) / num)


if __name__ == "__main__":
    main()
