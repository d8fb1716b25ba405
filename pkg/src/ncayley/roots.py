"""Simultaneous polynomial root finding (Aberth-Ehrlich) in mpmath."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import mpmath


class RootFindingError(ArithmeticError):
    pass


def _horner(coeffs, z):
    """p(z) and p'(z) for coefficients low degree first."""
    p = mpmath.mpc(0)
    dp = mpmath.mpc(0)
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _mpc(c):
    if isinstance(c, Fraction):
        return mpmath.mpc(c.numerator) / c.denominator
    return mpmath.mpc(c)


def aberth_roots(coeffs: Sequence, precision_bits: int = 256, max_iter: int = 500) -> list:
    """All roots of the polynomial with complex coefficients ``coeffs`` (low first).

    Converges fast for simple roots; callers should pass a square-free
    polynomial.  Raises RootFindingError when the iteration stalls.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg < 1:
        return []
    with mpmath.workprec(precision_bits + 64):
        lead = _mpc(coeffs[-1])
        cs = [_mpc(c) / lead for c in coeffs]
        if deg == 1:
            return [-cs[0]]
        radius = 1 + max(abs(c) for c in cs[:-1])
        # non-symmetric start avoids stalling on conjugate-symmetric inputs
        z = [radius * mpmath.expj(2 * mpmath.pi * k / deg + mpmath.mpf("0.4")) * mpmath.mpf("0.5") for k in range(deg)]
        tol = mpmath.mpf(2) ** (-(precision_bits + 16))
        for _ in range(max_iter):
            worst = mpmath.mpf(0)
            for i in range(deg):
                p, dp = _horner(cs, z[i])
                if p == 0:
                    continue
                ratio = p / dp if dp != 0 else mpmath.mpc(radius)
                s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(deg) if j != i)
                step = ratio / (1 - ratio * s)
                z[i] -= step
                worst = max(worst, abs(step) / max(1, abs(z[i])))
            if worst < tol:
                break
        else:
            raise RootFindingError(f"Aberth iteration did not converge in {max_iter} steps (degree {deg})")
        return [+x for x in z]


def residual(coeffs: Sequence, z) -> mpmath.mpf:
    p, _ = _horner([_mpc(c) for c in coeffs], z)
    return abs(p)
