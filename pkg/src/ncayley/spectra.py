"""Characteristic polynomials, integrality, eigenvalues and the degree report.

The certification logic only ever *proposes* candidates numerically; a degree
is reported as certified only after every eigenvalue has been verified as an
exact root in some cyclotomic field.  Otherwise the report carries the bounds
alone.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt, lcm
from typing import Optional, Sequence

import mpmath

from .config import AnalysisConfig
from .cyclotomic import CyclotomicNumber, lift_to
from .ga_matrix import GAMatrix, NCayleySpec, beta_all, delta_matrix
from .galois import (
    ClosureError,
    FixedFieldDescription,
    OrbitDecomposition,
    StabilizerSubgroup,
    degree_bounds,
    field_stabilizer,
    fixed_field,
    orbit_decomposition,
    stabilizer_subgroup,
)
from .group_algebra import fourier_coefficient
from .groups import ElementLike, euler_phi
from .lattice import lll_reduce
from .polynomials import Polynomial, squarefree_decomposition
from .roots import RootFindingError, _mpc, aberth_roots

log = logging.getLogger(__name__)


class CertificationMethod(str, Enum):
    N_EQUALS_1 = "n_equals_1"
    ALL_RATIONAL = "all_rational"
    CYCLOTOMIC_RECONSTRUCTION = "cyclotomic_reconstruction"
    NONE = "none"


@dataclass
class DegreeReport:
    integral: bool
    lower_bound: int
    upper_bound: int
    certified_degree: Optional[int]
    certification_method: CertificationMethod
    splitting_field_note: str
    reconstruction_conductor: Optional[int] = None

    def __post_init__(self):
        if self.certified_degree is not None and not (
            self.lower_bound <= self.certified_degree <= self.upper_bound
        ):
            raise ClosureError(
                f"certified degree {self.certified_degree} outside [{self.lower_bound}, {self.upper_bound}]"
            )
        if self.integral and self.certified_degree != 1:
            raise ClosureError("integral digraph must have certified degree 1")

    def to_json(self) -> dict:
        return {
            "integral": self.integral,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "certified_degree": self.certified_degree,
            "certification_method": self.certification_method.value,
            "splitting_field_note": self.splitting_field_note,
            "reconstruction_conductor": self.reconstruction_conductor,
        }


@dataclass(frozen=True)
class IntegralityResult:
    integral: bool
    integer_roots: tuple
    residual: Polynomial


@dataclass(frozen=True)
class Eigenvalue:
    value: mpmath.mpc
    character: tuple


# characteristic polynomials


def char_poly_at(delta: GAMatrix, v: ElementLike, betas: Optional[Sequence] = None) -> Polynomial:
    """P<Delta~(chi_v)>: coefficient of x^(n-k) is (-1)^k times the Fourier coefficient of beta_k."""
    if betas is None:
        betas = beta_all(delta)
    n = delta.n
    coeffs = [None] * (n + 1)
    for k, b in enumerate(betas):
        c = fourier_coefficient(b, v)
        coeffs[n - k] = -c if k % 2 else c
    return Polynomial(coeffs)


def full_char_poly(spec: NCayleySpec, betas: Optional[Sequence] = None) -> Polynomial:
    """Product of the per-character polynomials over all of G, as an integer polynomial."""
    delta = delta_matrix(spec)
    if betas is None:
        betas = beta_all(delta)
    N = spec.group.order
    acc = Polynomial([CyclotomicNumber.one(N)])
    for v in spec.group.elements:
        acc = acc * char_poly_at(delta, v, betas)
    out = []
    for c in acc.coeffs:
        q = c.rational() if isinstance(c, CyclotomicNumber) else Fraction(c)
        if q is None or q.denominator != 1:
            raise ClosureError(f"characteristic polynomial coefficient {c} is not an integer")
        out.append(int(q))
    return Polynomial(out)


def _root_bound(p: Polynomial) -> int:
    """Fujiwara bound on |root| for a monic integer polynomial, rounded up."""
    n = p.degree
    best = 0
    for k in range(1, n + 1):
        a = abs(p[n - k])
        if k == n:
            a = (a + 1) // 2
        if a == 0:
            continue
        r = _iroot_ceil(a, k)
        best = max(best, r)
    return 2 * best


def _iroot_ceil(a: int, k: int) -> int:
    if k == 1:
        return a
    if k == 2:
        r = isqrt(a)
        return r if r * r == a else r + 1
    r = int(round(a ** (1.0 / k))) if a.bit_length() < 1000 else 1 << (a.bit_length() // k + 1)
    while r ** k < a:
        r += 1
    while r > 0 and (r - 1) ** k >= a:
        r -= 1
    return r


def integrality_test(p: Polynomial) -> IntegralityResult:
    """Deflate integer roots of a monic integer polynomial."""
    if not p.is_monic():
        raise ValueError("integrality_test needs a monic polynomial")
    coeffs = [int(c) for c in p.coeffs]
    roots = []
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs.pop(0)
        roots.append(0)
    p = Polynomial(coeffs)
    if p.degree >= 1:
        a0 = p[0]
        bound = _root_bound(p)
        for mag in range(1, min(bound, abs(a0)) + 1):
            if a0 % mag:
                continue
            for r in (mag, -mag):
                while p.degree >= 1 and p(r) == 0:
                    q, rem = divmod(p, Polynomial([-r, 1]))
                    assert rem.is_zero()
                    p = Polynomial([int(c) for c in q.coeffs])
                    roots.append(r)
            if p.degree < 1:
                break
    roots.sort(reverse=True)
    return IntegralityResult(p.degree < 1, tuple(roots), p)


# numeric eigenvalues


def _embed(poly: Polynomial, precision_bits: int) -> list:
    return [c.to_complex(precision_bits) if isinstance(c, CyclotomicNumber) else _mpc(c) for c in poly.coeffs]


def _check_residual(coeffs, z, precision_bits):
    with mpmath.workprec(precision_bits + 32):
        p = mpmath.mpc(0)
        scale = mpmath.mpf(0)
        az = abs(z)
        for c in reversed(coeffs):
            p = p * z + c
            scale = scale * az + abs(c)
        if abs(p) > mpmath.mpf(2) ** (-(precision_bits // 2)) * max(scale, 1):
            raise RootFindingError(f"root {mpmath.nstr(z, 20)} fails the residual check")


def distinct_roots(poly: Polynomial, precision_bits: int = 256) -> list:
    """[(square-free factor, root, multiplicity)] for an exact polynomial."""
    out = []
    for mult, factor in enumerate(squarefree_decomposition(poly), start=1):
        if factor.degree < 1:
            continue
        emb = _embed(factor, precision_bits)
        for z in aberth_roots(emb, precision_bits):
            _check_residual(emb, z, precision_bits)
            out.append((factor, z, mult))
    return out


def eigen_numeric(spec: NCayleySpec, precision_bits: int = 256) -> list:
    """All nN eigenvalues, each tagged with the character whose polynomial produced it."""
    if precision_bits < 64:
        raise ValueError("precision_bits must be >= 64")
    delta = delta_matrix(spec)
    betas = beta_all(delta)
    cache: dict = {}
    out = []
    for v in spec.group.elements:
        P = char_poly_at(delta, v, betas)
        if P not in cache:
            cache[P] = distinct_roots(P, precision_bits)
        for _, z, mult in cache[P]:
            out.extend(Eigenvalue(z, v) for _ in range(mult))
    return out


# cyclotomic reconstruction


def _rational_guess(value, precision_bits: int, height_bound: int):
    with mpmath.workprec(precision_bits + 32):
        tol = mpmath.mpf(2) ** (-(precision_bits // 2))
        if abs(value.imag) > tol:
            return None
        man, exp = mpmath.mpf(value.real).man_exp
        q = (Fraction(man) * Fraction(2) ** exp).limit_denominator(height_bound)
        if abs(value.real - mpmath.mpf(q.numerator) / q.denominator) > tol:
            return None
        return q


def _lift_poly(poly: Polynomial, M: int):
    L = M
    for c in poly.coeffs:
        if isinstance(c, CyclotomicNumber):
            L = lcm(L, c.conductor)
    return poly.map(lambda c: lift_to(c, L)), L


def _verify_root(candidate: CyclotomicNumber, poly: Polynomial) -> bool:
    lifted, L = _lift_poly(poly, candidate.conductor)
    return lifted(candidate.lift(L)).is_zero()


def _close(candidate: CyclotomicNumber, value, precision_bits: int) -> bool:
    with mpmath.workprec(precision_bits + 32):
        tol = mpmath.mpf(2) ** (-(precision_bits // 2)) * max(1, abs(value))
        return abs(candidate.to_complex(precision_bits) - value) <= tol


def cyclotomic_reconstruct(
    value,
    M: int,
    precision_bits: int,
    poly: Polynomial,
    height_bound: int = 10**12,
) -> Optional[CyclotomicNumber]:
    """Find c in Q(omega_M) with c ~ value that is an exact root of ``poly``.

    Candidates come from an integer relation between value and the power basis
    of Q(omega_M), found by LLL; only exactly verified candidates are returned.
    """
    if M < 2:
        raise ValueError("conductor must be >= 2")
    with mpmath.workprec(precision_bits + 32):
        value = mpmath.mpc(value)
        q = _rational_guess(value, precision_bits, height_bound)
        if q is not None:
            c = CyclotomicNumber.from_rational(M, q)
            if _verify_root(c, poly):
                return c

        phi = euler_phi(M)
        scale = mpmath.mpf(2) ** max(precision_bits - 40, 24)

        def fix(x):
            return int(mpmath.nint(scale * x))

        basis = [[1] + [0] * phi + [fix(value.real), fix(value.imag)]]
        for j in range(phi):
            w = mpmath.expjpi(mpmath.mpf(2 * j) / M)
            row = [0] * (phi + 1) + [-fix(w.real), -fix(w.imag)]
            row[j + 1] = 1
            basis.append(row)
        reduced = lll_reduce(basis)
        for row in reduced:
            d = row[0]
            if d == 0 or abs(d) > height_bound:
                continue
            nums = row[1 : phi + 1]
            if any(abs(a) > height_bound for a in nums):
                continue
            c = CyclotomicNumber(M, [Fraction(a, d) for a in nums])
            if _close(c, value, precision_bits) and _verify_root(c, poly):
                return c
    return None


def conductor_sequence(N: int, max_conductor: int) -> list:
    out = []
    for M in (N, 2 * N, lcm(N, 3), 4 * N):
        if M > max_conductor or M in out:
            continue
        if M % 4 == 2 and M // 2 in out:
            continue  # Q(w_M) = Q(w_{M/2})
        out.append(M)
    return out


# the report


@dataclass
class Analysis:
    spec: NCayleySpec
    config: AnalysisConfig
    delta: GAMatrix
    betas: list
    stabilizer: StabilizerSubgroup
    orbits: OrbitDecomposition
    fixed_field: FixedFieldDescription
    representative_polys: dict
    char_poly: Polynomial
    integrality: IntegralityResult
    report: DegreeReport
    verified_eigenvalues: list = field(default_factory=list)


def _certify_by_reconstruction(rep_polys, K0, N, config):
    """Try each conductor in turn; return (M, stabilizer, verified values) or None."""
    prec = config.precision_bits
    roots = []
    seen = set()
    for P in rep_polys:
        if P in seen:
            continue
        seen.add(P)
        roots.extend((factor, z) for factor, z, _ in distinct_roots(P, prec))
    found: list = [None] * len(roots)
    max_conductor = config.max_conductor or 8 * N
    for M in conductor_sequence(N, max_conductor):
        ok = True
        for idx, (factor, z) in enumerate(roots):
            prev = found[idx]
            if prev is not None and M % prev.conductor == 0:
                continue
            c = cyclotomic_reconstruct(z, M, prec, factor, config.height_bound)
            if c is None:
                log.debug("eigenvalue %s not found in Q(w_%d)", mpmath.nstr(z, 12), M)
                ok = False
                break
            found[idx] = c
        if not ok:
            continue
        values = [c.lift(M) for c in found] + [g.lift(M) for g in K0.period_generators]
        stab = field_stabilizer(values, M)
        return M, stab, [c.lift(M) for c in found]
    return None


def analyze(spec: NCayleySpec, config: Optional[AnalysisConfig] = None) -> Analysis:
    config = config or AnalysisConfig()
    G, n = spec.group, spec.n
    N = G.order
    delta = delta_matrix(spec)
    betas = beta_all(delta)
    H = stabilizer_subgroup(betas[1:], G)
    orbits = orbit_decomposition(G, H)
    K0 = fixed_field(G, H)
    lower, upper = degree_bounds(G, H, len(orbits), n)
    rep_polys = {v: char_poly_at(delta, v, betas) for v in orbits.representatives}
    full = full_char_poly(spec, betas)
    integ = integrality_test(full)

    k0_note = f"K0 = Inv(H) with H = {list(H.members)} <= (Z/{N})^*, [K0:Q] = {lower}"
    verified = []
    conductor = None
    if n == 1:
        certified, method = lower, CertificationMethod.N_EQUALS_1
        note = f"K = {k0_note}"
    elif integ.integral:
        certified, method = 1, CertificationMethod.ALL_RATIONAL
        note = "K = Q (all eigenvalues are integers)"
    else:
        result = _certify_by_reconstruction(list(rep_polys.values()), K0, N, config)
        if result is None:
            certified, method = None, CertificationMethod.NONE
            note = (
                f"K = K0(roots of {len(rep_polys)} orbit-representative polynomials), {k0_note}; "
                "eigenvalues not all reconstructed in the tried cyclotomic fields, bounds only"
            )
        else:
            conductor, stab, verified = result
            certified = euler_phi(conductor) // len(stab)
            method = CertificationMethod.CYCLOTOMIC_RECONSTRUCTION
            note = (
                f"K = K0(roots) = fixed field of {list(stab)} <= (Z/{conductor})^*, {k0_note}"
            )
    report = DegreeReport(
        integral=integ.integral,
        lower_bound=lower,
        upper_bound=upper,
        certified_degree=certified,
        certification_method=method,
        splitting_field_note=note,
        reconstruction_conductor=conductor,
    )
    return Analysis(spec, config, delta, betas, H, orbits, K0, rep_polys, full, integ, report, verified)


def degree_report(spec: NCayleySpec, config: Optional[AnalysisConfig] = None) -> DegreeReport:
    return analyze(spec, config).report
