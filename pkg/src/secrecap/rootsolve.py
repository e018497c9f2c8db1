"""Closed-form root solvers and the two capacity root candidates.

The capacity analysis needs all roots of one real quadratic and one real
quartic. The quartic is solved by radicals (depressed quartic, resolvent
cubic, two quadratic factors) with a guarded Newton polish; any root whose
residual is out of bounds is replaced by the matching eigenvalue of the
companion matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .coefficients import CoefficientSet

__all__ = [
    "RootSet",
    "solve_quadratic",
    "solve_quartic",
    "tau1_candidate",
    "tau2_candidate",
    "quartic_coefficients",
]

# residual acceptance: |P(r)| <= TOL_RES * (1 + max|coeff|) * max(1, |r|)^deg
TOL_RES = 1e-8
# realness filter: |Im r| <= TOL_IM * (1 + |Re r|)
TOL_IM = 1e-6
# open-interval margin for the covariance split x in (0, 1). The quartic
# always carries a double root whose x sits within ~sqrt(eps) of 1 (it is the
# first-antenna beamforming point), so the margin must exceed that noise
# floor; near-boundary optima are dominated by the quadratic branch anyway.
TOL_X = 1e-6


@dataclass(frozen=True)
class RootSet:
    """All roots of one polynomial plus the real-classified subset.

    ``real_roots`` holds the real parts of roots passing the realness filter,
    sorted in descending order (multiplicity kept). ``method`` records how the
    roots were obtained: "radicals" or "companion-fallback".
    """

    roots: Tuple[complex, ...]
    real_roots: Tuple[float, ...]
    method: str = "radicals"


def _filter_real(roots) -> Tuple[float, ...]:
    reals = [r.real for r in roots if abs(r.imag) <= TOL_IM * (1.0 + abs(r.real))]
    return tuple(sorted(reals, reverse=True))


def _make_rootset(roots, method="radicals") -> RootSet:
    roots = tuple(complex(r) for r in roots)
    return RootSet(roots=roots, real_roots=_filter_real(roots), method=method)


def solve_quadratic(a2: float, a1: float, a0: float) -> RootSet:
    """Both roots of a2 t^2 + a1 t + a0 = 0.

    Computes the larger-magnitude root from the stable form of the quadratic
    formula and the other from the root product, avoiding cancellation.
    Degenerate a2 == 0 degrades to the linear (or constant) case.
    """
    if a2 == 0.0:
        if a1 == 0.0:
            if a0 == 0.0:
                raise ValueError("degenerate polynomial: all coefficients zero")
            return _make_rootset([])  # nonzero constant, no roots
        return _make_rootset([-a0 / a1])
    disc = a1 * a1 - 4.0 * a2 * a0
    if disc >= 0.0:
        sq = math.sqrt(disc)
        # q = -(a1 + sign(a1)*sqrt(disc))/2 has no cancellation
        q = -0.5 * (a1 + math.copysign(sq, a1)) if a1 != 0.0 else 0.5 * sq
        r1 = q / a2
        r2 = (a0 / q) if q != 0.0 else 0.0
        return _make_rootset([complex(r1), complex(r2)])
    sq = math.sqrt(-disc)
    re = -a1 / (2.0 * a2)
    im = sq / (2.0 * abs(a2))
    return _make_rootset([complex(re, im), complex(re, -im)])


def _solve_quadratic_complex(b: complex, c: complex):
    """Roots of y^2 + b y + c with complex coefficients, stable splitting."""
    disc = b * b - 4.0 * c
    sq = np.sqrt(complex(disc))
    # pick the sign that avoids cancellation in -b -/+ sq
    if (b.conjugate() * sq).real > 0.0:
        sq = -sq
    r1 = (-b + sq) / 2.0
    r2 = c / r1 if r1 != 0.0 else -b - r1
    return r1, r2


def _cubic_real_roots(a: float, b: float, c: float):
    """Real roots of x^3 + a x^2 + b x + c (one or three)."""
    q = (a * a - 3.0 * b) / 9.0
    r = (2.0 * a ** 3 - 9.0 * a * b + 27.0 * c) / 54.0
    q3 = q ** 3
    if r * r < q3:
        theta = math.acos(r / math.sqrt(q3))
        m = -2.0 * math.sqrt(q)
        return [
            m * math.cos(theta / 3.0) - a / 3.0,
            m * math.cos((theta + 2.0 * math.pi) / 3.0) - a / 3.0,
            m * math.cos((theta - 2.0 * math.pi) / 3.0) - a / 3.0,
        ]
    mag = (abs(r) + math.sqrt(r * r - q3)) ** (1.0 / 3.0)
    big = -math.copysign(mag, r)
    small = q / big if big != 0.0 else 0.0
    return [big + small - a / 3.0]


def _cubic_all_roots(a3: float, a2: float, a1: float, a0: float):
    """All three roots of a3 x^3 + ... via one real root and deflation."""
    b, c, d = a2 / a3, a1 / a3, a0 / a3
    w = max(_cubic_real_roots(b, c, d))
    # synthetic division by (x - w): x^2 + (b + w) x + (c + w(b + w))
    r1, r2 = _solve_quadratic_complex(complex(b + w), complex(c + w * (b + w)))
    return [complex(w), r1, r2]


def _quartic_radicals(b: float, c: float, d: float, e: float):
    """Roots of the monic quartic x^4 + b x^3 + c x^2 + d x + e by radicals."""
    # depress with x = y - b/4
    b2 = b * b
    p = c - 3.0 * b2 / 8.0
    q = d - b * c / 2.0 + b * b2 / 8.0
    r = e - b * d / 4.0 + b2 * c / 16.0 - 3.0 * b2 * b2 / 256.0
    shift = -b / 4.0

    scale = 1.0 + abs(p) + abs(r)
    if abs(q) <= 1e-14 * scale:
        # biquadratic in y^2
        z1, z2 = _solve_quadratic_complex(complex(p), complex(r))
        ys = [np.sqrt(z1), -np.sqrt(z1), np.sqrt(z2), -np.sqrt(z2)]
        return [y + shift for y in ys]

    # resolvent cubic: m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0 has a
    # positive real root (value at 0 is negative); take the largest
    m = max(_cubic_real_roots(p, p * p / 4.0 - r, -q * q / 8.0))
    m = max(m, 0.0)
    s = math.sqrt(2.0 * m) if m > 0.0 else 0.0
    if s == 0.0:
        # q != 0 but resolvent root collapsed: fall back to biquadratic form
        z1, z2 = _solve_quadratic_complex(complex(p), complex(r))
        ys = [np.sqrt(z1), -np.sqrt(z1), np.sqrt(z2), -np.sqrt(z2)]
        return [y + shift for y in ys]
    half = p / 2.0 + m
    qs = q / (2.0 * s)
    y1, y2 = _solve_quadratic_complex(complex(-s), complex(half + qs))
    y3, y4 = _solve_quadratic_complex(complex(s), complex(half - qs))
    return [y1 + shift, y2 + shift, y3 + shift, y4 + shift]


def _polyval(coeffs, z: complex) -> complex:
    acc = 0.0 + 0.0j
    for c in coeffs:
        acc = acc * z + c
    return acc


def _newton_polish(coeffs, deriv, root: complex) -> complex:
    """One guarded Newton step; keeps the original root unless it improves."""
    pv = _polyval(coeffs, root)
    dv = _polyval(deriv, root)
    if dv == 0.0:
        return root
    step = pv / dv
    if abs(step) > 0.1 * (1.0 + abs(root)):
        return root
    cand = root - step
    return cand if abs(_polyval(coeffs, cand)) <= abs(pv) else root


def _residual_ok(coeffs, root: complex) -> bool:
    deg = len(coeffs) - 1
    bound = TOL_RES * (1.0 + max(abs(c) for c in coeffs)) * max(1.0, abs(root)) ** deg
    return abs(_polyval(coeffs, root)) <= bound


def _companion_roots(coeffs):
    """Eigenvalues of the companion matrix of the monic-normalized polynomial."""
    monic = np.asarray(coeffs, dtype=float) / coeffs[0]
    n = monic.size - 1
    comp = np.zeros((n, n))
    comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = -monic[:0:-1]
    return list(np.linalg.eigvals(comp).astype(complex))


def solve_quartic(a4: float, a3: float, a2: float, a1: float, a0: float) -> RootSet:
    """All four complex roots of a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0 = 0.

    Primary path is the closed form by radicals, one Newton polish step per
    root, then a residual check; roots failing it are swapped for the nearest
    companion-matrix eigenvalue and the set is tagged "companion-fallback".
    Zero leading coefficients degrade to the cubic/quadratic solvers.
    """
    if a4 == 0.0:
        if a3 == 0.0:
            return solve_quadratic(a2, a1, a0)
        return _make_rootset(_cubic_all_roots(a3, a2, a1, a0))

    coeffs = (a4, a3, a2, a1, a0)
    deriv = (4.0 * a4, 3.0 * a3, 2.0 * a2, a1)
    roots = _quartic_radicals(a3 / a4, a2 / a4, a1 / a4, a0 / a4)
    roots = [_newton_polish(coeffs, deriv, r) for r in roots]

    failing = [i for i, r in enumerate(roots) if not _residual_ok(coeffs, r)]
    method = "radicals"
    if failing:
        method = "companion-fallback"
        pool = _companion_roots(coeffs)
        pool = [_newton_polish(coeffs, deriv, r) for r in pool]
        if len(failing) >= len(roots) - 1:
            roots = pool
        else:
            for i in failing:
                j = min(range(len(pool)), key=lambda k: abs(pool[k] - roots[i]))
                roots[i] = pool.pop(j)
    return _make_rootset(roots, method=method)


def tau1_candidate(c: CoefficientSet) -> Optional[float]:
    """Largest real root of -q3 t^2 + p3 t - q6 = 0, or None.

    This is the beamforming (x = 0) candidate: its largest root equals the
    top generalized eigenvalue of the x = 0 matrix pair.
    """
    rs = solve_quadratic(-c.q3, c.p3, -c.q6)
    return rs.real_roots[0] if rs.real_roots else None


def quartic_coefficients(c: CoefficientSet):
    """Coefficients (degree 4 down to 0) of B1^2 - 4 A1 C1 as a polynomial in t,

    where A1 = -t^2 q1 + t p1 - q4, B1 = -t^2 q2 + t p2 - q5 and
    C1 = -t^2 q3 + t p3 - q6.
    """
    p1, p2, p3 = c.p1, c.p2, c.p3
    q1, q2, q3, q4, q5, q6 = c.q1, c.q2, c.q3, c.q4, c.q5, c.q6
    return (
        q2 * q2 - 4.0 * q1 * q3,
        -2.0 * q2 * p2 + 4.0 * (q1 * p3 + p1 * q3),
        p2 * p2 + 2.0 * q2 * q5 - 4.0 * (q1 * q6 + p1 * p3 + q4 * q3),
        -2.0 * p2 * q5 + 4.0 * (p1 * q6 + q4 * p3),
        q5 * q5 - 4.0 * q4 * q6,
    )


def tau2_candidate(c: CoefficientSet) -> Optional[Tuple[float, float]]:
    """Interior candidate (tau2, x_star) from the quartic, or None.

    Scans the real roots in descending order and returns the first whose
    repeated-root location x = -B1 / (2 A1) lies strictly inside (0, 1)
    (with the TOL_X margin). Roots where A1 is numerically zero are skipped:
    x is undefined there.
    """
    t4, t3, t2, t1, t0 = quartic_coefficients(c)
    rs = solve_quartic(t4, t3, t2, t1, t0)
    for tau in rs.real_roots:
        a_1 = -tau * tau * c.q1 + tau * c.p1 - c.q4
        b_1 = -tau * tau * c.q2 + tau * c.p2 - c.q5
        tol_a = 1e-12 * (1.0 + tau * tau * abs(c.q1) + abs(tau) * abs(c.p1) + abs(c.q4))
        if abs(a_1) <= tol_a:
            continue
        x = -b_1 / (2.0 * a_1)
        if TOL_X < x < 1.0 - TOL_X:
            return tau, x
    return None
