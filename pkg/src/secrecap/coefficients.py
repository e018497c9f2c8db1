"""The nine polynomial coefficients behind the capacity root analysis.

For a Gram pair with entries (a1, b1, c1) and (a2, b2, c2), three real
quadratics in the covariance-split variable x capture the whole objective:

    f1(x) = p1 x^2 + p2 x + p3      (cross term: trace of adj(G2) G1)
    f2(x) = q1 x^2 + q2 x + q3      (det of the eavesdropper-side matrix G2)
    f3(x) = q4 x^2 + q5 x + q6      (det of the receiver-side matrix G1)

and the largest generalized eigenvalue is (f1 + sqrt(f1^2 - 4 f2 f3)) / (2 f2).
All arithmetic here is real: only |b1|^2, |b2|^2 and 2*Re(conj(b1)*b2) enter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import GramPair

__all__ = ["CoefficientSet", "FPolyValues", "coefficient_set", "f_values"]


@dataclass(frozen=True)
class CoefficientSet:
    p1: float
    p2: float
    p3: float
    q1: float
    q2: float
    q3: float
    q4: float
    q5: float
    q6: float

    def __post_init__(self):
        if not all(np.isfinite(v) for v in self.as_tuple()):
            raise ValueError("coefficients must be finite")

    def as_tuple(self):
        return (
            self.p1,
            self.p2,
            self.p3,
            self.q1,
            self.q2,
            self.q3,
            self.q4,
            self.q5,
            self.q6,
        )

    def as_dict(self) -> dict:
        return {
            "p1": self.p1,
            "p2": self.p2,
            "p3": self.p3,
            "q1": self.q1,
            "q2": self.q2,
            "q3": self.q3,
            "q4": self.q4,
            "q5": self.q5,
            "q6": self.q6,
        }


@dataclass(frozen=True)
class FPolyValues:
    """Values of the three quadratics at one point; all positive on [0, 1)."""

    f1: float
    f2: float
    f3: float


def coefficient_set(g: GramPair) -> CoefficientSet:
    """Compute the nine real coefficients from a Gram pair."""
    a1, c1 = g.a1, g.c1
    a2, c2 = g.a2, g.c2
    ab1 = abs(g.b1) ** 2
    ab2 = abs(g.b2) ** 2
    cross = 2.0 * (g.b1.conjugate() * g.b2).real  # conj(b1)b2 + b1 conj(b2)
    d1 = a1 * c1 - ab1  # det(s_r)
    d2 = a2 * c2 - ab2  # det(s_e)

    return CoefficientSet(
        p1=-cross - (1.0 + a1) * d2 - (1.0 + a2) * d1,
        p2=2.0 * cross
        + (1.0 + a1) * (a2 - c2 + d2)
        + (1.0 + a2) * (a1 - c1 + d1),
        p3=(1.0 + a1) * (1.0 + c2) + (1.0 + a2) * (1.0 + c1) - cross,
        q1=-a2 * (c2 + d2),
        q2=a2 - c2 + a2 * a2 + ab2 + a2 * d2,
        q3=1.0 + a2 + c2 + d2,
        q4=-a1 * (c1 + d1),
        q5=a1 - c1 + a1 * a1 + ab1 + a1 * d1,
        q6=1.0 + a1 + c1 + d1,
    )


def f_values(c: CoefficientSet, x: float) -> FPolyValues:
    """Evaluate f1, f2, f3 at x (Horner)."""
    x = float(x)
    return FPolyValues(
        f1=(c.p1 * x + c.p2) * x + c.p3,
        f2=(c.q1 * x + c.q2) * x + c.q3,
        f3=(c.q4 * x + c.q5) * x + c.q6,
    )
