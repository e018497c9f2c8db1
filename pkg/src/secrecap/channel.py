"""Channel ingestion and 2x2 Hermitian primitives.

A wiretap channel instance is a pair of complex channel matrices (legitimate
receiver and eavesdropper, each with two transmit-side columns) together with
a power-to-noise ratio ``rho``. Everything downstream consumes only the Gram
matrices ``S_R = rho * H_R^H H_R`` and ``S_E = rho * H_E^H H_E``, which are
2x2 Hermitian PSD.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import ChannelFormatError

__all__ = [
    "ChannelInstance",
    "GramPair",
    "E1",
    "E2",
    "gram_pair",
    "positive_secrecy",
    "lambda_max_2x2",
    "det3_identity_check",
    "load_channel",
    "parse_channel_dict",
    "channel_to_dict",
]

# unit coordinate vectors of C^2, used throughout the covariance decomposition
E1 = np.array([1.0 + 0.0j, 0.0 + 0.0j])
E2 = np.array([0.0 + 0.0j, 1.0 + 0.0j])


@dataclass(frozen=True)
class ChannelInstance:
    """Raw channel matrices and the linear power-to-noise ratio.

    Parameters
    ----------
    h_r : ndarray
        Complex receiver channel, shape (n_R, 2), n_R >= 1.
    h_e : ndarray
        Complex eavesdropper channel, shape (n_E, 2), n_E >= 1.
    rho : float
        Linear power-to-noise ratio P/sigma^2, finite and > 0.
    """

    h_r: np.ndarray
    h_e: np.ndarray
    rho: float

    def __post_init__(self):
        h_r = np.atleast_2d(np.asarray(self.h_r, dtype=complex))
        h_e = np.atleast_2d(np.asarray(self.h_e, dtype=complex))
        for name, h in (("h_r", h_r), ("h_e", h_e)):
            if h.ndim != 2 or h.shape[1] != 2:
                raise ValueError(
                    f"{name}: expected shape (n, 2), got {h.shape}"
                )
            if h.shape[0] < 1:
                raise ValueError(f"{name}: needs at least one row")
            if not np.all(np.isfinite(h.view(float))):
                raise ValueError(f"{name}: entries must be finite")
        rho = float(self.rho)
        if not np.isfinite(rho) or rho <= 0.0:
            raise ValueError(f"rho must be positive and finite, got {rho}")
        h_r.setflags(write=False)
        h_e.setflags(write=False)
        object.__setattr__(self, "h_r", h_r)
        object.__setattr__(self, "h_e", h_e)
        object.__setattr__(self, "rho", rho)

    @property
    def n_r(self) -> int:
        return self.h_r.shape[0]

    @property
    def n_e(self) -> int:
        return self.h_e.shape[0]


@dataclass(frozen=True)
class GramPair:
    """The 2x2 Hermitian Gram matrices of both links.

    Scalar accessors follow the entry layout

        s_r = [[a1, b1], [conj(b1), c1]],  s_e = [[a2, b2], [conj(b2), c2]]

    with a, c real nonnegative and b complex.
    """

    s_r: np.ndarray
    s_e: np.ndarray

    def __post_init__(self):
        s_r = np.asarray(self.s_r, dtype=complex)
        s_e = np.asarray(self.s_e, dtype=complex)
        for name, s in (("s_r", s_r), ("s_e", s_e)):
            if s.shape != (2, 2):
                raise ValueError(f"{name}: expected shape (2, 2), got {s.shape}")
            if not np.array_equal(s, s.conj().T):
                raise ValueError(f"{name}: not exactly Hermitian")
            tol = 1e-10 * (1.0 + s[0, 0].real + s[1, 1].real)
            if s[0, 0].real < -tol or s[1, 1].real < -tol:
                raise ValueError(f"{name}: negative diagonal entry")
            if s[0, 0].real * s[1, 1].real - abs(s[0, 1]) ** 2 < -tol:
                raise ValueError(f"{name}: not positive semidefinite")
        s_r.setflags(write=False)
        s_e.setflags(write=False)
        object.__setattr__(self, "s_r", s_r)
        object.__setattr__(self, "s_e", s_e)

    @property
    def a1(self) -> float:
        return self.s_r[0, 0].real

    @property
    def b1(self) -> complex:
        return complex(self.s_r[0, 1])

    @property
    def c1(self) -> float:
        return self.s_r[1, 1].real

    @property
    def a2(self) -> float:
        return self.s_e[0, 0].real

    @property
    def b2(self) -> complex:
        return complex(self.s_e[0, 1])

    @property
    def c2(self) -> float:
        return self.s_e[1, 1].real

    def det_r(self) -> float:
        """det(s_r) in real arithmetic (a1*c1 - |b1|^2)."""
        return self.a1 * self.c1 - abs(self.b1) ** 2

    def det_e(self) -> float:
        """det(s_e) in real arithmetic (a2*c2 - |b2|^2)."""
        return self.a2 * self.c2 - abs(self.b2) ** 2

    def swapped(self) -> "GramPair":
        """Pair with the roles of the two links exchanged."""
        return GramPair(s_r=self.s_e, s_e=self.s_r)


def _hermitize(s: np.ndarray) -> np.ndarray:
    # (S + S^H)/2 is exactly Hermitian in IEEE arithmetic
    return (s + s.conj().T) / 2.0


def gram_pair(ch: ChannelInstance) -> GramPair:
    """Form S_R = rho * H_R^H H_R and S_E = rho * H_E^H H_E.

    Both matrices are Hermitian-symmetrized after the product so the stored
    values satisfy S == S^H exactly.
    """
    s_r = _hermitize(ch.rho * (ch.h_r.conj().T @ ch.h_r))
    s_e = _hermitize(ch.rho * (ch.h_e.conj().T @ ch.h_e))
    return GramPair(s_r=s_r, s_e=s_e)


def positive_secrecy(ch: ChannelInstance) -> bool:
    """Whether the channel admits a positive secrecy capacity.

    True iff H_R^H H_R - H_E^H H_E has an eigenvalue above a relative
    tolerance. The test is independent of rho (rho > 0 only rescales).
    """
    g_r = _hermitize(ch.h_r.conj().T @ ch.h_r)
    g_e = _hermitize(ch.h_e.conj().T @ ch.h_e)
    diff = g_r - g_e
    tol = 1e-12 * (1.0 + np.abs(g_r).max() + np.abs(g_e).max())
    return lambda_max_2x2(diff) > tol


def lambda_max_2x2(b: np.ndarray) -> float:
    """Largest eigenvalue of a 2x2 matrix with real eigenvalues.

    Uses the closed form (tr + sqrt(tr^2 - 4 det)) / 2. Small negative
    discriminants (roundoff at a double eigenvalue) are clamped to zero;
    genuinely negative ones raise ValueError.
    """
    b = np.asarray(b, dtype=complex)
    if b.shape != (2, 2):
        raise ValueError(f"expected shape (2, 2), got {b.shape}")
    tr = b[0, 0] + b[1, 1]
    det = b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    if abs(tr.imag) > 1e-8 * (1.0 + abs(tr)) or abs(det.imag) > 1e-8 * (
        1.0 + abs(det)
    ):
        raise ValueError("matrix does not have a real trace/determinant")
    tr_r, det_r = tr.real, det.real
    disc = tr_r * tr_r - 4.0 * det_r
    tol = 1e-9 * (1.0 + tr_r * tr_r + 4.0 * abs(det_r))
    if disc < -tol:
        raise ValueError(
            f"negative discriminant {disc}: eigenvalues are not real"
        )
    return (tr_r + np.sqrt(max(disc, 0.0))) / 2.0


def det3_identity_check(c1, c2, c3, c4):
    """det(I + c1 c2^H + c3 c4^H) computed two ways.

    Returns ``(lhs, rhs)`` where lhs is the dense determinant and rhs the
    rank-two closed form (1 + c2^H c1)(1 + c4^H c3) - (c4^H c1)(c2^H c3).
    Exposed for property testing only.
    """
    vs = [np.asarray(v, dtype=complex).reshape(-1) for v in (c1, c2, c3, c4)]
    n = vs[0].size
    if any(v.size != n for v in vs):
        raise ValueError("all four vectors must have the same length")
    c1, c2, c3, c4 = vs
    lhs = np.linalg.det(
        np.eye(n) + np.outer(c1, c2.conj()) + np.outer(c3, c4.conj())
    )
    rhs = (1.0 + c2.conj() @ c1) * (1.0 + c4.conj() @ c3) - (
        c4.conj() @ c1
    ) * (c2.conj() @ c3)
    return lhs, rhs


def _parse_matrix(rows, name: str) -> np.ndarray:
    if not isinstance(rows, list) or len(rows) < 1:
        raise ChannelFormatError(f"{name}: expected a non-empty list of rows")
    out = np.empty((len(rows), 2), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 2:
            raise ChannelFormatError(f"{name} row {i}: expected 2 entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, (int, float)) for v in entry)
            ):
                raise ChannelFormatError(
                    f"{name} row {i} col {j}: expected [re, im]"
                )
            out[i, j] = complex(entry[0], entry[1])
    return out


def parse_channel_dict(data: dict) -> ChannelInstance:
    """Build a ChannelInstance from the channel-file JSON object.

    The object carries "h_r" and "h_e" as lists of rows of [re, im] pairs,
    plus exactly one of "rho_db" (converted as 10^(db/10)) or "rho_linear".
    """
    if not isinstance(data, dict):
        raise ChannelFormatError("channel file must hold a JSON object")
    unknown = set(data) - {"h_r", "h_e", "rho_db", "rho_linear"}
    if unknown:
        raise ChannelFormatError(f"unknown field(s): {', '.join(sorted(unknown))}")
    for key in ("h_r", "h_e"):
        if key not in data:
            raise ChannelFormatError(f"missing field: {key}")
    has_db = "rho_db" in data
    has_lin = "rho_linear" in data
    if has_db and has_lin:
        raise ChannelFormatError("provide rho_db or rho_linear, not both")
    if not has_db and not has_lin:
        raise ChannelFormatError("missing field: rho_db (or rho_linear)")
    rho_field = "rho_db" if has_db else "rho_linear"
    rho_val = data[rho_field]
    if not isinstance(rho_val, (int, float)):
        raise ChannelFormatError(f"{rho_field}: expected a number")
    rho = 10.0 ** (rho_val / 10.0) if has_db else float(rho_val)
    h_r = _parse_matrix(data["h_r"], "h_r")
    h_e = _parse_matrix(data["h_e"], "h_e")
    try:
        return ChannelInstance(h_r=h_r, h_e=h_e, rho=rho)
    except ValueError as exc:
        raise ChannelFormatError(str(exc)) from exc


def load_channel(path) -> ChannelInstance:
    """Parse a channel file (see `parse_channel_dict` for the schema)."""
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ChannelFormatError(f"invalid JSON: {exc}") from exc
    return parse_channel_dict(data)


def _matrix_to_rows(h: np.ndarray) -> list:
    return [[[z.real, z.imag] for z in row] for row in h]


def channel_to_dict(ch: ChannelInstance) -> dict:
    """Serialize a ChannelInstance to the channel-file JSON object.

    Uses "rho_linear" so the round trip is exact.
    """
    return {
        "h_r": _matrix_to_rows(ch.h_r),
        "h_e": _matrix_to_rows(ch.h_e),
        "rho_linear": ch.rho,
    }
