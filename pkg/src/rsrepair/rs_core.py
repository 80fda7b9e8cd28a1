"""Reed-Solomon and generalized Reed-Solomon codes over a finite field."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from . import linalg, poly


@dataclass(frozen=True)
class GrsCode:
    """GRS(points, dim, multipliers): words (v_j * f(a_j))_j with deg f < dim."""

    field: object = dc_field(repr=False, compare=False)
    points: tuple[int, ...] = ()
    dim: int = 1
    multipliers: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(int(a) for a in self.points))
        if not self.multipliers:
            object.__setattr__(self, "multipliers", (1,) * len(self.points))
        else:
            object.__setattr__(self, "multipliers", tuple(int(v) for v in self.multipliers))
        if len(set(self.points)) != len(self.points):
            raise ValueError("evaluation points must be distinct")
        if len(self.multipliers) != len(self.points):
            raise ValueError("one multiplier per evaluation point")
        if any(v == 0 for v in self.multipliers):
            raise ValueError("multipliers must be nonzero")
        if not 1 <= self.dim <= len(self.points):
            raise ValueError("need 1 <= dim <= number of points")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def distance(self) -> int:
        return self.n - self.dim + 1


def rs_code(field, points: Sequence[int], dim: int) -> GrsCode:
    return GrsCode(field, tuple(points), dim)


def encode(code: GrsCode, f: Sequence[int]) -> list[int]:
    f = poly.trim(f)
    if len(f) > code.dim:
        raise ValueError(f"message polynomial has degree {len(f) - 1} >= dim {code.dim}")
    F = code.field
    vals = poly.evaluate_many(F, f, code.points)
    return F.vmul(vals, np.array(code.multipliers)).tolist()


def dual_multipliers(field, points: Sequence[int]) -> list[int]:
    """lambda_j = 1 / prod_{i != j} (a_j - a_i)."""
    if len(set(points)) != len(points):
        raise ValueError("evaluation points must be distinct")
    pts = np.asarray(points, dtype=np.int64)
    out = []
    for j, a in enumerate(points):
        diffs = field.vsub(a, np.delete(pts, j))
        acc = 1
        for d in diffs.tolist():
            acc = field.mul(acc, d)
        out.append(field.inv(acc))
    return out


def grs_dual(code: GrsCode) -> GrsCode:
    """The dual GRS(points, n - dim, w) with w_j = lambda_j / v_j."""
    F = code.field
    if code.dim == code.n:
        raise ValueError("the dual of the full space is the zero code")
    lam = dual_multipliers(F, code.points)
    w = [F.div(l, v) for l, v in zip(lam, code.multipliers)]
    return GrsCode(F, code.points, code.n - code.dim, tuple(w))


def bw_decode(code: GrsCode, received: Sequence[int | None], e_max: int) -> list[int] | None:
    """Berlekamp-Welch bounded-distance decoding.

    ``None`` entries of ``received`` are erasures; those positions are
    punctured before decoding.  Returns the message polynomial within
    ``e_max`` errors of the unerased positions, or None when no such
    codeword exists.
    """
    F = code.field
    if len(received) != code.n:
        raise ValueError("received word has the wrong length")
    keep = [j for j, r in enumerate(received) if r is not None]
    n = len(keep)
    k = code.dim
    if e_max < 0 or 2 * e_max > n - k:
        raise ValueError(f"2*e_max + erasures must be <= n - dim (e_max={e_max}, "
                         f"{code.n - n} erasures, n={code.n}, dim={k})")
    xs = np.array([code.points[j] for j in keep], dtype=np.int64)
    vs = np.array([code.multipliers[j] for j in keep], dtype=np.int64)
    ys = F.vmul(np.array([received[j] for j in keep], dtype=np.int64), F.vinv(vs))
    e = e_max
    # unknowns: Q_0..Q_{e+k-1}, E_0..E_{e-1}; E monic of degree e
    # Q(x_j) - y_j * sum_{i<e} E_i x_j^i = y_j * x_j^e
    ncols = e + k + e
    powers = np.ones((n, e + k), dtype=np.int64)
    for i in range(1, e + k):
        powers[:, i] = F.vmul(powers[:, i - 1], xs)
    A = np.empty((n, ncols), dtype=np.int64)
    A[:, : e + k] = powers
    A[:, e + k:] = F.vneg(F.vmul(ys[:, None], powers[:, :e]))
    rhs = F.vmul(ys, powers[:, e])
    sol = linalg.solve(F, A, rhs)
    if sol is None:
        return None
    Q = poly.trim(sol[: e + k].tolist())
    E = sol[e + k:].tolist() + [1]
    f, rem = poly.divmod_(F, Q, E)
    if rem or len(f) > k:
        return None
    vals = poly.evaluate_many(F, f, xs)
    if int(np.count_nonzero(vals != ys)) > e_max:
        return None
    return f
