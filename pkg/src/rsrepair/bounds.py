"""Minimum-distance bounds for the repair-trace code and bandwidth accounting.

All bounds are computed in exact integer arithmetic.  A bound outside its
range of validity is ``None``, never zero.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .trace_repair import TraceCode, degree_parameter

DEFAULT_BUDGET = 300_000_000
# cap on the size of the precomputed block of low-order combinations
_BLOCK_ENTRIES = 1 << 22


def correctable(d: int | None) -> int | None:
    return None if d is None else (d - 1) // 2


def degree_bound(p: int, m: int, t: int, k: int) -> int | None:
    """d1 = p^(mt) - 1 - Delta, valid for k <= p^m."""
    if k > p**m:
        return None
    d1 = p ** (m * t) - 1 - degree_parameter(p, m, t, k)
    return d1 if d1 > 0 else None


def lifted_bound(p: int, m: int, t: int, k: int) -> int | None:
    """d2 = floor((p^(mt) - k) / p^(mt-m)), valid for k <= p^(mt) - p^(mt-m)."""
    q, s = p ** (m * t), p ** (m * t - m)
    if k > q - s:
        return None
    return (q - k) // s


def char_sum_bound(p: int, m: int, t: int, k: int) -> int | None:
    """floor(d3) from the additive character sum estimate.

    d3 = c * (p^(mt) - 1 - (k-1) sqrt(p^(mt))) with c = (p^m - p)/p^m when
    m >= 2 and c = (p - 1)/p when m = 1.  The square root is never
    approximated: for odd mt the floor is pinned down by comparing squares.
    """
    q = p ** (m * t)
    n = q - 1
    j = k - 1
    if j < 0 or j * j * q >= n * n:
        return None
    num, den = (p**m - p, p**m) if m >= 2 else (p - 1, p)
    r = math.isqrt(q)
    if r * r == q:
        value = math.floor(Fraction(num * (n - j * r), den))
    else:
        target = num * num * j * j * q

        def fits(z: int) -> bool:
            # z <= num * (n - j sqrt(q)) / den
            x = num * n - z * den
            return x >= 0 and x * x >= target

        lo = (num * (n - j * (r + 1))) // den  # sqrt(q) < r + 1
        hi = (num * (n - j * r)) // den + 1  # sqrt(q) > r
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if fits(mid):
                lo = mid
            else:
                hi = mid
        value = lo
    return value if value > 0 else None


# exact minimum distance


def _prime_expansion(tc: TraceCode) -> np.ndarray:
    """Generator of T(A, k) as a GF(p)-linear code, in GF(p) digits.

    Shape (kappa * m, n * m): row (r, i) is beta_i * gen[r] with beta_i the
    i-th GF(p)-basis element of B, each B-symbol spread over m digits.
    """
    T = tc.scheme.tower
    B, p, m = T.B, T.p, T.m
    rows = []
    for r in tc.gen:
        for i in range(m):
            rows.append(B.vmul(p**i, r))
    words = np.array(rows, dtype=np.int64).reshape(len(rows), -1)
    digits = np.stack([words // p**i % p for i in range(m)], axis=-1)
    return digits.reshape(len(rows), -1)


def _all_combinations(rows: np.ndarray, p: int) -> np.ndarray:
    """Every GF(p) combination of ``rows``.

    Combination c uses the base-p digits of c as coefficients with the last
    row least significant, so the first p^w entries span only the last w rows.
    """
    out = np.zeros((1, rows.shape[1]), dtype=np.int32)
    for row in rows[::-1]:
        out = (out[None, :, :] + np.arange(p, dtype=np.int32)[:, None, None] * row[None, None, :]) % p
        out = out.reshape(-1, rows.shape[1])
    return out


def _min_weight_jobs(G: np.ndarray, p: int, m: int, n: int, low: int):
    """Independent pieces of the projective enumeration.

    Each job is (lead, prefix): coefficient 1 on row ``lead``, zeros before
    it, ``prefix`` on the rows between lead and the low block, and every
    combination of the last ``low`` rows (or fewer, near the end).
    """
    R = G.shape[0]
    for lead in range(R):
        rest = R - lead - 1
        mid = max(0, rest - low)
        for prefix in itertools.product(range(p), repeat=mid):
            yield lead, prefix


def _weight_of_job(G, block, p, m, n, low, job) -> int:
    lead, prefix = job
    R = G.shape[0]
    rest = R - lead - 1
    base = G[lead].astype(np.int32).copy()
    for c, row in zip(prefix, G[lead + 1: lead + 1 + len(prefix)]):
        if c:
            base = (base + c * row) % p
    width = min(rest, low)
    combos = block[: p**width]
    words = (combos + base[None, :]) % p
    if m == 1:
        weights = np.count_nonzero(words, axis=1)
    else:
        weights = np.count_nonzero(words.reshape(len(words), n, m).any(axis=2), axis=1)
    return int(weights.min())


def enumeration_size(tc: TraceCode) -> int:
    """Number of nonzero codewords, |B|^kappa - 1."""
    return tc.scheme.tower.qB ** tc.kappa - 1


def exact_distance(tc: TraceCode, budget: int = DEFAULT_BUDGET,
                   partitions: int = 1, executor=None) -> int | None:
    """Minimum Hamming weight of T(A, k) by exhaustive enumeration.

    Returns None when |B|^kappa - 1 exceeds ``budget``.  Codewords are
    enumerated once per GF(p)-line (leading coefficient 1).  The work is a
    list of independent jobs; ``partitions`` splits it into contiguous
    chunks, mapped through ``executor`` when one is given.  The result is the
    same for every partitioning.
    """
    if tc.kappa < 1:
        raise ValueError("zero-dimensional code has no minimum distance")
    if enumeration_size(tc) > budget:
        return None
    T = tc.scheme.tower
    p, m, n = T.p, T.m, tc.n
    G = _prime_expansion(tc)
    R = G.shape[0]
    low = max(1, min(R - 1, int(math.log(_BLOCK_ENTRIES / G.shape[1], p))))
    block = _all_combinations(G[R - low:], p) if R > 1 else np.zeros((1, G.shape[1]), np.int32)
    jobs = list(_min_weight_jobs(G, p, m, n, low))
    chunks = [jobs[i::partitions] for i in range(partitions)]
    args = [(G, block, p, m, n, low, chunk) for chunk in chunks if chunk]
    mapper = executor.map if executor is not None else map
    return min(mapper(_min_weight_chunk, args))


def _min_weight_chunk(args) -> int:
    G, block, p, m, n, low, chunk = args
    return min(_weight_of_job(G, block, p, m, n, low, job) for job in chunk)


# reports


@dataclass
class BoundsReport:
    p: int
    m: int
    t: int
    k: int
    n: int
    delta: int
    d1: int | None
    d2: int | None
    d3: int | None
    d_exact: int | None = None

    @property
    def e1(self):
        return correctable(self.d1)

    @property
    def e2(self):
        return correctable(self.d2)

    @property
    def e3(self):
        return correctable(self.d3)

    @property
    def e_exact(self):
        return correctable(self.d_exact)

    @property
    def d_star(self) -> int | None:
        present = [d for d in (self.d1, self.d2, self.d3) if d is not None]
        return max(present) if present else None

    def to_dict(self) -> dict:
        out = asdict(self)
        out.update(e1=self.e1, e2=self.e2, e3=self.e3, e_exact=self.e_exact,
                   d_star=self.d_star)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "BoundsReport":
        fields = ("p", "m", "t", "k", "n", "delta", "d1", "d2", "d3", "d_exact")
        return cls(**{f: data.get(f) for f in fields})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def bounds_report(p: int, m: int, t: int, k: int, want_exact: bool = False,
                  budget: int = DEFAULT_BUDGET, tower=None) -> BoundsReport:
    if k < 1:
        raise ValueError("k must be at least 1")
    report = BoundsReport(
        p=p, m=m, t=t, k=k, n=p ** (m * t) - 1,
        delta=degree_parameter(p, m, t, k),
        d1=degree_bound(p, m, t, k),
        d2=lifted_bound(p, m, t, k),
        d3=char_sum_bound(p, m, t, k),
    )
    if want_exact:
        from .gf_tower import get_tower
        from .trace_repair import build_trace_code, make_scheme

        tower = tower or get_tower(p, m, t)
        scheme = make_scheme(tower, k)
        if scheme.feasible:
            report.d_exact = exact_distance(build_trace_code(scheme), budget)
    return report


# bandwidth


@dataclass(frozen=True)
class BandwidthPoint:
    e: int
    classical_symbols: int
    classical_bits: int
    trace_symbols: int
    trace_bits: int


def bits_per(size: int) -> int:
    """ceil(log2(size))."""
    return (size - 1).bit_length()


def bandwidth_classical(p: int, m: int, t: int, k: int, e: int) -> tuple[int, int]:
    """Symbols and bits to repair one node of RS(F, k) with e bad helpers."""
    q = p ** (m * t)
    if e < 0 or 2 * e > q - k:
        raise ValueError(f"classical repair cannot tolerate {e} errors (need 2e <= n - k)")
    symbols = k + 2 * e
    return symbols, symbols * bits_per(q)


def bandwidth_trace(n: int, d_star: int, e: int, p: int, m: int) -> tuple[int, int]:
    """Traces and bits when the trace code has distance at least d_star.

    With s unread traces the code still corrects e errors while
    2e + s <= d_star - 1, so n - (d_star - 1 - 2e) traces are downloaded.
    """
    if e < 0 or 2 * e > d_star - 1:
        raise ValueError(f"trace repair cannot tolerate {e} errors (need 2e <= d* - 1)")
    traces = n - d_star + 1 + 2 * e
    return traces, traces * bits_per(p**m)


def bandwidth_series(p: int, m: int, t: int, k: int, e_max: int | None = None,
                     d_star: int | None = None) -> tuple[list[BandwidthPoint], list[int]]:
    """Rows for e = 0..e_max where both schemes apply, plus the omitted e values."""
    n = p ** (m * t) - 1
    if d_star is None:
        d_star = bounds_report(p, m, t, k).d_star
    if d_star is None:
        raise ValueError("no distance bound applies at this k")
    classical_max = (n + 1 - k) // 2
    trace_max = (d_star - 1) // 2
    if e_max is None:
        e_max = max(classical_max, trace_max)
    rows, omitted = [], []
    for e in range(e_max + 1):
        if e > classical_max or e > trace_max:
            omitted.append(e)
            continue
        cs, cb = bandwidth_classical(p, m, t, k, e)
        ts, tb = bandwidth_trace(n, d_star, e, p, m)
        rows.append(BandwidthPoint(e, cs, cb, ts, tb))
    return rows, omitted
