"""Guruswami-Sudan list decoding and the bounded-distance decoder built on it.

Parameters follow the Koetter-Vardy form: for weighted degree (1, Delta) and
multiplicity mu, delta is the least integer whose monomial count exceeds
n mu (mu + 1) / 2, and the decoding radius is n - floor(delta / mu).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg, poly

# Bivariate polynomials are lists indexed by y-degree of x-polynomials:
# Q[b][a] is the coefficient of x^a y^b.
Bivariate = list


def monomial_count(delta: int, Delta: int) -> Fraction:
    """ceil((delta+1)/Delta) * (delta - (Delta/2) floor(delta/Delta) + 1), exactly."""
    if delta < 0 or Delta < 1:
        raise ValueError("need delta >= 0 and Delta >= 1")
    return -(-(delta + 1) // Delta) * (delta - Fraction(Delta, 2) * (delta // Delta) + 1)


def monomials(delta: int, Delta: int) -> list[tuple[int, int]]:
    """Exponent pairs (a, b) with a + Delta * b <= delta."""
    return [(a, b) for b in range(delta // Delta + 1) for a in range(delta - Delta * b + 1)]


@dataclass(frozen=True)
class GsParams:
    n: int
    Delta: int
    mu: int
    delta: int
    e_raw: int
    e_capped: int


def min_delta(n: int, Delta: int, mu: int) -> int:
    """Smallest delta with monomial_count(delta, Delta) > n mu (mu+1) / 2."""
    target = Fraction(n * mu * (mu + 1), 2)
    hi = 1
    while monomial_count(hi, Delta) <= target:
        hi *= 2
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if monomial_count(mid, Delta) > target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def gs_params(n: int, Delta: int, mu: int, d_star: int) -> GsParams:
    if n < 1 or Delta < 1 or mu < 1:
        raise ValueError("need n, Delta, mu >= 1")
    delta = min_delta(n, Delta, mu)
    e_raw = n - delta // mu
    return GsParams(n, Delta, mu, delta, e_raw, min(e_raw, (d_star - 1) // 2))


def best_gs_params(n: int, Delta: int, d_star: int, mu_max: int = 1000) -> GsParams | None:
    """The multiplicity in [1, mu_max] with the largest capped radius; ties go
    to the smallest mu.  None when Delta > n (no list decoding guarantee)."""
    if mu_max < 1:
        raise ValueError("mu_max must be at least 1")
    if Delta > n:
        return None
    best = None
    for mu in range(1, mu_max + 1):
        cand = gs_params(n, Delta, mu, d_star)
        if best is None or cand.e_capped > best.e_capped:
            best = cand
    return best


# interpolation


def _hasse_constraints(field, xs, ys, mu: int, mons) -> np.ndarray:
    """One row per (point, r, s) with r + s < mu: the (r, s) Hasse derivative
    of sum Q_ab x^a y^b at the point, as a linear form in the Q_ab."""
    F = field
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    max_a = max(a for a, _ in mons)
    max_b = max(b for _, b in mons)
    xpow = np.ones((len(xs), max_a + 1), dtype=np.int64)
    for i in range(1, max_a + 1):
        xpow[:, i] = F.vmul(xpow[:, i - 1], xs)
    ypow = np.ones((len(ys), max_b + 1), dtype=np.int64)
    for i in range(1, max_b + 1):
        ypow[:, i] = F.vmul(ypow[:, i - 1], ys)
    a_idx = np.array([a for a, _ in mons])
    b_idx = np.array([b for _, b in mons])
    blocks = []
    for r in range(mu):
        for s in range(mu - r):
            binom = np.array([F.from_int(math.comb(a, r) * math.comb(b, s)) for a, b in mons],
                             dtype=np.int64)
            ea = np.maximum(a_idx - r, 0)
            eb = np.maximum(b_idx - s, 0)
            vals = F.vmul(xpow[:, ea], ypow[:, eb])
            blocks.append(F.vmul(vals, binom[None, :]))
    return np.vstack(blocks)


def interpolate(field, points: Sequence[tuple[int, int]], mu: int, delta: int,
                Delta: int) -> Bivariate:
    """Nonzero Q of (1, Delta)-weighted degree <= delta with multiplicity mu
    at every point."""
    if monomial_count(delta, Delta) <= Fraction(len(points) * mu * (mu + 1), 2):
        raise ValueError("too few monomials: a nonzero interpolant is not guaranteed")
    mons = monomials(delta, Delta)
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    M = _hasse_constraints(field, xs, ys, mu, mons)
    kernel = linalg.nullspace(field, M)
    vec = kernel[0]
    Q: Bivariate = [[0] * (delta - Delta * b + 1) for b in range(delta // Delta + 1)]
    for (a, b), c in zip(mons, vec.tolist()):
        Q[b][a] = c
    return _trim_bivariate(Q)


def _trim_bivariate(Q: Bivariate) -> Bivariate:
    Q = [poly.trim(row) for row in Q]
    while Q and not Q[-1]:
        Q.pop()
    return Q


def substitute(field, Q: Bivariate, f: Sequence[int]) -> list[int]:
    """Q(x, f(x)) as a polynomial in x."""
    acc: list[int] = []
    for row in reversed(Q):
        acc = poly.add(field, poly.mul(field, acc, f), row)
    return acc


def hasse_derivative(field, Q: Bivariate, r: int, s: int, x: int, y: int) -> int:
    """(r, s) Hasse derivative of Q evaluated at (x, y)."""
    F = field
    acc = 0
    for b, row in enumerate(Q):
        if b < s:
            continue
        cb = F.from_int(math.comb(b, s))
        if cb == 0:
            continue
        yb = F.pow(y, b - s)
        for a, c in enumerate(row):
            if a < r or c == 0:
                continue
            ca = F.from_int(math.comb(a, r))
            if ca:
                term = F.mul(F.mul(c, F.mul(ca, cb)), F.mul(F.pow(x, a - r), yb))
                acc = F.add(acc, term)
    return acc


# root finding


def _roots_in_field(field, g: Sequence[int]) -> list[int]:
    """All roots of a nonzero univariate polynomial, by evaluation at every element."""
    g = poly.trim(g)
    if len(g) <= 1:
        return []
    out = []
    for start in range(0, field.order, 1 << 16):
        xs = np.arange(start, min(field.order, start + (1 << 16)), dtype=np.int64)
        vals = poly.evaluate_many(field, g, xs)
        out.extend(xs[vals == 0].tolist())
    return out


def _shift_y(field, Q: Bivariate, gamma: int) -> Bivariate:
    """Q(x, y + gamma)."""
    F = field
    out: Bivariate = [[] for _ in Q]
    for b, row in enumerate(Q):
        if not row:
            continue
        for s in range(b, -1, -1):
            # coefficient of y^s in (y + gamma)^b is C(b, s) gamma^(b - s)
            c = F.mul(F.from_int(math.comb(b, s)), F.pow(gamma, b - s))
            if c:
                out[s] = poly.add(F, out[s], poly.scale(F, row, c))
    return _trim_bivariate(out)


def _x_valuation(Q: Bivariate) -> int:
    return min(next(i for i, c in enumerate(row) if c) for row in Q if row)


def y_roots(field, Q: Bivariate, Delta: int) -> list[list[int]]:
    """Every f with deg f <= Delta and Q(x, f(x)) = 0 (Roth-Ruckenstein).

    Each level fixes one coefficient: with f = gamma + x g, the roots g of
    Q(x, x y + gamma) / x^r are sought recursively.
    """
    F = field
    Q = _trim_bivariate(Q)
    if not Q:
        raise ValueError("Q must be nonzero")
    found: list[list[int]] = []

    def recurse(R: Bivariate, prefix: list[int]) -> None:
        r = _x_valuation(R)
        R = [row[r:] if row else [] for row in R]
        R = _trim_bivariate(R)
        at_zero = [row[0] if row else 0 for row in R]
        for gamma in _roots_in_field(F, at_zero):
            coeffs = prefix + [gamma]
            shifted = _shift_y(F, R, gamma)
            # Q(x, x y + gamma): y^s picks up x^s
            nxt = [([0] * s + row) if row else [] for s, row in enumerate(shifted)]
            nxt = _trim_bivariate(nxt)
            if not nxt or not nxt[0]:
                # y | Q(x, x y + gamma): the remaining tail may be zero
                found.append(poly.trim(coeffs))
            if len(coeffs) <= Delta and nxt:
                recurse(nxt, coeffs)

    recurse(Q, [])
    out = []
    for f in found:
        if len(f) <= Delta + 1 and not substitute(F, Q, f) and f not in out:
            out.append(f)
    return out


# the decoder for T(A, k)


def modified_gs_decode(tc, received: Sequence[int], mu: int = 1,
                       params: GsParams | None = None) -> list[list[int]]:
    """Codewords of T(A, k) within the capped GS radius of ``received``.

    Step 1 list-decodes the lifted word in RS(A, Delta + 1); step 2 maps each
    candidate back to a trace word and keeps it only if it is a codeword
    within e_capped of ``received``.  Sorted by distance, then by symbols.
    """
    from .bounds import bounds_report
    from .trace_repair import hamming_distance, lift_to_grs, membership, unlift

    if any(c is None for c in received):
        raise ValueError("the list decoder does not take erasures")
    scheme = tc.scheme
    T = scheme.tower
    F = T.F
    n = scheme.n
    Delta = scheme.delta
    if params is None:
        d_star = bounds_report(T.p, T.m, T.t, scheme.k).d_star
        params = gs_params(n, Delta, mu, d_star)
    lifted = lift_to_grs(scheme, received)
    Q = interpolate(F, list(zip(scheme.points, lifted)), params.mu, params.delta, Delta)
    out = []
    for f in y_roots(F, Q, Delta):
        values = poly.evaluate_many(F, f, scheme.point_array)
        word = unlift(scheme, values)
        if word is None or not membership(tc, word):
            continue
        dist = hamming_distance(word, received)
        if dist <= params.e_capped and word not in [w for _, w in out]:
            out.append((dist, word))
    out.sort()
    return [w for _, w in out]
