"""Guruswami-Wootters trace repair of a full-length Reed-Solomon code.

The stored codeword is (f(a))_{a in F} with deg f < k.  Node 0 fails; every
helper a != 0 sends the single sub-symbol Tr(f(a)/a) in B.  The collection of
these traces is the repair-trace code T(A, k), a B-linear code of length
|F| - 1, and f(0) is recovered from any of its codewords.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg, poly
from .gf_tower import BasisPair, Tower, dual_basis
from .rs_core import GrsCode, bw_decode, grs_dual, rs_code

TraceWord = list  # list[int | None], None marks an erased trace

DECODERS = ("bw-degree", "bw-lifted", "modified-gs")


class RepairFailure(Exception):
    """Decoding found no codeword of T(A, k) to repair from."""


def degree_parameter(p: int, m: int, t: int, k: int) -> int:
    """Delta: the degree of the polynomial behind a lifted trace word."""
    s = p ** (m * t - m)
    return (k - 1) * s if k >= 2 else s - 1


def lifted_range(p: int, m: int, t: int, k: int) -> int:
    """Largest exponent l of the lifted parity checks sum a^l c_a = 0."""
    return (p ** (m * t) - k) // p ** (m * t - m)


@dataclass(frozen=True, eq=False)
class RepairScheme:
    tower: Tower
    k: int
    basis_pair: BasisPair

    @property
    def points(self) -> range:
        """A = F \\ {0} in canonical order."""
        return range(1, self.tower.q)

    @property
    def n(self) -> int:
        return self.tower.q - 1

    @property
    def lift_exponent(self) -> int:
        """|B|^(t-1) = p^(mt-m), the top Frobenius power inside the trace."""
        return self.tower.qB ** (self.tower.t - 1)

    @property
    def delta(self) -> int:
        T = self.tower
        return degree_parameter(T.p, T.m, T.t, self.k)

    @property
    def feasible(self) -> bool:
        """|A| >= p^(mt-m) - 1 + k, so f(0) is determined by the traces."""
        return self.n >= self.lift_exponent - 1 + self.k

    @cached_property
    def point_array(self) -> np.ndarray:
        return np.arange(1, self.tower.q, dtype=np.int64)

    @cached_property
    def repair_matrix(self) -> np.ndarray:
        """Row i holds Tr(u_i a) for every a in A."""
        T = self.tower
        return np.stack([T.vtrace(T.F.vmul(u, self.point_array))
                         for u in self.basis_pair.basis])


def make_scheme(tower: Tower, k: int, basis: Sequence[int] | None = None) -> RepairScheme:
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > tower.q:
        raise ValueError("k cannot exceed the code length |F|")
    pair = dual_basis(tower, basis if basis is not None else tower.power_basis())
    return RepairScheme(tower, k, pair)


def check_poly(scheme: RepairScheme, i: int) -> list[int]:
    """p_i(x) = Tr(u_i x) / x for the basis element u_i (0-based ``i``).

    Tr(u x) = sum_j u^(|B|^j) x^(|B|^j), so dividing by x just lowers each
    exponent by one.
    """
    T = scheme.tower
    u = scheme.basis_pair.basis[i]
    coeffs = [0] * scheme.lift_exponent
    for j in range(T.t):
        e = T.qB**j
        coeffs[e - 1] = T.F.pow(u, e)
    return poly.trim(coeffs)


def traces_of(scheme: RepairScheme, f: Sequence[int]) -> list[int]:
    """(Tr(f(a)/a))_{a in A}."""
    f = poly.trim(f)
    if len(f) > scheme.k:
        raise ValueError(f"deg f = {len(f) - 1} exceeds k - 1 = {scheme.k - 1}")
    T = scheme.tower
    F = T.F
    a = scheme.point_array
    vals = F.vmul(poly.evaluate_many(F, f, a), F.vinv(a))
    return T.vtrace(vals).tolist()


def repair_f0(scheme: RepairScheme, word: Sequence[int]) -> int:
    """Recover f(0) from an error-free trace codeword.

    Summing the dual codeword (Tr(u_i x)/x)_{x in F} against (f(x))_x gives
    sum_a Tr(u_i a) c_a = -Tr(u_i f(0)); the full-length dual multipliers are
    all -1, which only equals 1 in characteristic 2.  Then
    f(0) = sum_i Tr(u_i f(0)) * dual_i.
    """
    if not scheme.feasible:
        raise ValueError("|A| < p^(mt-m) - 1 + k: traces do not determine f(0)")
    if any(c is None for c in word):
        raise ValueError("repair needs a complete trace word")
    T = scheme.tower
    c = np.asarray(word, dtype=np.int64)
    s = T.B.vneg(T.B.vdot(scheme.repair_matrix, c[None, :], axis=1))
    F = T.F
    out = 0
    for si, dual in zip(s.tolist(), scheme.basis_pair.dual):
        out = F.add(out, F.mul(si, dual))
    return out


@dataclass(frozen=True, eq=False)
class TraceCode:
    """T(A, k) with a row-reduced generator matrix over B."""

    scheme: RepairScheme
    gen: np.ndarray

    @property
    def kappa(self) -> int:
        """Dimension over B."""
        return self.gen.shape[0]

    @property
    def n(self) -> int:
        return self.scheme.n

    @cached_property
    def pc(self) -> np.ndarray:
        """Parity-check matrix over B, (n - kappa) x n."""
        return linalg.nullspace(self.scheme.tower.B, self.gen)

    def encode(self, coeffs: Sequence[int]) -> list[int]:
        """Codeword for a length-kappa vector of B coefficients."""
        B = self.scheme.tower.B
        c = np.asarray(coeffs, dtype=np.int64)
        return B.vsum(B.vmul(c[:, None], self.gen), axis=0).tolist()


def spanning_words(scheme: RepairScheme) -> np.ndarray:
    """The t*k words Tr(u_j a^(i-1)), i < k, which span T(A, k) over B."""
    T = scheme.tower
    F = T.F
    a = scheme.point_array
    rows = []
    power = F.vinv(a)  # a^(i-1) for i = 0
    for _ in range(scheme.k):
        for u in scheme.basis_pair.basis:
            rows.append(T.vtrace(F.vmul(u, power)))
        power = F.vmul(power, a)
    return np.stack(rows)


def build_trace_code(scheme: RepairScheme) -> TraceCode:
    if not scheme.feasible:
        raise ValueError("repair scheme is infeasible for this k")
    gen = linalg.row_basis(scheme.tower.B, spanning_words(scheme))
    return TraceCode(scheme, gen)


def lifted_parity_residual(scheme: RepairScheme, word: Sequence[int], ell: int) -> int:
    """sum_a a^ell * c_a in F; zero on T(A, k) for 2 <= ell <= lifted_range."""
    T = scheme.tower
    top = lifted_range(T.p, T.m, T.t, scheme.k)
    if not 2 <= ell <= top:
        raise ValueError(f"ell must lie in [2, {top}]")
    F = T.F
    c = np.asarray(word, dtype=np.int64)
    return int(F.vsum(F.vmul(F.vpow(scheme.point_array, ell), c)))


def lift_to_grs(scheme: RepairScheme, word: Sequence[int | None]) -> list[int | None]:
    """(a^(p^(mt-m)) * c_a)_a; on T(A, k) this evaluates a polynomial of degree <= Delta."""
    F = scheme.tower.F
    mult = F.vpow(scheme.point_array, scheme.lift_exponent).tolist()
    return [None if c is None else F.mul(x, c) for x, c in zip(mult, word)]


def unlift(scheme: RepairScheme, values: Sequence[int]) -> list[int] | None:
    """Inverse of :func:`lift_to_grs`; None if some position leaves B."""
    T = scheme.tower
    F = T.F
    inv = F.vpow(scheme.point_array, -scheme.lift_exponent)
    out = F.vmul(inv, np.asarray(values, dtype=np.int64))
    if np.any(out >= T.qB):
        return None
    return out.tolist()


def membership(tc: TraceCode, word: Sequence[int]) -> bool:
    if any(c is None for c in word):
        raise ValueError("membership needs a word without erasures")
    B = tc.scheme.tower.B
    c = np.asarray(word, dtype=np.int64)
    if c.shape != (tc.n,) or np.any(c < 0) or np.any(c >= B.order):
        return False
    if tc.pc.shape[0] == 0:
        return True
    return not np.any(B.vdot(tc.pc, c[None, :], axis=1))


def hamming_distance(a: Sequence, b: Sequence) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def degree_code(scheme: RepairScheme) -> GrsCode:
    """RS(A, Delta + 1), which contains the lifted trace code."""
    if scheme.delta + 1 > scheme.n:
        raise ValueError("Delta >= |A|: the degree embedding is vacuous")
    return rs_code(scheme.tower.F, scheme.points, scheme.delta + 1)


def lifted_code(scheme: RepairScheme) -> GrsCode:
    """The GRS code cut out by the checks sum a^l c_a = 0, 2 <= l <= L.

    Its dimension is p^(mt) - L; it contains T(A, k) itself (no lift).
    """
    T = scheme.tower
    F = T.F
    L = lifted_range(T.p, T.m, T.t, scheme.k)
    if L < 1:
        raise ValueError("k > p^(mt) - p^(mt-m): no lifted parity checks")
    if L == 1:
        return rs_code(F, scheme.points, scheme.n)
    v = F.vpow(scheme.point_array, 2).tolist()
    checks = GrsCode(F, tuple(scheme.points), L - 1, tuple(v))
    return grs_dual(checks)


def _decode_grs(code: GrsCode, received: Sequence[int | None]) -> list[int] | None:
    erasures = sum(1 for r in received if r is None)
    e_max = (code.n - erasures - code.dim) // 2
    if e_max < 0:
        raise RepairFailure("too many erasures for this decoder")
    f = bw_decode(code, received, e_max)
    if f is None:
        return None
    F = code.field
    vals = poly.evaluate_many(F, f, code.points)
    return F.vmul(vals, np.array(code.multipliers)).tolist()


def decode_trace_word(tc: TraceCode, received: Sequence[int | None],
                      decoder: str = "bw-degree", mu: int = 1) -> list[int]:
    """Nearest codeword of T(A, k) under the chosen strategy."""
    scheme = tc.scheme
    if decoder == "bw-degree":
        lifted = _decode_grs(degree_code(scheme), lift_to_grs(scheme, received))
        word = None if lifted is None else unlift(scheme, lifted)
    elif decoder == "bw-lifted":
        word = _decode_grs(lifted_code(scheme), list(received))
        if word is not None and any(c >= scheme.tower.qB for c in word):
            word = None
    elif decoder == "modified-gs":
        from .list_decode import modified_gs_decode

        found = modified_gs_decode(tc, received, mu)
        word = found[0] if len(found) == 1 else None
    else:
        raise ValueError(f"unknown decoder {decoder!r}; choose from {DECODERS}")
    if word is None:
        raise RepairFailure(f"{decoder}: no codeword within the decoding radius")
    if not membership(tc, word):
        raise RepairFailure(f"{decoder}: decoded word is not in T(A, k)")
    return word


def repair_with_errors(tc: TraceCode, received: Sequence[int | None],
                       decoder: str = "bw-degree", mu: int = 1) -> int:
    """Decode erroneous (and possibly erased) traces, then recover f(0)."""
    return repair_f0(tc.scheme, decode_trace_word(tc, received, decoder, mu))


def format_trace_word(word: Sequence[int | None]) -> str:
    return ",".join("?" if c is None else str(c) for c in word)


def parse_trace_word(text: str) -> list[int | None]:
    out: list[int | None] = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(None if tok == "?" else int(tok))
    return out
