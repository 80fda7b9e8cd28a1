"""Seeded repair trials: sample f, corrupt its traces, decode, repair."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import poly
from .list_decode import gs_params
from .trace_repair import (RepairFailure, TraceCode, lifted_range, repair_with_errors,
                           traces_of)


class InvariantViolation(RuntimeError):
    """A trial inside the guaranteed radius failed to repair."""


def guaranteed_radius(tc: TraceCode, decoder: str, erasures: int = 0, mu: int = 1) -> int:
    """Largest e the decoder is guaranteed to correct next to ``erasures`` erasures."""
    scheme = tc.scheme
    T = scheme.tower
    if decoder == "bw-degree":
        return (scheme.n - scheme.delta - 1 - erasures) // 2
    if decoder == "bw-lifted":
        return (lifted_range(T.p, T.m, T.t, scheme.k) - 1 - erasures) // 2
    if decoder == "modified-gs":
        if erasures:
            return -1
        from .bounds import bounds_report

        d_star = bounds_report(T.p, T.m, T.t, scheme.k).d_star
        gs = gs_params(scheme.n, scheme.delta, mu, d_star)
        # mu * (n - e) > delta is needed for f to be a root: e <= e_raw - 1
        return min(gs.e_capped, gs.e_raw - 1)
    raise ValueError(f"unknown decoder {decoder!r}")


@dataclass(frozen=True)
class SimResult:
    trials: int
    successes: int
    decode_failures: int
    wrong_repairs: int
    radius: int
    mean_seconds: float

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 1.0

    def to_dict(self) -> dict:
        """Everything except timing, which would break byte-identical reruns."""
        return {
            "trials": self.trials,
            "successes": self.successes,
            "success_rate": self.success_rate,
            "decode_failures": self.decode_failures,
            "wrong_repairs": self.wrong_repairs,
            "radius": self.radius,
        }


def corrupt(rng: np.random.Generator, word, errors: int, erasures: int, qB: int, B):
    """Replace ``errors`` random positions by uniformly chosen other sub-symbols
    and erase ``erasures`` further positions."""
    n = len(word)
    if errors + erasures > n:
        raise ValueError("more corruptions than positions")
    out = list(word)
    pos = rng.choice(n, size=errors + erasures, replace=False)
    for j in pos[:errors].tolist():
        out[j] = B.add(out[j], int(rng.integers(1, qB)))
    for j in pos[errors:].tolist():
        out[j] = None
    return out


def simulate(tc: TraceCode, errors: int, trials: int, seed: int, decoder: str = "bw-degree",
             mu: int = 1, erasures: int = 0, strict: bool = True) -> SimResult:
    """Run ``trials`` independent repairs; PCG64 seeded with ``seed``.

    With ``strict`` a failure at e within the guaranteed radius raises
    :class:`InvariantViolation`.
    """
    scheme = tc.scheme
    T = scheme.tower
    F = T.F
    rng = np.random.default_rng(seed)
    radius = guaranteed_radius(tc, decoder, erasures, mu)
    ok = bad_decode = wrong = 0
    elapsed = 0.0
    for _ in range(trials):
        f = rng.integers(0, T.q, size=scheme.k).tolist()
        word = corrupt(rng, traces_of(scheme, f), errors, erasures, T.qB, T.B)
        start = time.perf_counter()
        try:
            got = repair_with_errors(tc, word, decoder, mu)
        except RepairFailure:
            got = None
        elapsed += time.perf_counter() - start
        if got is None:
            bad_decode += 1
        elif got != poly.evaluate(F, f, 0):
            wrong += 1
        else:
            ok += 1
    result = SimResult(trials, ok, bad_decode, wrong, radius,
                       elapsed / trials if trials else 0.0)
    if strict and errors <= radius and ok != trials:
        raise InvariantViolation(
            f"{trials - ok} of {trials} trials failed with e={errors} <= radius {radius}")
    return result
