"""Acceptance suite: one PASS/FAIL line per criterion, with its time limit.

The lines are printed as each test runs and repeated in the pytest terminal
summary.
"""

import itertools
import time

import numpy as np

from rsrepair import poly
from rsrepair.bounds import bandwidth_series, bounds_report
from rsrepair.gf_tower import get_tower
from rsrepair.list_decode import best_gs_params, modified_gs_decode, monomial_count
from rsrepair.rs_core import bw_decode, encode, rs_code
from rsrepair.sim import corrupt, simulate
from rsrepair.trace_repair import (build_trace_code, lifted_parity_residual, lifted_range,
                                   make_scheme, repair_f0, traces_of)

RESULTS: list[str] = []

GF25_BOUNDS = {1: (9, 1, 9), 2: (9, 1, 7), 3: (6, 1, 5), 4: (4, 1, 3), 5: (1, 1, 1),
               6: (None, 1, None), 7: (None, 1, None), 8: (None, 1, None), 9: (None, 1, None)}
GF25_EXACT = {1: 9, 2: 9, 3: 6, 4: 5, 5: 4, 6: 4}
GF25_GS = {1: 9, 2: 9, 3: 6, 4: 4}
GF4096_BOUNDS = [(1919, 1791), (1919, 1763), (1791, 1735), (1663, 1707), (1535, 1679),
                 (1407, 1651), (1279, 1623), (1151, 1595), (1023, 1567), (895, 1539),
                 (767, 1511), (639, 1483), (511, 1455), (383, 1427), (255, 1399),
                 (127, 1371), (None, 1343)]
GF4096_GS = [(1919, 1), (1919, 1), (1791, 1), (1707, 1), (1679, 1), (1651, 3), (1587, 473),
             (1386, 424), (1199, 406), (1023, 279), (857, 277), (699, 243), (548, 198),
             (404, 496), (264, 120), (130, 106)]


def record(num: int, name: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
    ok_time = elapsed < limit
    status = "PASS" if ok and ok_time else "FAIL"
    line = f"[{status}] criterion {num:2d}: {name} ({elapsed:.2f} s, limit {limit:g} s)"
    if detail:
        line += f" {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert ok_time, line


def test_01_gf25_bounds():
    start = time.perf_counter()
    got = {}
    for k in range(1, 10):
        r = bounds_report(5, 1, 2, k)
        got[k] = (r.e1, r.e2, r.e3)
    record(1, "GF(25) bound columns", got == GF25_BOUNDS, time.perf_counter() - start, 1)


def test_02_gf25_exact():
    start = time.perf_counter()
    got = {k: bounds_report(5, 1, 2, k, want_exact=True).e_exact for k in range(1, 6)}
    small = time.perf_counter() - start
    start6 = time.perf_counter()
    got[6] = bounds_report(5, 1, 2, 6, want_exact=True).e_exact
    six = time.perf_counter() - start6
    # k = 7..9: sampled codeword weights never fall below the best lower bound
    rng = np.random.default_rng(2)
    T = get_tower(5, 1, 2)
    sandwich = True
    for k in (7, 8, 9):
        r = bounds_report(5, 1, 2, k)
        tc = build_trace_code(make_scheme(T, k))
        coeffs = rng.integers(0, 5, (5000, tc.kappa))
        words = T.B.vsum(T.B.vmul(coeffs[:, :, None], tc.gen[None, :, :]), axis=1)
        weights = np.count_nonzero(words, axis=1)
        weights = weights[weights > 0]
        sandwich &= bool(weights.min() >= r.d_star)
    ok = got == GF25_EXACT and sandwich and six < 600
    record(2, "GF(25) exact distances", ok, small, 60,
           f"[k=6 took {six:.2f} s, limit 600 s; k=7..9 sandwich {'ok' if sandwich else 'broken'}]")


def test_03_gf4096_bounds():
    start = time.perf_counter()
    ok = True
    for k in range(1, 18):
        r = bounds_report(2, 4, 3, k)
        ok &= (r.e1, r.e2, r.e3) == (GF4096_BOUNDS[k - 1][0], 7, GF4096_BOUNDS[k - 1][1])
    record(3, "GF(4096) bound columns", ok, time.perf_counter() - start, 1)


def test_04_gf4096_gs():
    start = time.perf_counter()
    got = []
    for k in range(1, 17):
        r = bounds_report(2, 4, 3, k)
        gs = best_gs_params(r.n, r.delta, r.d_star, 1000)
        got.append((gs.e_capped, gs.mu))
    record(4, "GF(4096) GS column", got == GF4096_GS, time.perf_counter() - start, 30)


def test_05_motivating_example():
    start = time.perf_counter()
    r = bounds_report(2, 2, 2, 2)
    tc = build_trace_code(make_scheme(get_tower(2, 2, 2), 2))
    res = simulate(tc, 5, 1000, seed=2024, decoder="bw-degree")
    rows, _ = bandwidth_series(2, 2, 2, 2)
    five = next(p for p in rows if p.e == 5)
    ok = (r.d1 == 11 and res.success_rate == 1.0
          and (five.classical_bits, five.trace_bits) == (48, 30))
    record(5, "GF(16)/GF(4) example", ok, time.perf_counter() - start, 10)


def test_06_repair_identity():
    start = time.perf_counter()
    rng = np.random.default_rng(6)
    failures = 0
    runs = 0
    for key in ((2, 2, 2), (3, 1, 2), (5, 1, 2)):
        T = get_tower(*key)
        for k in range(1, T.q + 1):
            s = make_scheme(T, k)
            if not s.feasible:
                continue
            for _ in range(1000):
                f = rng.integers(0, T.q, k).tolist()
                runs += 1
                failures += repair_f0(s, traces_of(s, f)) != poly.evaluate(T.F, f, 0)
    record(6, "repair identity", failures == 0, time.perf_counter() - start, 30,
           f"[{runs} repairs, {failures} failures]")


def test_07_lifted_parity():
    start = time.perf_counter()
    ok = True
    for key in ((5, 1, 2), (2, 2, 2)):
        T = get_tower(*key)
        B = T.B
        for k in range(1, T.q + 1):
            s = make_scheme(T, k)
            L = lifted_range(T.p, T.m, T.t, k)
            if not s.feasible or L < 2:
                continue
            tc = build_trace_code(s)
            ells = range(2, L + 1)
            for row in tc.gen:
                ok &= all(lifted_parity_residual(s, row, ell) == 0 for ell in ells)
                for j in range(s.n):
                    for err in range(1, T.qB):
                        bad = row.copy()
                        bad[j] = B.add(int(bad[j]), err)
                        ok &= any(lifted_parity_residual(s, bad, ell) != 0 for ell in ells)
    record(7, "lifted parity checks", ok, time.perf_counter() - start, 10)


def test_08_dual_basis():
    start = time.perf_counter()
    rng = np.random.default_rng(8)
    ok = True
    for key in ((2, 2, 2), (3, 1, 2), (5, 1, 2), (2, 4, 2), (2, 4, 3)):
        T = get_tower(*key)
        F = T.F
        xs = np.arange(F.order) if F.order <= 256 else rng.integers(0, F.order, 256)
        done = 0
        while done < 100:
            basis = rng.integers(1, F.order, T.t).tolist()
            try:
                pair = T.dual_basis(basis)
            except ValueError:
                continue  # dependent draw
            done += 1
            for i, u in enumerate(pair.basis):
                for j, d in enumerate(pair.dual):
                    ok &= T.trace(F.mul(u, d)) == (i == j)
            acc = np.zeros_like(xs)
            for u, d in zip(pair.basis, pair.dual):
                acc = F.vadd(acc, F.vmul(T.vtrace(F.vmul(u, xs)), d))
            ok &= bool(np.array_equal(acc, xs))
    record(8, "dual-basis suite", ok, time.perf_counter() - start, 10)


def _error_patterns(F, n, w_max):
    rows = []
    for w in range(w_max + 1):
        for pos in itertools.combinations(range(n), w):
            for vals in itertools.product(range(1, F.order), repeat=w):
                e = [0] * n
                for j, v in zip(pos, vals):
                    e[j] = v
                rows.append(e)
    return np.array(rows, dtype=np.int64)


def _check_against_brute_force(code, codewords, received, radius):
    disagreements = 0
    for chunk in range(0, len(received), 4096):
        R = received[chunk: chunk + 4096]
        dist = np.count_nonzero(R[:, None, :] != codewords[None, :, :], axis=2)
        nearest = dist.argmin(axis=1)
        for r, idx, dmin in zip(R.tolist(), nearest.tolist(), dist.min(axis=1).tolist()):
            f = bw_decode(code, r, radius)
            expect = codewords[idx].tolist() if dmin <= radius else None
            got = None if f is None else encode(code, f)
            disagreements += got != expect
    return disagreements


def test_09_bw_oracle():
    start = time.perf_counter()
    F = get_tower(3, 1, 2).F
    rng = np.random.default_rng(9)
    checked = disagreements = 0
    # k = 1: every received word within the radius; k >= 2: every error pattern
    # around sampled codewords
    for k, samples in ((1, None), (2, 3), (3, 2), (4, 2)):
        code = rs_code(F, range(1, 9), k)
        radius = (8 - k) // 2
        msgs = np.array(list(itertools.product(range(9), repeat=k)), dtype=np.int64)
        codewords = np.array([encode(code, m.tolist()) for m in msgs], dtype=np.int64)
        E = _error_patterns(F, 8, radius)
        centres = codewords if samples is None else codewords[rng.choice(len(codewords), samples,
                                                                           replace=False)]
        for c in centres:
            received = F.vadd(c[None, :], E)
            disagreements += _check_against_brute_force(code, codewords, received, radius)
            checked += len(received)
    record(9, "BW vs nearest-codeword brute force", disagreements == 0,
           time.perf_counter() - start, 300,
           f"[{checked} received words, {disagreements} disagreements]")


def test_10_modified_gs():
    start = time.perf_counter()
    T = get_tower(5, 1, 2)
    ok = True
    detail = []
    for k, e in GF25_GS.items():
        tc = build_trace_code(make_scheme(T, k))
        rng = np.random.default_rng(100 + k)
        hits = 0
        for _ in range(10_000):
            f = rng.integers(0, T.q, k).tolist()
            word = traces_of(tc.scheme, f)
            bad = corrupt(rng, word, e, 0, T.qB, T.B)
            out = modified_gs_decode(tc, bad, mu=1)
            ok &= len(out) <= 1 and (not out or out[0] == word)
            hits += out == [word]
        ok &= hits == 10_000
        detail.append(f"k={k} e={e}: {hits}/10000")
    record(10, "modified GS uniqueness", ok, time.perf_counter() - start, 300,
           "[" + "; ".join(detail) + "]")


def test_11_monomial_census():
    start = time.perf_counter()
    ok = True
    grid = np.arange(201)
    for Delta in range(1, 31):
        # weighted degree of every pair (a, b) with a, b <= 200, then a running count
        s = (grid[:, None] + Delta * grid[None, :]).ravel()
        census = np.cumsum(np.bincount(s[s <= 200], minlength=201))
        ok &= all(monomial_count(d, Delta) == census[d] for d in range(201))
    record(11, "monomial count vs census", ok, time.perf_counter() - start, 1)
