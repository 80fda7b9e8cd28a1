import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rsrepair import poly
from rsrepair.bounds import bounds_report
from rsrepair.gf_tower import get_tower
from rsrepair.list_decode import (best_gs_params, gs_params, hasse_derivative, interpolate,
                                  min_delta, modified_gs_decode, monomial_count, monomials,
                                  substitute, y_roots)
from rsrepair.trace_repair import build_trace_code, make_scheme, membership, traces_of

GF4096_GS = [(1919, 1), (1919, 1), (1791, 1), (1707, 1), (1679, 1), (1651, 3), (1587, 473),
             (1386, 424), (1199, 406), (1023, 279), (857, 277), (699, 243), (548, 198),
             (404, 496), (264, 120), (130, 106)]


def census(delta, Delta):
    return sum(1 for b in range(delta + 1) for a in range(delta + 1) if a + Delta * b <= delta)


@given(st.integers(0, 200), st.integers(1, 30))
def test_monomial_count_census(delta, Delta):
    assert monomial_count(delta, Delta) == census(delta, Delta)
    assert len(monomials(delta, Delta)) == census(delta, Delta)


def test_monomial_count_rejects():
    with pytest.raises(ValueError):
        monomial_count(-1, 2)
    with pytest.raises(ValueError):
        monomial_count(3, 0)


@pytest.mark.parametrize("n,Delta,mu", [(24, 4, 1), (24, 5, 2), (15, 4, 3), (4095, 1536, 5)])
def test_min_delta_is_minimal(n, Delta, mu):
    d = min_delta(n, Delta, mu)
    target = Fraction(n * mu * (mu + 1), 2)
    assert monomial_count(d, Delta) > target
    assert d == 0 or monomial_count(d - 1, Delta) <= target


@pytest.mark.parametrize("k", range(1, 17))
def test_gf4096_gs_column(k):
    r = bounds_report(2, 4, 3, k)
    gs = best_gs_params(r.n, r.delta, r.d_star)
    assert (gs.e_capped, gs.mu) == GF4096_GS[k - 1]


def test_gf25_gs_column():
    expect = {1: (9, 1), 2: (9, 1), 3: (6, 1), 4: (4, 1), 5: (1, 1)}
    for k in range(1, 10):
        r = bounds_report(5, 1, 2, k)
        gs = best_gs_params(r.n, r.delta, r.d_star)
        assert (None if gs is None else (gs.e_capped, gs.mu)) == expect.get(k)


def test_gs_param_errors():
    with pytest.raises(ValueError):
        gs_params(0, 1, 1, 3)
    with pytest.raises(ValueError):
        best_gs_params(24, 4, 20, mu_max=0)
    p = gs_params(24, 4, 1, 20)
    assert (p.delta, p.e_raw, p.e_capped) == (12, 12, 9)


def test_interpolation_multiplicity():
    F = get_tower(3, 1, 2).F
    rng = np.random.default_rng(0)
    pts = [(x, int(rng.integers(0, 9))) for x in range(1, 9)]
    mu, Delta = 2, 2
    delta = min_delta(len(pts), Delta, mu)
    Q = interpolate(F, pts, mu, delta, Delta)
    assert any(any(row) for row in Q)
    for x, y in pts:
        for r in range(mu):
            for s in range(mu - r):
                assert hasse_derivative(F, Q, r, s, x, y) == 0


def test_interpolate_needs_enough_monomials():
    F = get_tower(3, 1, 2).F
    with pytest.raises(ValueError):
        interpolate(F, [(1, 1), (2, 2)], 1, 0, 1)


def test_y_roots_planted():
    F = get_tower(5, 1, 2).F
    rng = np.random.default_rng(1)
    for _ in range(10):
        roots = [poly.trim(rng.integers(0, 25, 3).tolist()) for _ in range(3)]
        Q = [[1]]
        for f in roots:
            # multiply by (y - f(x))
            nxt = [[] for _ in range(len(Q) + 1)]
            for b, row in enumerate(Q):
                nxt[b + 1] = poly.add(F, nxt[b + 1], row)
                nxt[b] = poly.sub(F, nxt[b], poly.mul(F, row, f))
            Q = nxt
        extra = [1, 2, 0, 4]  # a factor free of y
        Q = [poly.mul(F, row, extra) for row in Q]
        got = y_roots(F, Q, 2)
        assert sorted(map(tuple, got)) == sorted(set(map(tuple, roots)))
        for f in got:
            assert substitute(F, Q, f) == []


def test_y_roots_rejects_zero():
    F = get_tower(5, 1, 2).F
    with pytest.raises(ValueError):
        y_roots(F, [[]], 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_modified_gs_at_capped_radius(k):
    T = get_tower(5, 1, 2)
    tc = build_trace_code(make_scheme(T, k))
    r = bounds_report(5, 1, 2, k)
    e = best_gs_params(r.n, r.delta, r.d_star).e_capped
    rng = np.random.default_rng(k)
    for _ in range(20):
        word = traces_of(tc.scheme, rng.integers(0, 25, k).tolist())
        bad = list(word)
        for j in rng.choice(24, e, replace=False).tolist():
            bad[j] = (bad[j] + int(rng.integers(1, 5))) % 5
        assert modified_gs_decode(tc, bad) == [word]


def test_modified_gs_mu2():
    T = get_tower(2, 2, 2)
    tc = build_trace_code(make_scheme(T, 2))
    r = bounds_report(2, 2, 2, 2)
    params = gs_params(r.n, r.delta, 2, r.d_star)
    rng = np.random.default_rng(3)
    e = min(params.e_capped, params.e_raw - 1)
    for _ in range(10):
        word = traces_of(tc.scheme, rng.integers(0, 16, 2).tolist())
        bad = list(word)
        for j in rng.choice(15, e, replace=False).tolist():
            bad[j] ^= int(rng.integers(1, 4))
        out = modified_gs_decode(tc, bad, mu=2)
        assert out == [word] and membership(tc, out[0])


def test_modified_gs_rejects_erasures():
    tc = build_trace_code(make_scheme(get_tower(5, 1, 2), 1))
    with pytest.raises(ValueError):
        modified_gs_decode(tc, [None] * 24)


def test_modified_gs_output_sorted_far_word():
    tc = build_trace_code(make_scheme(get_tower(5, 1, 2), 3))
    word = [i % 5 for i in range(24)]
    out = modified_gs_decode(tc, word)
    assert len(out) <= 1
    for w in out:
        assert membership(tc, w)
