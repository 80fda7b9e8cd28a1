import itertools

import numpy as np
import pytest

from rsrepair import poly
from rsrepair.gf_tower import get_tower
from rsrepair.rs_core import GrsCode, bw_decode, dual_multipliers, encode, grs_dual, rs_code

F9 = get_tower(3, 1, 2).F
F25 = get_tower(5, 1, 2).F


def test_validation():
    with pytest.raises(ValueError, match="distinct"):
        GrsCode(F9, (1, 1, 2), 1)
    with pytest.raises(ValueError, match="nonzero"):
        GrsCode(F9, (1, 2), 1, (1, 0))
    with pytest.raises(ValueError, match="dim"):
        GrsCode(F9, (1, 2), 3)
    with pytest.raises(ValueError, match="one multiplier"):
        GrsCode(F9, (1, 2), 1, (1,))
    code = rs_code(F9, range(1, 9), 3)
    assert code.multipliers == (1,) * 8 and code.distance == 6


def test_encode_rejects_high_degree():
    with pytest.raises(ValueError):
        encode(rs_code(F9, range(1, 9), 2), [1, 2, 3])


def test_mds_distance_exhaustive():
    code = GrsCode(F9, tuple(range(1, 9)), 2, tuple(range(1, 9)))
    weights = [sum(1 for c in encode(code, f) if c)
               for f in itertools.product(range(9), repeat=2) if any(f)]
    assert min(weights) == code.distance == 7


def test_dual_multipliers_definition():
    pts = [1, 3, 5, 7]
    lam = dual_multipliers(F25, pts)
    for j, a in enumerate(pts):
        prod = 1
        for i, b in enumerate(pts):
            if i != j:
                prod = F25.mul(prod, F25.sub(a, b))
        assert F25.mul(lam[j], prod) == 1


@pytest.mark.parametrize("dim", [1, 4, 10, 23])
def test_grs_dual_orthogonal(dim):
    rng = np.random.default_rng(dim)
    v = rng.integers(1, 25, 24).tolist()
    code = GrsCode(F25, tuple(range(1, 25)), dim, tuple(v))
    dual = grs_dual(code)
    assert dual.dim == 24 - dim
    for i in range(dim):
        c = encode(code, [0] * i + [1])
        for j in range(dual.dim):
            d = encode(dual, [0] * j + [1])
            assert int(F25.vdot(np.array(c), np.array(d))) == 0
    assert grs_dual(dual).multipliers == code.multipliers


def test_grs_dual_of_full_space():
    with pytest.raises(ValueError):
        grs_dual(rs_code(F9, range(1, 9), 8))


@pytest.mark.parametrize("dim", [1, 3, 6, 10])
def test_bw_corrects_to_radius(dim):
    rng = np.random.default_rng(10 + dim)
    code = GrsCode(F25, tuple(range(1, 25)), dim, tuple(rng.integers(1, 25, 24).tolist()))
    radius = (24 - dim) // 2
    for _ in range(30):
        f = poly.trim(rng.integers(0, 25, dim).tolist())
        word = encode(code, f)
        for j in rng.choice(24, radius, replace=False).tolist():
            word[j] = F25.add(word[j], int(rng.integers(1, 25)))
        assert bw_decode(code, word, radius) == f


def test_bw_with_erasures():
    rng = np.random.default_rng(7)
    code = rs_code(F25, range(1, 25), 5)
    for s in range(0, 20, 3):
        e = (24 - s - 5) // 2
        f = poly.trim(rng.integers(0, 25, 5).tolist())
        word = encode(code, f)
        pos = rng.choice(24, s + e, replace=False).tolist()
        for j in pos[:e]:
            word[j] = F25.add(word[j], 1)
        for j in pos[e:]:
            word[j] = None
        assert bw_decode(code, word, e) == f


def test_bw_beyond_radius_returns_none_or_other_codeword():
    code = rs_code(F9, range(1, 9), 4)
    word = [1, 2, 3, 4, 5, 6, 7, 8]  # far from the code in general
    f = bw_decode(code, word, 2)
    if f is not None:
        cw = encode(code, f)
        assert sum(1 for a, b in zip(cw, word) if a != b) <= 2


def test_bw_rejects_large_radius():
    code = rs_code(F9, range(1, 9), 4)
    with pytest.raises(ValueError):
        bw_decode(code, [0] * 8, 3)
    with pytest.raises(ValueError):
        bw_decode(code, [0] * 7, 1)
    with pytest.raises(ValueError):
        bw_decode(code, [None] * 3 + [0] * 5, 1)
