"""Arithmetic in the field tower GF(p) < B = GF(p^m) < F = GF(p^(mt)).

Elements are plain ints: the canonical index of an element is the
mixed-radix value of its coefficient vector, lowest coordinate first.  An
element of F with B-coordinates (b_0, ..., b_{t-1}) has index
``sum(b_j * |B|**j)``, and each b_j is itself the base-p value of its
GF(p)-coordinates.  Consequently B sits inside F as the indices ``0..|B|-1``
and the embedding B -> F is the identity on indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import poly

#: Largest |F| accepted by :func:`make_tower` unless overridden.
SIZE_CAP = 2**24
#: Fields up to this order multiply through log/antilog tables.
LOG_TABLE_LIMIT = 2**16
#: Fields up to this order also keep full addition/multiplication tables.
FULL_TABLE_LIMIT = 2**10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class _Field:
    """Operations shared by prime and extension fields.

    Addition never needs the modulus: it is digit-wise addition of the
    base-p expansion of the indices.
    """

    p: int
    order: int
    ndigits: int
    _add_table: list | None = None
    _add_np: np.ndarray | None = None

    zero = 0
    one = 1

    def elements(self) -> range:
        return range(self.order)

    def __contains__(self, x) -> bool:
        return isinstance(x, (int, np.integer)) and 0 <= x < self.order

    def __len__(self) -> int:
        return self.order

    def from_int(self, i: int) -> int:
        """Image of the integer ``i`` in the prime subfield."""
        return i % self.p

    def _digitwise(self, a, b, sign: int):
        p = self.p
        out = 0 * a + 0 * b
        w = 1
        for _ in range(self.ndigits):
            out = out + ((a // w % p + sign * (b // w % p)) % p) * w
            w *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digitwise(a, b, 1)

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self._digitwise(0, a, -1)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self._add_np is not None:
            return self._add_np[a, b]
        return self._digitwise(a, b, 1)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return self._digitwise(np.zeros_like(a), a, -1)

    def vsub(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.asarray(a, dtype=np.int64) ^ np.asarray(b, dtype=np.int64)
        return self.vadd(a, self.vneg(b))

    def vsum(self, a, axis=None) -> np.ndarray:
        """Field sum along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        p = self.p
        out = 0
        w = 1
        for _ in range(self.ndigits):
            out = out + ((a // w % p).sum(axis=axis) % p) * w
            w *= p
        return np.asarray(out, dtype=np.int64)

    def vdot(self, a, b, axis=-1) -> np.ndarray:
        return self.vsum(self.vmul(a, b), axis=axis)

    def _build_add_tables(self) -> None:
        if self.p == 2 or self.order > FULL_TABLE_LIMIT:
            return
        idx = np.arange(self.order, dtype=np.int64)
        table = self._digitwise(idx[:, None], idx[None, :], 1)
        self._add_np = table
        self._add_table = table.tolist()


class PrimeField(_Field):
    """GF(p) with elements 0..p-1."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.order = p
        self.ndigits = 1
        self.degree = 1

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def vadd(self, a, b):
        return (np.asarray(a, dtype=np.int64) + b) % self.p

    def vneg(self, a):
        return -np.asarray(a, dtype=np.int64) % self.p

    def vsub(self, a, b):
        return (np.asarray(a, dtype=np.int64) - b) % self.p

    def vmul(self, a, b):
        return np.asarray(a, dtype=np.int64) * b % self.p

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a % self.p == 0):
            raise ZeroDivisionError("inverse of zero")
        return np.vectorize(lambda x: pow(int(x), -1, self.p), otypes=[np.int64])(a)

    def vsum(self, a, axis=None):
        return np.asarray(a, dtype=np.int64).sum(axis=axis) % self.p

    def coords(self, x: int) -> list[int]:
        return [x]


class ExtensionField(_Field):
    """``base[y] / (modulus)`` for a monic irreducible ``modulus`` over ``base``."""

    def __init__(self, base: _Field, modulus: Sequence[int]):
        modulus = poly.trim(modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.p = base.p
        self.order = base.order**self.degree
        self.ndigits = base.ndigits * self.degree
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._mul_np: np.ndarray | None = None
        if self.order <= LOG_TABLE_LIMIT:
            self._build_log_tables()
        self._build_add_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.ndigits})"

    # coordinates over the base field

    def coords(self, x: int) -> list[int]:
        q = self.base.order
        out = []
        for _ in range(self.degree):
            x, r = divmod(x, q)
            out.append(r)
        return out

    def from_coords(self, cs: Sequence[int]) -> int:
        q = self.base.order
        x = 0
        for c in reversed(cs):
            x = x * q + c
        return x

    # schoolbook multiplication, used to seed the tables and above the cap

    def _mul_school(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        k = self.base
        prod = poly.mul(k, self.coords(a), self.coords(b))
        rem = poly.mod(k, prod, self.modulus)
        return self.from_coords(rem + [0] * (self.degree - len(rem)))

    def _pow_school(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_school(result, base)
            base = self._mul_school(base, base)
            e >>= 1
        return result

    def _build_log_tables(self) -> None:
        q1 = self.order - 1
        gen = None
        if q1 == 1:
            gen = 1
        else:
            factors = prime_factors(q1)
            for g in range(2, self.order):
                if all(self._pow_school(g, q1 // r) != 1 for r in factors):
                    gen = g
                    break
        assert gen is not None, "modulus is not irreducible"
        exp = [0] * (2 * q1)
        log = [0] * self.order
        x = 1
        for i in range(q1):
            exp[i] = x
            exp[i + q1] = x
            log[x] = i
            x = self._mul_school(x, gen)
        if x != 1 or len(set(exp[:q1])) != q1:
            raise ValueError("modulus is not irreducible")
        self.generator = gen
        self._exp, self._log = exp, log
        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)
        if self.order <= FULL_TABLE_LIMIT:
            idx = np.arange(self.order, dtype=np.int64)
            self._mul_np = self._vmul_log(idx[:, None], idx[None, :])

    def _vmul_log(self, a, b):
        r = self._exp_np[self._log_np[a] + self._log_np[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    # field operations

    def mul(self, a: int, b: int) -> int:
        if self._exp is None:
            return self._mul_school(a, b)
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is None:
            return self._pow_school(a, self.order - 2)
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        if self._exp is None:
            if e < 0:
                a, e = self.inv(a), -e
            return self._pow_school(a, e % (self.order - 1))
        return self._exp[self._log[a] * e % (self.order - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        if self._log is None:
            raise NotImplementedError("no log table above LOG_TABLE_LIMIT")
        return self._log[a]

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._mul_np is not None:
            return self._mul_np[a, b]
        if self._exp is not None:
            return self._vmul_log(a, b)
        return np.frompyfunc(self._mul_school, 2, 1)(a, b).astype(np.int64)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        if self._exp is None:
            return np.frompyfunc(self.inv, 1, 1)(a).astype(np.int64)
        return self._exp_np[(self.order - 1 - self._log_np[a]) % (self.order - 1)]

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self._exp is None:
            return np.frompyfunc(lambda x: self.pow(x, e), 1, 1)(a).astype(np.int64)
        if e < 0 and np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        r = self._exp_np[self._log_np[a] * e % (self.order - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, r)


def is_irreducible(field: _Field, f: Sequence[int]) -> bool:
    """Ben-Or test: no factor of degree <= deg(f)/2 divides ``f``."""
    f = poly.monic(field, f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(d // 2):
        h = poly.powmod(field, h, field.order, f)
        g = poly.gcd(field, poly.sub(field, h, x), f)
        if len(g) > 1:
            return False
    return True


def minimal_irreducible(field: _Field, degree: int) -> tuple[int, ...]:
    """The monic irreducible of the given degree whose lower coefficients,
    read as base-|field| digits with the constant term least significant,
    form the smallest integer."""
    q = field.order
    for code in range(q**degree):
        low = []
        c = code
        for _ in range(degree):
            c, r = divmod(c, q)
            low.append(r)
        cand = low + [1]
        if is_irreducible(field, cand):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class BasisPair:
    """A B-basis of F together with its trace-dual basis."""

    basis: tuple[int, ...]
    dual: tuple[int, ...]


class Tower:
    """The tower GF(p) < B < F with [B:GF(p)] = m and [F:B] = t.

    Instances are immutable after construction; use :func:`make_tower`.
    """

    def __init__(self, p: int, m: int, t: int, mod_B, mod_F, gfp, B, F):
        self.p, self.m, self.t = p, m, t
        self.mod_B = tuple(mod_B)
        self.mod_F = tuple(mod_F)
        self.gfp = gfp
        self.B = B
        self.F = F
        # Tr(y^j) for the power basis of F over B; trace is B-linear
        self._trace_of_power = [self._trace_direct(u) for u in self.power_basis()]

    def __repr__(self) -> str:
        return f"Tower(p={self.p}, m={self.m}, t={self.t})"

    @property
    def key(self) -> str:
        return f"{self.p},{self.m},{self.t}"

    @property
    def q(self) -> int:
        """|F|."""
        return self.F.order

    @property
    def qB(self) -> int:
        """|B|."""
        return self.B.order

    # subfield plumbing

    def embed(self, s: int) -> int:
        if not 0 <= s < self.qB:
            raise ValueError(f"{s} is not an element of B")
        return s

    def project(self, x: int) -> int:
        if not 0 <= x < self.qB:
            raise ValueError(f"element {x} does not lie in the subfield B")
        return x

    def in_subfield(self, x: int) -> bool:
        return 0 <= x < self.qB

    def coords(self, x: int) -> list[int]:
        return self.F.coords(x) if self.t > 1 else [x]

    def from_coords(self, cs: Sequence[int]) -> int:
        return self.F.from_coords(cs) if self.t > 1 else cs[0]

    def frobenius(self, x: int) -> int:
        """x -> x^|B|, the generator of Gal(F/B)."""
        return self.F.pow(x, self.qB)

    # traces

    def _trace_direct(self, x: int) -> int:
        F = self.F
        acc, y = 0, x
        for _ in range(self.t):
            acc = F.add(acc, y)
            y = F.pow(y, self.qB)
        return self.project(acc)

    def trace(self, x: int) -> int:
        """Tr_{F/B}(x) as an element of B."""
        B = self.B
        acc = 0
        for b, tau in zip(self.coords(x), self._trace_of_power):
            if b:
                acc = B.add(acc, B.mul(b, tau))
        return acc

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Tr_{F/B} of every element of F, indexed by element."""
        B = self.B
        idx = np.arange(self.q, dtype=np.int64)
        acc = np.zeros_like(idx)
        for j, tau in enumerate(self._trace_of_power):
            b = idx // self.qB**j % self.qB
            acc = B.vadd(acc, B.vmul(b, tau))
        return acc

    def vtrace(self, xs) -> np.ndarray:
        return self.trace_table[np.asarray(xs, dtype=np.int64)]

    def sub_trace(self, b: int) -> int:
        """Tr_{B/GF(p)}(b) as a residue mod p."""
        B = self.B
        acc, y = 0, b
        for _ in range(self.m):
            acc = B.add(acc, y)
            y = B.pow(y, self.p)
        assert acc < self.p
        return acc

    def abs_trace(self, x: int) -> int:
        """Tr_{F/GF(p)}(x), summing the mt Frobenius conjugates directly."""
        F = self.F
        acc, y = 0, x
        for _ in range(self.m * self.t):
            acc = F.add(acc, y)
            y = F.pow(y, self.p)
        if acc >= self.p:
            raise AssertionError("absolute trace left the prime field")
        return acc

    # bases

    def power_basis(self) -> tuple[int, ...]:
        """(1, g, ..., g^(t-1)) for the root g of mod_F."""
        return tuple(self.qB**j for j in range(self.t))

    def dual_basis(self, basis: Sequence[int]) -> BasisPair:
        return dual_basis(self, basis)


def make_tower(p: int, m: int, t: int, cap: int = SIZE_CAP) -> Tower:
    """Build the deterministic tower for ``(p, m, t)``.

    Both moduli are the lexicographically smallest monic irreducibles, so the
    same arguments always give the same element indexing.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1 or t < 1:
        raise ValueError("m and t must be positive")
    if p ** (m * t) > cap:
        raise ValueError(f"|F| = {p}^{m * t} exceeds the size cap {cap}")
    gfp = PrimeField(p)
    mod_B = minimal_irreducible(gfp, m)
    B = ExtensionField(gfp, mod_B)
    mod_F = minimal_irreducible(B, t)
    F = ExtensionField(B, mod_F) if t > 1 else B
    return Tower(p, m, t, mod_B, mod_F, gfp, B, F)


_TOWERS: dict[tuple[int, int, int], Tower] = {}


def get_tower(p: int, m: int, t: int) -> Tower:
    """Cached :func:`make_tower` with the default cap."""
    key = (p, m, t)
    if key not in _TOWERS:
        _TOWERS[key] = make_tower(p, m, t)
    return _TOWERS[key]


def dual_basis(tower: Tower, basis: Sequence[int]) -> BasisPair:
    """Trace-dual of a B-basis: Tr(u_i * dual_j) = 1 if i == j else 0."""
    from .linalg import inverse, rank

    basis = tuple(int(u) for u in basis)
    t = tower.t
    if len(basis) != t:
        raise ValueError(f"a basis of F over B has {t} elements")
    B, F = tower.B, tower.F
    coord_rows = np.array([tower.coords(u) for u in basis], dtype=np.int64)
    if rank(B, coord_rows) < t:
        raise ValueError("basis elements are linearly dependent over B")
    gram = np.array([[tower.trace(F.mul(ui, uj)) for uj in basis] for ui in basis],
                    dtype=np.int64)
    ginv = inverse(B, gram)
    dual = []
    for j in range(t):
        acc = 0
        for l in range(t):
            acc = F.add(acc, F.mul(int(ginv[l, j]), basis[l]))
        dual.append(acc)
    return BasisPair(basis, tuple(dual))
