"""Univariate polynomials over a finite field.

A polynomial is a list of field elements (canonical int indices), lowest
degree first, with no trailing zeros; the zero polynomial is ``[]``.
Every function takes the coefficient field as its first argument.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

Poly = list


def trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence[int]) -> int:
    """Degree of ``a``; -1 for the zero polynomial."""
    return len(trim(a)) - 1


def add(field, a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.add(out[i], c)
    return trim(out)


def neg(field, a: Sequence[int]) -> Poly:
    return [field.neg(c) for c in a]


def sub(field, a: Sequence[int], b: Sequence[int]) -> Poly:
    return add(field, a, neg(field, b))


def scale(field, a: Sequence[int], c: int) -> Poly:
    if c == 0:
        return []
    return trim([field.mul(x, c) for x in a])


def shift(a: Sequence[int], k: int) -> Poly:
    """Multiply by x**k."""
    a = trim(a)
    return [0] * k + a if a else []


def mul(field, a: Sequence[int], b: Sequence[int]) -> Poly:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = field.add(out[i + j], field.mul(x, y))
    return trim(out)


def divmod_(field, a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = trim(a)
    if len(rem) < len(b):
        return [], rem
    lead_inv = field.inv(b[-1])
    quot = [0] * (len(rem) - len(b) + 1)
    for shift_ in range(len(rem) - len(b), -1, -1):
        c = rem[shift_ + len(b) - 1]
        if c == 0:
            continue
        c = field.mul(c, lead_inv)
        quot[shift_] = c
        for j, y in enumerate(b):
            if y:
                rem[shift_ + j] = field.sub(rem[shift_ + j], field.mul(c, y))
    return trim(quot), trim(rem[: len(b) - 1])


def mod(field, a: Sequence[int], b: Sequence[int]) -> Poly:
    return divmod_(field, a, b)[1]


def monic(field, a: Sequence[int]) -> Poly:
    a = trim(a)
    if not a:
        return a
    return scale(field, a, field.inv(a[-1]))


def gcd(field, a: Sequence[int], b: Sequence[int]) -> Poly:
    """Monic greatest common divisor."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(field, a, b)
    return monic(field, a)


def powmod(field, a: Sequence[int], e: int, m: Sequence[int]) -> Poly:
    result: Poly = [1]
    base = mod(field, a, m)
    while e:
        if e & 1:
            result = mod(field, mul(field, result, base), m)
        e >>= 1
        if e:
            base = mod(field, mul(field, base, base), m)
    return mod(field, result, m)


def evaluate(field, a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = field.add(field.mul(acc, x), c)
    return acc


def evaluate_many(field, a: Sequence[int], xs) -> np.ndarray:
    """Horner evaluation at every point of the array ``xs``."""
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in reversed(trim(a)):
        acc = field.vadd(field.vmul(acc, xs), c)
    return acc


def derivative(field, a: Sequence[int]) -> Poly:
    return trim([field.mul(field.from_int(i), c) for i, c in enumerate(a)][1:])


def interpolate(field, xs: Sequence[int], ys: Sequence[int]) -> Poly:
    """Lagrange interpolation through distinct points ``xs``."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must be distinct")
    result: Poly = []
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        if yj == 0:
            continue
        basis: Poly = [1]
        denom = 1
        for i, xi in enumerate(xs):
            if i != j:
                basis = mul(field, basis, [field.neg(xi), 1])
                denom = field.mul(denom, field.sub(xj, xi))
        result = add(field, result, scale(field, basis, field.div(yj, denom)))
    return result
