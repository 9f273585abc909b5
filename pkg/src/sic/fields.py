"""Exact arithmetic in small finite fields GF(p^m).

Field elements are plain integers in [0, q).  For extension fields the
base-p digits of an element, least significant digit first, are the
coefficients of its polynomial representative.  Arithmetic is served from
precomputed q-by-q tables, so each field instance is immutable after
construction and safe to share between threads.

The reducing modulus of an extension field is canonical: the
lexicographically smallest (coefficients compared low degree first) monic
irreducible polynomial of degree m over GF(p), found by exhaustive search
with trial division.  Two constructions of the same order therefore agree
bit for bit.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import DivisionByZero, NotPrimePower, ParameterOutOfRange

# Table-based arithmetic keeps every op O(1); cap the order so the q*q
# tables stay small.  Everything in this package needs q <= 64.
MAX_ORDER = 4096


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p**m and p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    p = _smallest_prime_factor(q)
    m = 0
    n = q
    while n % p == 0:
        n //= p
        m += 1
    return (p, m) if n == 1 else None


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_divisible(num: list[int], den: list[int], p: int) -> bool:
    # den is monic; plain long division, return True when remainder is zero
    rem = list(num)
    dd = len(den) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            for j in range(dd + 1):
                rem[i - dd + j] = (rem[i - dd + j] - c * den[j]) % p
    return all(c == 0 for c in rem)


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Irreducibility by trial division against every monic polynomial of
    degree 1..m//2, which is exact at the degrees used here.
    """
    divisors = []
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisors.append(list(tail) + [1])
    for low in itertools.product(range(p), repeat=m):
        cand = list(low) + [1]
        if all(not _poly_divisible(cand, d, p) for d in divisors):
            return tuple(cand)
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")  # unreachable


class FiniteField:
    """Arithmetic context for GF(q), q = p^m a prime power.

    Elements are the integers 0..q-1; 0 and 1 are the additive and
    multiplicative identities.  `modulus` is None for prime fields and the
    canonical monic irreducible coefficient tuple (low degree first)
    otherwise.
    """

    def __init__(self, q: int):
        pm = is_prime_power(q)
        if pm is None:
            raise NotPrimePower(f"{q} is not a prime power")
        if q > MAX_ORDER:
            raise ParameterOutOfRange(f"field order {q} > {MAX_ORDER} unsupported")
        self.p, self.m = pm
        self.q = q
        self.modulus = None if self.m == 1 else _smallest_irreducible(self.p, self.m)
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        if m == 1:
            a = np.arange(q, dtype=np.int64)
            add = (a[:, None] + a[None, :]) % q
            mul = (a[:, None] * a[None, :]) % q
        else:
            powers = p ** np.arange(m, dtype=np.int64)
            digits = (np.arange(q, dtype=np.int64)[:, None] // powers) % p  # (q, m)
            add = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers
            mul = np.zeros((q, q), dtype=np.int64)
            mod = list(self.modulus)
            digit_lists = digits.tolist()
            enc = powers.tolist()
            for x in range(q):
                dx = digit_lists[x]
                for y in range(x, q):
                    prod = _poly_mul(dx, digit_lists[y], p)
                    # reduce mod the monic modulus
                    for i in range(len(prod) - 1, m - 1, -1):
                        c = prod[i]
                        if c:
                            for j in range(m + 1):
                                prod[i - m + j] = (prod[i - m + j] - c * mod[j]) % p
                    val = sum(prod[j] * enc[j] for j in range(m))
                    mul[x, y] = mul[y, x] = val
        self.add_table = np.ascontiguousarray(add, dtype=np.int16)
        self.mul_table = np.ascontiguousarray(mul, dtype=np.int16)
        self._neg_table = np.argmax(self.add_table == 0, axis=1).astype(np.int16)
        inv = np.full(q, -1, dtype=np.int16)
        for x in range(1, q):
            hits = np.flatnonzero(self.mul_table[x] == 1)
            inv[x] = hits[0]
        self._inv_table = inv
        for t in (self.add_table, self.mul_table, self._neg_table, self._inv_table):
            t.setflags(write=False)

    def _check(self, *elems: int) -> None:
        for a in elems:
            if not 0 <= a < self.q:
                raise ParameterOutOfRange(f"{a} is not an element of GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        self._check(a)
        return int(self._neg_table[a])

    def sub(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.add_table[a, self._neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        return int(self._inv_table[a])

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            e >>= 1
        return result

    def elements(self) -> range:
        """All q elements in value order."""
        return range(self.q)

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q})"
