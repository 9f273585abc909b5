"""Exhaustive and certificate checkers for combinatorial code properties.

Every exhaustive checker enumerates candidate tuples in a fixed order and
reports the first counterexample it meets, so results (including
witnesses) are identical across runs:

* subsets are ordered lexicographically by their sorted column indices,
  e.g. (0,) < (0,1) < (0,1,2) < (0,2) < (1,);
* pairs of subsets are ordered by the outer subset first, then the inner;
* within a tuple, the distinguished element is scanned in ascending order.

Checkers refuse inputs whose enumeration would exceed a row-scan budget
(tuple count times matrix length, default 10^9) by raising BudgetExceeded
instead of running unbounded.  Column indices in reports are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .codes import BinaryCode, QaryCode
from .errors import (
    BudgetExceeded,
    NotConstantWeight,
    ParameterOutOfRange,
    TooFewColumns,
)

DEFAULT_BUDGET = 1_000_000_000


@dataclass(frozen=True)
class OutcomeFunction:
    """Saturating outcome map: intersection size n yields values[min(n, l)].

    values has l+1 entries and every non-saturated label must differ from
    the saturated one, values[n] != values[l] for n < l.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) < 2:
            raise ParameterOutOfRange("outcome function needs a threshold l >= 1")
        last = self.values[-1]
        if any(v == last for v in self.values[:-1]):
            raise ParameterOutOfRange("non-saturated outcome equals the saturated one")

    @property
    def l(self) -> int:
        return len(self.values) - 1

    @property
    def is_threshold(self) -> bool:
        """All non-saturated labels coincide, i.e. only 'reached l' is visible."""
        return all(v == self.values[0] for v in self.values[:-1])

    @classmethod
    def threshold(cls, u: int) -> "OutcomeFunction":
        """Binary map: 0 below u hits, 1 at u or more."""
        if u < 1:
            raise ParameterOutOfRange("threshold must be >= 1")
        return cls(values=(0,) * u + (1,))

    @classmethod
    def saturating(cls, l: int) -> "OutcomeFunction":
        """Counts hits exactly up to l."""
        if l < 1:
            raise ParameterOutOfRange("saturation level must be >= 1")
        return cls(values=tuple(range(l + 1)))

    @classmethod
    def quantizer(cls, breaks: tuple[int, ...]) -> "OutcomeFunction":
        """Adder followed by a quantizer with range ends 0 < b_1 < ... < b_k."""
        if not breaks or any(b <= a for a, b in zip((0,) + tuple(breaks), breaks)):
            raise ParameterOutOfRange("breaks must be strictly increasing positive ints")
        values = [0]
        for n in range(1, breaks[-1] + 1):
            values.append(next(i + 1 for i, b in enumerate(breaks) if n <= b))
        return cls(values=tuple(values))

    def __call__(self, n: int) -> int:
        return self.values[min(n, self.l)]


@dataclass(frozen=True)
class VerificationReport:
    satisfied: bool
    witness: dict | None
    tuples_checked: int


def _bits(X) -> np.ndarray:
    if isinstance(X, BinaryCode):
        return X.bits
    arr = np.asarray(X, dtype=np.uint8)
    if arr.ndim != 2:
        raise ParameterOutOfRange("binary code must be a 2-D matrix")
    return arr


def _column_masks(bits: np.ndarray) -> list[int]:
    n, t = bits.shape
    masks = []
    for j in range(t):
        m = 0
        for i in np.flatnonzero(bits[:, j]):
            m |= 1 << int(i)
        masks.append(m)
    return masks


def subsets_lex(items, lo: int, hi: int):
    """Tuples over `items` with sizes in [lo, hi], lexicographic order."""
    items = tuple(items)
    n = len(items)
    cur: list = []
    if lo == 0:
        yield ()

    def rec(start):
        for idx in range(start, n):
            cur.append(items[idx])
            if len(cur) >= lo:
                yield tuple(cur)
            if len(cur) < hi:
                yield from rec(idx + 1)
            cur.pop()

    if hi >= 1:
        yield from rec(0)


def _check_budget(scans: int, budget: int | None) -> int:
    limit = DEFAULT_BUDGET if budget is None else budget
    if scans > limit:
        raise BudgetExceeded(f"{scans} row scans exceed budget {limit}")
    return limit


def cover_free_scans(t: int, z: int, u: int, N: int) -> int:
    return comb(t, u) * comb(t - u, z) * N


def check_cover_free(X, z: int, u: int, budget: int | None = None) -> VerificationReport:
    """Does every u-subset keep a private row against every disjoint z-subset?

    Satisfied iff for all disjoint (U, Z), |U| = u, |Z| = z, some row is 1
    on all of U and 0 on all of Z.
    """
    bits = _bits(X)
    N, t = bits.shape
    if z < 1 or u < 1 or z + u > t:
        raise ParameterOutOfRange(f"need z, u >= 1 and z + u <= t, got {(z, u, t)}")
    _check_budget(cover_free_scans(t, z, u, N), budget)
    cols = _column_masks(bits)
    full = (1 << N) - 1
    not_cols = [full ^ c for c in cols]
    checked = 0
    for U in combinations(range(t), u):
        mu = full
        for c in U:
            mu &= cols[c]
        rest = [c for c in range(t) if c not in U]
        for Z in combinations(rest, z):
            checked += 1
            acc = mu
            for c in Z:
                acc &= not_cols[c]
                if not acc:
                    break
            if not acc:
                return VerificationReport(False, {"U": U, "Z": Z}, checked)
    return VerificationReport(True, None, checked)


def d_code_scans(t: int, s: int, N: int) -> int:
    return comb(t, s) * (t - s) * N


def check_d_code(X, s: int, l: int, budget: int | None = None,
                 chunk: int | None = None) -> VerificationReport:
    """List-union cover check: satisfied iff for every s-subset S and every
    column j outside S some row has a 1 at j and at most l-1 ones inside S.
    """
    bits = _bits(X)
    N, t = bits.shape
    if not 1 <= l < s < t:
        raise ParameterOutOfRange(f"need 1 <= l < s < t, got {(l, s, t)}")
    _check_budget(d_code_scans(t, s, N), budget)
    if chunk is None:
        chunk = max(1, min(16384, 4_000_000 // (N * s)))
    float_bits = bits.astype(np.float32)
    gen = combinations(range(t), s)
    offset = 0
    while True:
        batch = []
        for S in gen:
            batch.append(S)
            if len(batch) == chunk:
                break
        if not batch:
            break
        arr = np.array(batch, dtype=np.int64)
        sums = bits[:, arr].sum(axis=2, dtype=np.int32)          # (N, c)
        qualifying = (sums <= l - 1).astype(np.float32)          # rows usable per S
        covered = qualifying.T @ float_bits                      # (c, t) counts
        np.put_along_axis(covered, arr, 1.0, axis=1)             # members of S exempt
        bad = covered < 0.5
        if bad.any():
            r = int(np.flatnonzero(bad.any(axis=1))[0])
            j = int(np.flatnonzero(bad[r])[0])
            S = tuple(int(x) for x in arr[r])
            within = j + 1 - int((arr[r] < j).sum())
            checked = (offset + r) * (t - s) + within
            return VerificationReport(False, {"S": S, "j": j}, checked)
        offset += len(batch)
    return VerificationReport(True, None, comb(t, s) * (t - s))


def check_d_certificate(X, s: int, l: int) -> bool:
    """Sufficient condition from constant weight w and max dot product:
    certified iff s * max_dot <= l * w - 1.  False means "not certified".
    """
    bits = _bits(X)
    if not 1 <= l < s:
        raise ParameterOutOfRange(f"need 1 <= l < s, got {(l, s)}")
    weights = bits.sum(axis=0)
    w = int(weights[0]) if weights.size else 0
    if not (weights == w).all():
        bad = int(np.flatnonzero(weights != w)[0])
        raise NotConstantWeight(f"column {bad} has weight {int(weights[bad])}, expected {w}")
    lam = coincidence(BinaryCode(bits=bits, weight=w))
    return s * lam <= l * w - 1


def m_code_scans(t: int, s: int, u: int, N: int) -> int:
    total = 0
    for a in range(u, s + 1):
        inner = sum(comb(t - a, b) for b in range(0, a + 1))
        total += comb(t, a) * inner * a
    return total * N


def check_m_code(X, s: int, u: int, budget: int | None = None) -> VerificationReport:
    """Exact-hit check: for every disjoint (U, Z) with u <= |U| <= s and
    |Z| <= |U|, and every j in U, some row has a 1 at j, exactly u ones in
    U, and zeros on Z.
    """
    bits = _bits(X)
    N, t = bits.shape
    if not (1 <= u < s and 2 * s < t):
        raise ParameterOutOfRange(f"need 1 <= u < s < t/2, got {(u, s, t)}")
    _check_budget(m_code_scans(t, s, u, N), budget)
    cols = _column_masks(bits)
    full = (1 << N) - 1
    not_cols = [full ^ c for c in cols]
    checked = 0
    for U in subsets_lex(range(t), u, s):
        sums = bits[:, U].sum(axis=1)
        exact_rows = np.flatnonzero(sums == u)
        me = 0
        for i in exact_rows:
            me |= 1 << int(i)
        rows_by_j = [me & cols[j] for j in U]
        rest = [c for c in range(t) if c not in U]
        for Z in subsets_lex(rest, 0, len(U)):
            avoid = full
            for c in Z:
                avoid &= not_cols[c]
            for pos, j in enumerate(U):
                checked += 1
                if not rows_by_j[pos] & avoid:
                    return VerificationReport(False, {"U": U, "Z": Z, "j": j}, checked)
    return VerificationReport(True, None, checked)


def design_domain_sizes(F: OutcomeFunction, s: int, mode: str) -> tuple[int, int]:
    if mode == "exactly":
        return s, s
    if mode == "at-most":
        return (F.l if F.is_threshold else 0), s
    raise ParameterOutOfRange(f"mode must be 'at-most' or 'exactly', got {mode!r}")


def design_scans(t: int, F: OutcomeFunction, s: int, mode: str, N: int) -> int:
    lo, hi = design_domain_sizes(F, s, mode)
    return sum(comb(t, i) for i in range(lo, hi + 1)) * N


def check_design(X, F: OutcomeFunction, s: int, mode: str = "at-most",
                 budget: int | None = None) -> VerificationReport:
    """Are the outcome vectors of all candidate subsets pairwise distinct?

    Candidates are subsets of size <= s ('at-most') or == s ('exactly');
    for a threshold outcome map the at-most domain drops sets smaller than
    the threshold.  The witness is the first pair of candidates, in
    lexicographic enumeration order, sharing an outcome vector.
    """
    bits = _bits(X)
    N, t = bits.shape
    if not 1 <= F.l <= s < t:
        raise ParameterOutOfRange(f"need 1 <= l <= s < t, got l={F.l}, s={s}, t={t}")
    lo, hi = design_domain_sizes(F, s, mode)
    count = sum(comb(t, i) for i in range(lo, hi + 1))
    _check_budget(count * N, budget)
    values = np.asarray(F.values, dtype=np.int64)
    cols32 = bits.astype(np.int32)
    seen: dict[bytes, tuple] = {}
    sums = np.zeros(N, dtype=np.int32)
    checked = 0
    witness = None

    def visit(P):
        nonlocal checked, witness
        checked += 1
        key = values[np.minimum(sums, F.l)].tobytes()
        prev = seen.get(key)
        if prev is not None:
            witness = {"P": prev, "Pprime": P}
            return True
        seen[key] = P
        return False

    cur: list[int] = []

    def rec(start) -> bool:
        for idx in range(start, t):
            cur.append(idx)
            np.add(sums, cols32[:, idx], out=sums)
            hit = len(cur) >= lo and visit(tuple(cur))
            if not hit and len(cur) < hi:
                hit = rec(idx + 1)
            np.subtract(sums, cols32[:, idx], out=sums)
            cur.pop()
            if hit:
                return True
        return False

    failed = (lo == 0 and visit(())) or rec(0)
    if failed:
        return VerificationReport(False, witness, checked)
    return VerificationReport(True, None, checked)


def _threshold_outcomes(bits: np.ndarray, u: int, s: int):
    """Candidate sets of sizes u..s in lex order with outcome and column masks."""
    N, t = bits.shape
    cols32 = bits.astype(np.int32)
    sums = np.zeros(N, dtype=np.int32)
    row_bits = 1 << np.arange(N, dtype=object)
    sets: list[tuple] = []
    cur: list[int] = []

    def rec(start):
        for idx in range(start, t):
            cur.append(idx)
            np.add(sums, cols32[:, idx], out=sums)
            if len(cur) >= u:
                y = int((row_bits * (sums >= u)).sum())
                mask = 0
                for c in cur:
                    mask |= 1 << c
                sets.append((tuple(cur), len(cur), mask, y))
            if len(cur) < s:
                rec(idx + 1)
            np.subtract(sums, cols32[:, idx], out=sums)
            cur.pop()

    rec(0)
    return sets


def _check_threshold_pairs(X, u: int, s: int, bar: bool, budget: int | None) -> VerificationReport:
    bits = _bits(X)
    N, t = bits.shape
    if not (1 <= u < s and 2 * s < t):
        raise ParameterOutOfRange(f"need 1 <= u < s < t/2, got {(u, s, t)}")
    n_sets = sum(comb(t, i) for i in range(u, s + 1))
    _check_budget(n_sets * (n_sets - 1) * N, budget)
    sets = _threshold_outcomes(bits, u, s)
    checked = 0
    for i, (P, size_p, mask_p, y_p) in enumerate(sets):
        for j, (Q, size_q, mask_q, y_q) in enumerate(sets):
            if i == j:
                continue
            if bar:
                if not (mask_p & ~mask_q):
                    continue  # P contained in Q: no requirement
            elif size_p < size_q:
                continue
            checked += 1
            if not (y_p & ~y_q):
                return VerificationReport(False, {"P": P, "Pprime": Q}, checked)
    return VerificationReport(True, None, checked)


def check_threshold_design(X, u: int, s: int, budget: int | None = None) -> VerificationReport:
    """For every ordered pair P != P' of candidate sets with sizes in
    [u, s] and |P| >= |P'|, some row fires on P (>= u hits) but not on P'.
    Equal-size pairs are checked in both orientations.
    """
    return _check_threshold_pairs(X, u, s, bar=False, budget=budget)


def check_threshold_bar_design(X, u: int, s: int, budget: int | None = None) -> VerificationReport:
    """Variant quantified over every ordered pair with P not a subset of P'
    (sizes in [u, s]), again requiring a row firing on P but not on P'.
    """
    return _check_threshold_pairs(X, u, s, bar=True, budget=budget)


def coincidence(code) -> int:
    """Maximum pairwise column statistic: dot product for binary codes,
    agreement-position count for q-ary codes."""
    if isinstance(code, QaryCode):
        sym = code.symbols
        n, t = sym.shape
        if t < 2:
            raise TooFewColumns("coincidence needs at least two columns")
        best = 0
        block = max(1, 4_000_000 // (n * t + 1))
        for a in range(0, t, block):
            b = min(a + block, t)
            agree = (sym[:, a:b, None] == sym[:, None, :]).sum(axis=0)
            for i in range(a, b):
                agree[i - a, i] = -1
            best = max(best, int(agree.max()))
        return best
    bits = _bits(code)
    t = bits.shape[1]
    if t < 2:
        raise TooFewColumns("coincidence needs at least two columns")
    best = 0
    block = max(1, 4_000_000 // (bits.shape[0] * t + 1))
    ints = bits.astype(np.int32)
    for a in range(0, t, block):
        b = min(a + block, t)
        gram = ints[:, a:b].T @ ints
        for i in range(a, b):
            gram[i - a, i] = -1
        best = max(best, int(gram.max()))
    return best
