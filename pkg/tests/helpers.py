"""Independent oracles used by the test suite.

Everything here recomputes results along a different path from the library
code it checks: brute-force pairwise statistics, explicit polynomial
evaluation, and rank computations over the field tables.
"""

from itertools import combinations

import numpy as np

from sic.fields import FiniteField


def pairwise_min_distance(symbols: np.ndarray) -> int:
    """Exhaustive minimum pairwise Hamming distance between columns."""
    n, t = symbols.shape
    best = n + 1
    block = max(1, 4_000_000 // (n * t + 1))
    for a in range(0, t, block):
        b = min(a + block, t)
        diff = (symbols[:, a:b, None] != symbols[:, None, :]).sum(axis=0)
        for i in range(a, b):
            diff[i - a, i] = n + 1  # ignore self-comparisons
        best = min(best, int(diff.min()))
    return best


def qary_agreement_matrix(symbols: np.ndarray) -> np.ndarray:
    """t x t matrix of pairwise agreement-position counts."""
    n, t = symbols.shape
    agree = np.zeros((t, t), dtype=np.int32)
    for i in range(n):
        row = symbols[i]
        agree += row[:, None] == row[None, :]
    return agree


def gf_rank(f: FiniteField, mat) -> int:
    """Rank of a matrix over GF(q) by Gaussian elimination on the field tables."""
    m = [list(row) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = f.inv(m[rank][c])
        m[rank] = [f.mul(inv, x) for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][c] != 0:
                factor = m[r][c]
                m[r] = [f.sub(x, f.mul(factor, y)) for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def _poly_mul_field(f: FiniteField, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(ai, bj))
    return out


def _eval_poly(f: FiniteField, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = f.add(f.mul(acc, x), c)
    return acc


def rs_min_distance_structural(field: FiniteField, k: int) -> int:
    """Exact minimum distance of the extended RS code, no materialization.

    The code is linear, so the minimum distance is the minimum nonzero
    codeword weight.  A nonzero codeword with >= k zero positions would
    make some k-subset of the (q+1) evaluation columns linearly dependent;
    checking every k-subset for full rank proves d >= q-k+2 exhaustively
    over zero patterns.  The polynomial with roots at the first k-1 field
    elements then witnesses d <= q-k+2.
    """
    q = field.q
    gen = [[0] * (q + 1) for _ in range(k)]
    for a in range(q):
        for i in range(k):
            gen[i][a] = field.pow(a, i)
    gen[k - 1][q] = 1  # extension column carries the leading coefficient
    for subset in combinations(range(q + 1), k):
        sub = [[gen[i][c] for c in subset] for i in range(k)]
        if gf_rank(field, sub) < k:
            raise AssertionError(f"dependent columns {subset}: codeword with >= {k} zeros")
    # witness of weight exactly q-k+2
    poly = [1]
    for root in range(k - 1):
        poly = _poly_mul_field(field, poly, [field.neg(root), 1])
    word = [_eval_poly(field, poly, a) for a in range(q)] + [poly[-1]]
    weight = sum(1 for c in word if c != 0)
    assert weight == q - k + 2, f"witness weight {weight} != {q - k + 2}"
    return q - k + 2
