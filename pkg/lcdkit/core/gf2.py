"""Bit-packed GF(2) linear algebra kernels

A row is a Python int whose bit j holds column j, so row addition is a
single XOR over the whole word.  These kernels back the binary Matrix path
and the census inner loops.
"""

from collections.abc import Iterable, Sequence

import numpy as np


def pack_rows(entries: np.ndarray) -> list[int]:
    """Pack a 0/1 array (rows x cols) into row bitsets"""
    weights = [1 << j for j in range(entries.shape[1])]
    return [sum(w for w, bit in zip(weights, row, strict=True) if bit) for row in entries.tolist()]


def unpack_rows(rows: Sequence[int], n_cols: int) -> np.ndarray:
    """Unpack row bitsets into a 0/1 int64 array"""
    out = np.zeros((len(rows), n_cols), dtype=np.int64)
    for i, row in enumerate(rows):
        for j in range(n_cols):
            if (row >> j) & 1:
                out[i, j] = 1
    return out


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


def weight(v: int) -> int:
    return v.bit_count()


def rref(rows: Sequence[int], n_cols: int) -> tuple[list[int], list[int], list[int]]:
    """Reduced row echelon form with transform tracking

    Returns (reduced, pivots, transform) where reduced has the same number of
    rows as the input (zero rows last) and transform[i] is the bitset of
    input rows summed to form reduced[i].
    """
    n_rows = len(rows)
    mask = (1 << n_cols) - 1
    # transform bits ride above the matrix bits so one XOR updates both
    work = [row | (1 << (n_cols + i)) for i, row in enumerate(rows)]
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        bit = 1 << col
        pivot = next((i for i in range(r, n_rows) if work[i] & bit), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(n_rows):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    reduced = [w & mask for w in work]
    transform = [w >> n_cols for w in work]
    return reduced, pivots, transform


def rank(rows: Sequence[int], n_cols: int) -> int:
    """Compute rank over GF(2) via Gaussian elimination"""
    work = list(rows)
    r = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(r + 1, len(work)):
            if work[i] & bit:
                work[i] ^= work[r]
        r += 1
        if r == len(work):
            break
    return r


def gram(rows: Sequence[int]) -> list[int]:
    """G·Gᵀ as row bitsets"""
    k = len(rows)
    out = [0] * k
    for i in range(k):
        for j in range(i, k):
            if dot(rows[i], rows[j]):
                out[i] |= 1 << j
                out[j] |= 1 << i
    return out


def is_nonsingular(square_rows: Sequence[int]) -> bool:
    n = len(square_rows)
    return rank(square_rows, n) == n


def reduce(v: int, reduced: Sequence[int], pivots: Sequence[int]) -> int:
    """Remainder of v against an RREF basis; zero iff v lies in the row space"""
    for row, col in zip(reduced, pivots, strict=False):
        if (v >> col) & 1:
            v ^= row
    return v


def codewords(rows: Sequence[int]) -> list[int]:
    """All 2^k codewords, index m holding the XOR of the rows selected by m"""
    words = [0] * (1 << len(rows))
    for m in range(1, len(words)):
        low = m & -m
        words[m] = words[m ^ low] ^ rows[low.bit_length() - 1]
    return words


def min_weight(rows: Sequence[int]) -> int:
    """Minimum weight of a nonzero codeword of the span of independent rows"""
    words = codewords(rows)
    return min(w.bit_count() for w in words[1:])


def permute(v: int, perm: Sequence[int]) -> int:
    """Move bit j of v to bit perm[j]"""
    out = 0
    for j, target in enumerate(perm):
        if (v >> j) & 1:
            out |= 1 << target
    return out


def row_space_key(rows: Iterable[int], n_cols: int) -> tuple[int, ...]:
    """Canonical key of a row space: its nonzero RREF rows"""
    reduced, pivots, _ = rref(list(rows), n_cols)
    return tuple(reduced[: len(pivots)])
