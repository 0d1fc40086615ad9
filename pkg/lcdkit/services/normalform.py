"""Congruence normal forms and LCD-preserving constructions

Symmetric Gram matrices are brought to normal form under M -> Q·M·Qᵀ; the
resulting bases drive the shortening construction, canonical orbit
representatives, transporters between codes of one type, and stabilizer
elements.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..core.errors import (
    DimensionMismatchError,
    FieldCharacteristicError,
    NotLcdError,
    PreconditionError,
)
from ..core.field import Field
from ..core.matrix import Matrix
from ..models.code import LcdType, LinearCode

logger = logging.getLogger(__name__)


class CongruenceShape(str, Enum):
    ALTERNATING_J_BLOCKS = "AlternatingJBlocks"
    IDENTITY_BLOCK = "IdentityBlock"
    DIAG_ONE_DELTA = "DiagOneDelta"


class BasisKind(str, Enum):
    ORTHONORMAL = "Orthonormal"
    SYMPLECTIC = "Symplectic"
    DIAG_ONE_DELTA = "DiagOneDelta"


@dataclass(frozen=True)
class CongruenceResult:
    q_transform: Matrix
    normal: Matrix
    rank: int
    shape: CongruenceShape
    delta: int | None = None


@dataclass(frozen=True)
class LcdBasis:
    rows: Matrix
    kind: BasisKind
    delta: int | None = None

    def expected_gram(self) -> Matrix:
        """The Gram matrix this basis is declared to have"""
        return normal_form_matrix(self.rows.field, self.rows.rows, self.rows.rows, self.kind, self.delta)


def normal_form_matrix(
    field: Field, size: int, rank: int, kind: BasisKind | CongruenceShape, delta: int | None = None
) -> Matrix:
    """diag[I_rank] / diag[J2, ...] / diag[1, ..., 1, delta], padded with zeros"""
    out = np.zeros((size, size), dtype=object)
    if kind.value in (BasisKind.SYMPLECTIC.value, CongruenceShape.ALTERNATING_J_BLOCKS.value):
        for i in range(0, rank, 2):
            out[i, i + 1] = out[i + 1, i] = 1
    else:
        for i in range(rank):
            out[i, i] = 1
        if rank and delta is not None:
            out[rank - 1, rank - 1] = delta
    return Matrix(field, out)


# ----------------------------------------------------------------------
# Symmetric congruence
# ----------------------------------------------------------------------
class _CongruenceWork:
    """Working copy of a symmetric matrix plus the accumulated transform"""

    def __init__(self, m: Matrix) -> None:
        self.p = m.field.p
        self.size = m.rows
        self.a = m.to_lists()
        self.q = Matrix.identity(m.field, m.rows).to_lists()

    def add(self, target: int, source: int, scale: int = 1) -> None:
        """row_t += scale·row_s, then col_t += scale·col_s"""
        p = self.p
        a = self.a
        a[target] = [(x + scale * y) % p for x, y in zip(a[target], a[source], strict=True)]
        for row in a:
            row[target] = (row[target] + scale * row[source]) % p
        self.q[target] = [
            (x + scale * y) % p for x, y in zip(self.q[target], self.q[source], strict=True)
        ]

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        a = self.a
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        self.q[i], self.q[j] = self.q[j], self.q[i]

    def scale(self, i: int, s: int) -> None:
        p = self.p
        self.a[i] = [(x * s) % p for x in self.a[i]]
        for row in self.a:
            row[i] = (row[i] * s) % p
        self.q[i] = [(x * s) % p for x in self.q[i]]

    def first_diagonal(self, start: int) -> int | None:
        return next((i for i in range(start, self.size) if self.a[i][i]), None)

    def first_off_diagonal(self, start: int) -> tuple[int, int] | None:
        return next(
            (
                (i, j)
                for i in range(start, self.size)
                for j in range(i + 1, self.size)
                if self.a[i][j]
            ),
            None,
        )


def congruence_normalize(m: Matrix) -> CongruenceResult:
    """Find an invertible Q with Q·M·Qᵀ in normal form"""
    if not m.is_symmetric():
        raise PreconditionError("congruence normalization needs a symmetric matrix", {"m": m.format()})
    if m.field.is_binary:
        q, rank, shape, delta = _normalize_binary(m)
    else:
        q, rank, shape, delta = _normalize_odd(m)
    normal = q @ m @ q.T
    expected = normal_form_matrix(m.field, m.rows, rank, shape, delta)
    if normal != expected:
        raise AssertionError(f"congruence produced {normal.format()}, expected {expected.format()}")
    return CongruenceResult(q_transform=q, normal=normal, rank=rank, shape=shape, delta=delta)


def _normalize_binary(m: Matrix):
    work = _CongruenceWork(m)
    ones: list[int] = []
    blocks: list[int] = []
    pos = 0
    while pos < work.size:
        d = work.first_diagonal(pos)
        if d is not None:
            work.swap(pos, d)
            for j in range(pos + 1, work.size):
                if work.a[j][pos]:
                    work.add(j, pos)
            ones.append(pos)
            pos += 1
            continue
        pair = work.first_off_diagonal(pos)
        if pair is None:
            break
        i, j = pair
        work.swap(pos, i)
        work.swap(pos + 1, j)
        for r in range(pos + 2, work.size):
            if work.a[r][pos]:
                work.add(r, pos + 1)
            if work.a[r][pos + 1]:
                work.add(r, pos)
        blocks.append(pos)
        pos += 2

    q = work.q
    if ones and blocks:
        # [1] ⊕ J2 ≅ I3 via rows (u+v+w, u+v, u+w)
        u = ones[0]
        for v in blocks:
            w = v + 1
            qu, qv, qw = q[u], q[v], q[w]
            q[u] = [(x + y + z) % 2 for x, y, z in zip(qu, qv, qw, strict=True)]
            q[v] = [(x + y) % 2 for x, y in zip(qu, qv, strict=True)]
            q[w] = [(x + z) % 2 for x, z in zip(qu, qw, strict=True)]
        logger.debug("absorbed %d J2 blocks into identity form", len(blocks))
    shape = CongruenceShape.IDENTITY_BLOCK if ones else CongruenceShape.ALTERNATING_J_BLOCKS
    return Matrix(m.field, q) if q else Matrix.zeros(m.field, 0, 0), pos, shape, None


def _normalize_odd(m: Matrix):
    f = m.field
    work = _CongruenceWork(m)
    pos = 0
    while pos < work.size:
        d = work.first_diagonal(pos)
        if d is None:
            pair = work.first_off_diagonal(pos)
            if pair is None:
                break
            i, j = pair
            # diagonal becomes 2·M_ij, nonzero in odd characteristic
            work.add(i, j)
            d = i
        work.swap(pos, d)
        inv = f.inv(work.a[pos][pos])
        for r in range(pos + 1, work.size):
            if work.a[r][pos]:
                work.add(r, pos, f.neg(work.a[r][pos] * inv))
        pos += 1

    gamma = f.nonsquare()
    gamma_inv = f.inv(gamma)
    nonsquares = []
    for i in range(pos):
        d = work.a[i][i]
        if f.is_square(d):
            work.scale(i, f.inv(f.sqrt(d)))
        else:
            work.scale(i, f.inv(f.sqrt(d * gamma_inv)))
            nonsquares.append(i)

    q = work.q
    p = f.p
    a, b = f.two_squares(gamma_inv)
    while len(nonsquares) >= 2:
        i, j = nonsquares.pop(0), nonsquares.pop(0)
        qi, qj = q[i], q[j]
        q[i] = [(a * x + b * y) % p for x, y in zip(qi, qj, strict=True)]
        q[j] = [(-b * x + a * y) % p for x, y in zip(qi, qj, strict=True)]
    delta = 1
    if nonsquares:
        i = nonsquares[0]
        q[i], q[pos - 1] = q[pos - 1], q[i]
        delta = gamma
    q_matrix = Matrix(f, q) if q else Matrix.zeros(f, 0, 0)
    return q_matrix, pos, CongruenceShape.DIAG_ONE_DELTA, delta


# ----------------------------------------------------------------------
# Bases of LCD codes
# ----------------------------------------------------------------------
def _require_lcd(c: LinearCode) -> None:
    if c.k < 1:
        raise PreconditionError("operation needs a code of dimension at least 1", {"k": c.k})
    if not c.is_lcd():
        raise NotLcdError("code is not LCD", {"gen": c.gen.format()})


def _require_binary(c: LinearCode, what: str) -> None:
    if not c.field.is_binary:
        raise FieldCharacteristicError(f"{what} is defined for binary codes only", {"p": c.field.p})


def _require_coord(c: LinearCode, coord: int) -> None:
    if not 0 <= coord < c.n:
        raise PreconditionError(f"coordinate {coord} out of range for length {c.n}")


def lcd_basis(c: LinearCode) -> LcdBasis:
    """Orthonormal, symplectic or diag[1, ..., 1, delta] basis of an LCD code"""
    _require_lcd(c)
    result = congruence_normalize(c.gram())
    rows = result.q_transform @ c.gen
    if c.field.is_binary:
        kind = (
            BasisKind.ORTHONORMAL
            if result.shape == CongruenceShape.IDENTITY_BLOCK
            else BasisKind.SYMPLECTIC
        )
        return LcdBasis(rows=rows, kind=kind)
    return LcdBasis(rows=rows, kind=BasisKind.DIAG_ONE_DELTA, delta=result.delta)


def adjusted_symplectic_basis(c: LinearCode, coord: int = 0) -> LcdBasis:
    """Symplectic basis whose pairs agree at the given coordinate"""
    _require_binary(c, "adjusted_symplectic_basis")
    _require_coord(c, coord)
    basis = lcd_basis(c)
    if basis.kind != BasisKind.SYMPLECTIC:
        raise PreconditionError("a symplectic basis needs an even-like code")
    rows = basis.rows.packed_rows()
    for i in range(0, len(rows), 2):
        first, second = rows[i], rows[i + 1]
        if (first >> coord) & 1 != (second >> coord) & 1:
            if not (first >> coord) & 1:
                first, second = second, first
            second ^= first
        rows[i], rows[i + 1] = first, second
    return LcdBasis(rows=Matrix.from_bits(c.field, rows, c.n), kind=BasisKind.SYMPLECTIC)


def shorten_lcd(c: LinearCode, coord: int = 0) -> LinearCode:
    """An [n, k-1] LCD subcode-like code whose minimum distance is at least that of c"""
    _require_binary(c, "shorten_lcd")
    _require_lcd(c)
    _require_coord(c, coord)
    if c.k < 2:
        raise PreconditionError("shortening needs k >= 2", {"k": c.k})
    n, k = c.n, c.k
    e = 1 << coord

    if not c.is_even_like():
        rows = lcd_basis(c).rows.packed_rows()[: k - 1]
        logger.debug("shorten: odd-like branch, dropped one orthonormal vector")
        return LinearCode(Matrix.from_bits(c.field, rows, n))

    if all(not row & e for row in c.gen.packed_rows()):
        rows = lcd_basis(c).rows.packed_rows()
        rows[k - 2] ^= e
        logger.debug("shorten: even-like branch with zero coordinate %d", coord)
        return LinearCode(Matrix.from_bits(c.field, rows[: k - 1], n))

    rows = adjusted_symplectic_basis(c, coord).rows.packed_rows()
    pairs = [(rows[i], rows[i + 1]) for i in range(0, k, 2)]
    hit = [pair for pair in pairs if pair[0] & e]
    rest = [pair for pair in pairs if not pair[0] & e]
    c1, c1p = hit[0]
    new_rows = [c1p ^ c1 ^ e]
    for ci, cip in hit[1:]:
        new_rows += [ci ^ c1, cip ^ c1]
    for ci, cip in rest:
        new_rows += [ci, cip]
    logger.debug("shorten: even-like branch with %d pairs touching coordinate %d", len(hit), coord)
    return LinearCode(Matrix.from_bits(c.field, new_rows, n))


# ----------------------------------------------------------------------
# Canonical orbit representatives
# ----------------------------------------------------------------------
def _staircase(count: int, n: int) -> list[list[int]]:
    """Rows e_1+...+e_{2j}, e_{2j}+e_{2j+1} for j = 1..count/2"""
    rows = []
    for j in range(1, count // 2 + 1):
        first = [0] * n
        for i in range(2 * j):
            first[i] = 1
        second = [0] * n
        second[2 * j - 1] = second[2 * j] = 1
        rows += [first, second]
    return rows


def _unit(n: int, i: int, scale: int = 1) -> list[int]:
    row = [0] * n
    row[i] = scale
    return row


def canonical_code(t: LcdType, n: int, k: int, f: Field) -> tuple[Matrix, Matrix]:
    """Generator and parity-check matrices of the canonical code of type t"""
    if not 0 < k < n:
        raise PreconditionError(f"canonical codes need 0 < k < n, got n={n}, k={k}")
    if t.is_binary != f.is_binary:
        raise FieldCharacteristicError(f"type {t.value} does not live over GF({f.p})")

    if t == LcdType.OO or t == LcdType.PLUS:
        gen = [_unit(n, i) for i in range(k)]
        parity = [_unit(n, i) for i in range(k, n)]
    elif t == LcdType.OE:
        if (n - k) % 2:
            raise PreconditionError(f"LCD_OE[{n},{k}] is empty: n - k must be even")
        head = [1 if i <= n - k else 0 for i in range(n)]
        gen = [head] + [_unit(n, i) for i in range(n - k + 1, n)]
        parity = _staircase(n - k, n)
    elif t == LcdType.EO:
        if k % 2:
            raise PreconditionError(f"LCD_EO[{n},{k}] is empty: k must be even")
        gen = _staircase(k, n)
        head = [1 if i <= k else 0 for i in range(n)]
        parity = [head] + [_unit(n, i) for i in range(k + 1, n)]
    else:
        a, b = f.two_squares(f.nonsquare())
        last = _unit(n, k - 1, a)
        last[k] = b
        gen = [_unit(n, i) for i in range(k - 1)] + [last]
        tail = _unit(n, k - 1, f.neg(b))
        tail[k] = a
        parity = [_unit(n, i) for i in range(k + 1, n)] + [tail]
    return Matrix.from_rows(f, gen, n), Matrix.from_rows(f, parity, n)


def canonical_lcd_code(t: LcdType, n: int, k: int, f: Field) -> LinearCode:
    gen, _ = canonical_code(t, n, k, f)
    return LinearCode(gen)


# ----------------------------------------------------------------------
# Orthogonal transporters and stabilizers
# ----------------------------------------------------------------------
def _frame(c: LinearCode) -> Matrix:
    """Normalized basis of C stacked on a normalized basis of C⊥"""
    return Matrix.vstack(lcd_basis(c).rows, lcd_basis(c.dual()).rows)


def transporter(c1: LinearCode, c2: LinearCode) -> Matrix:
    """An orthogonal Q with C1·Q = C2 for LCD codes of the same type"""
    if c1.field != c2.field or c1.n != c2.n or c1.k != c2.k:
        raise DimensionMismatchError(
            "transporter needs codes with the same field, length and dimension",
            {"c1": [c1.field.p, c1.n, c1.k], "c2": [c2.field.p, c2.n, c2.k]},
        )
    t1, t2 = c1.classify(), c2.classify()
    if t1 != t2:
        raise PreconditionError(
            f"codes have different types {t1.value} and {t2.value}",
            {"type1": t1.value, "type2": t2.value},
        )
    return _frame(c1).inverse() @ _frame(c2)


def stabilizer_element(c: LinearCode, q1: Matrix, q2: Matrix) -> Matrix:
    """[G;H]⁻¹ · diag(Q1, Q2) · [G;H] for isometries Q1 of G·Gᵀ and Q2 of H·Hᵀ"""
    if not c.is_lcd():
        raise NotLcdError("stabilizer elements are built for LCD codes", {"gen": c.gen.format()})
    g, h = c.gen, c.parity_check()
    if q1.shape != (c.k, c.k) or q2.shape != (c.n - c.k, c.n - c.k):
        raise DimensionMismatchError(
            f"expected {c.k}x{c.k} and {c.n - c.k}x{c.n - c.k} blocks, got {q1.shape}, {q2.shape}"
        )
    gg, hh = g.gram(), h.gram()
    if q1 @ gg @ q1.T != gg:
        raise PreconditionError("Q1 does not preserve G·Gᵀ", {"q1": q1.format()})
    if q2 @ hh @ q2.T != hh:
        raise PreconditionError("Q2 does not preserve H·Hᵀ", {"q2": q2.format()})
    frame = Matrix.vstack(g, h)
    return frame.inverse() @ Matrix.block_diag(q1, q2) @ frame


def in_stabilizer(c: LinearCode, q: Matrix) -> bool:
    """Q is orthogonal and C·Q = C"""
    if q.field != c.field or q.shape != (c.n, c.n):
        raise DimensionMismatchError(f"expected a {c.n}x{c.n} matrix over GF({c.field.p})")
    return q.is_orthogonal() and (c.gen @ q).row_space_equal(c.gen)


def binary_pairs_agree(basis: LcdBasis, coord: int) -> bool:
    """Every symplectic pair of the basis agrees at coord"""
    rows = basis.rows.packed_rows()
    return all(
        ((rows[i] >> coord) & 1) == ((rows[i + 1] >> coord) & 1) for i in range(0, len(rows), 2)
    )


__all__ = [
    "BasisKind",
    "CongruenceResult",
    "CongruenceShape",
    "LcdBasis",
    "adjusted_symplectic_basis",
    "binary_pairs_agree",
    "canonical_code",
    "canonical_lcd_code",
    "congruence_normalize",
    "in_stabilizer",
    "lcd_basis",
    "normal_form_matrix",
    "shorten_lcd",
    "stabilizer_element",
    "transporter",
]
