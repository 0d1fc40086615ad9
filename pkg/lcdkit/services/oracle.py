"""Exhaustive enumeration oracle

Every k-dimensional subspace of GF(p)^n is produced once, as a canonical
RREF generator, by iterating over pivot-column patterns and then over the
free entries of each pattern.  The census, the d_LCD table, the brute-force
group orders and the mass formula are all computed from this enumeration.
"""

import itertools
import logging
import math
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from ..core import gf2
from ..core.config import settings
from ..core.errors import BudgetExceededError, FieldCharacteristicError, PreconditionError
from ..core.field import GF, Field
from ..core.matrix import Matrix
from ..models.code import LcdType, LinearCode
from ..models.schemas import (
    CensusCell,
    CensusReport,
    DlcdEntry,
    DlcdTable,
    GroupOrderReport,
    MassFormulaReport,
    format_fraction,
)
from . import counting

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Subspace enumeration
# ----------------------------------------------------------------------
def _check_budget(what: str, required: int, budget: int | None, default: int) -> None:
    budget = budget or default
    if required > budget:
        raise BudgetExceededError(what, required, budget)


def pivot_patterns(n: int, k: int) -> list[tuple[int, ...]]:
    """Pivot column sets in lexicographic order"""
    return list(itertools.combinations(range(n), k))


def _free_positions(pivots: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    pivot_set = set(pivots)
    return [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivot_set]


def binary_pattern_rows(pivots: tuple[int, ...], n: int) -> Iterator[list[int]]:
    """All RREF bitset generators with the given pivots"""
    base = [1 << pc for pc in pivots]
    free = _free_positions(pivots, n)
    rows_of = [i for i, _ in free]
    bits_of = [1 << j for _, j in free]
    for mask in range(1 << len(free)):
        rows = list(base)
        idx = 0
        while mask:
            if mask & 1:
                rows[rows_of[idx]] |= bits_of[idx]
            mask >>= 1
            idx += 1
        yield rows


def pattern_rows(pivots: tuple[int, ...], n: int, p: int) -> Iterator[list[list[int]]]:
    """All RREF generators (as lists) with the given pivots over GF(p)"""
    free = _free_positions(pivots, n)
    for values in itertools.product(range(p), repeat=len(free)):
        rows = [[0] * n for _ in pivots]
        for i, pc in enumerate(pivots):
            rows[i][pc] = 1
        for (i, j), v in zip(free, values, strict=True):
            rows[i][j] = v
        yield rows


def enumerate_codes(n: int, k: int, f: Field, budget: int | None = None) -> Iterator[LinearCode]:
    """Each [n, k] code over f exactly once, in lexicographic pivot order"""
    if not 0 <= k <= n:
        raise PreconditionError(f"enumeration needs 0 <= k <= n, got n={n}, k={k}")
    total = counting.gaussian_binomial(n, k, f.p)
    _check_budget("enumerate_codes", total, budget, settings.enumeration_budget)
    return _enumerate(n, k, f)


def _enumerate(n: int, k: int, f: Field) -> Iterator[LinearCode]:
    if k == 0:
        yield LinearCode.zero(f, n)
        return
    for pivots in pivot_patterns(n, k):
        if f.is_binary:
            for rows in binary_pattern_rows(pivots, n):
                yield LinearCode(Matrix.from_bits(f, rows, n), canonical=True)
        else:
            for rows in pattern_rows(pivots, n, f.p):
                yield LinearCode(Matrix(f, rows), canonical=True)


# ----------------------------------------------------------------------
# Census
# ----------------------------------------------------------------------
def binary_lcd_type(rows: list[int], pivots: tuple[int, ...], n: int) -> LcdType | None:
    """Type of the binary code spanned by RREF rows, or None when it is not LCD"""
    if not gf2.is_nonsingular(gf2.gram(rows)):
        return None
    if all(gf2.weight(r) % 2 == 0 for r in rows):
        return LcdType.EO
    # the dual is even-like iff the all-ones word lies in the code
    if gf2.reduce((1 << n) - 1, rows, pivots) == 0:
        return LcdType.OE
    return LcdType.OO


@dataclass
class PatternTally:
    """Counts over one pivot pattern; merged in pattern order"""

    total: int = 0
    lcd: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    best_d: int | None = None
    witness: str | None = None

    def record(self, type_: LcdType, d: int, witness) -> None:
        self.lcd += 1
        self.counts[type_.value] = self.counts.get(type_.value, 0) + 1
        if self.best_d is None or d > self.best_d:
            self.best_d = d
            self.witness = witness() if callable(witness) else witness

    def merge(self, other: "PatternTally") -> None:
        self.total += other.total
        self.lcd += other.lcd
        for key, value in other.counts.items():
            self.counts[key] = self.counts.get(key, 0) + value
        if other.best_d is not None and (self.best_d is None or other.best_d > self.best_d):
            self.best_d = other.best_d
            self.witness = other.witness


def scan_pattern(p: int, n: int, pivots: tuple[int, ...]) -> PatternTally:
    """Classify every code with the given pivot pattern"""
    tally = PatternTally()
    f = GF(p)
    if f.is_binary:
        for rows in binary_pattern_rows(pivots, n):
            tally.total += 1
            type_ = binary_lcd_type(rows, pivots, n)
            if type_ is None:
                continue
            d = gf2.min_weight(rows)
            tally.record(type_, d, lambda rows=rows: Matrix.from_bits(f, rows, n).format())
        return tally
    for rows in pattern_rows(pivots, n, p):
        tally.total += 1
        code = LinearCode(Matrix(f, rows), canonical=True)
        det = code.gram().det()
        if det == 0:
            continue
        type_ = LcdType.PLUS if f.legendre(det) == 1 else LcdType.MINUS
        d = code.min_distance(budget=p**code.k)
        tally.record(type_, d, code.gen.format)
    return tally


def _scan_cell(p: int, n: int, k: int, workers: int) -> PatternTally:
    patterns = pivot_patterns(n, k)
    merged = PatternTally()
    if workers > 1 and len(patterns) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(scan_pattern, [p] * len(patterns), [n] * len(patterns), patterns))
    else:
        tallies = [scan_pattern(p, n, pivots) for pivots in patterns]
    for tally in tallies:
        merged.merge(tally)
    return merged


def _formula_values(p: int, n: int, k: int) -> dict[str, int]:
    values = {"total": counting.gaussian_binomial(n, k, p)}
    if p == 2:
        values["lcd"] = counting.count_lcd_binary(n, k)
        for t in LcdType.binary_types():
            values[t.value] = counting.count_lcd_binary(n, k, t)
    else:
        values["lcd"] = counting.count_lcd_q(n, k, p)
        for t in LcdType.odd_types():
            values[t.value] = counting.count_lcd_q(n, k, p, t)
    return values


def census(n: int, f: Field, budget: int | None = None, workers: int | None = None) -> CensusReport:
    """Classify every [n, k] code for 0 < k < n and compare with the closed formulas"""
    if n < 1:
        raise PreconditionError(f"census needs n >= 1, got {n}")
    for k in range(1, n):
        _check_budget(
            f"census cell [{n},{k}]",
            counting.gaussian_binomial(n, k, f.p),
            budget,
            settings.enumeration_budget,
        )
    workers = workers or settings.workers
    types = LcdType.binary_types() if f.is_binary else LcdType.odd_types()
    cells = []
    for k in range(1, n):
        tally = _scan_cell(f.p, n, k, workers)
        counts = {t.value: tally.counts.get(t.value, 0) for t in types}
        formula = _formula_values(f.p, n, k)
        observed = {"total": tally.total, "lcd": tally.lcd, **counts}
        match = {key: observed.get(key) == value for key, value in formula.items()}
        if not all(match.values()):
            logger.warning("census mismatch at p=%d [%d,%d]: %s vs %s", f.p, n, k, observed, formula)
        logger.info("census p=%d [%d,%d]: %d subspaces, %d LCD", f.p, n, k, tally.total, tally.lcd)
        cells.append(
            CensusCell(
                k=k,
                total=tally.total,
                lcd=tally.lcd,
                counts=counts,
                formula=formula,
                d_lcd=tally.best_d,
                witness=tally.witness,
                formula_match=match,
            )
        )
    return CensusReport(p=f.p, n=n, cells=cells)


def dlcd_table(
    n_max: int, f: Field, budget: int | None = None, workers: int | None = None
) -> DlcdTable:
    """d_LCD(n, k) for 2 <= n <= n_max and 0 < k < n, with the monotonicity flag in k"""
    if n_max < 2:
        raise PreconditionError(f"d_LCD table needs n_max >= 2, got {n_max}")
    entries = []
    for n in range(2, n_max + 1):
        report = census(n, f, budget=budget, workers=workers)
        previous = None
        for cell in report.cells:
            monotone = previous is None or cell.d_lcd is None or cell.d_lcd <= previous
            entries.append(
                DlcdEntry(n=n, k=cell.k, d_lcd=cell.d_lcd, witness=cell.witness, monotone=monotone)
            )
            previous = cell.d_lcd
    return DlcdTable(p=f.p, n_max=n_max, entries=entries)


# ----------------------------------------------------------------------
# Brute-force group orders
# ----------------------------------------------------------------------
class GroupKind(str, Enum):
    ORTHOGONAL_GF2 = "orthogonal"
    SYMPLECTIC_GF2 = "symplectic"
    ORTHOGONAL_Q = "orthogonal-q"


def defining_form(kind: GroupKind, size: int, f: Field, delta_class: int = 1) -> Matrix:
    """The symmetric matrix whose isometries form the group"""
    if kind == GroupKind.SYMPLECTIC_GF2:
        if size % 2:
            raise PreconditionError(f"symplectic form needs even size, got {size}")
        rows = [[0] * size for _ in range(size)]
        for i in range(0, size, 2):
            rows[i][i + 1] = rows[i + 1][i] = 1
        return Matrix(f, rows)
    form = [[int(i == j) for j in range(size)] for i in range(size)]
    if kind == GroupKind.ORTHOGONAL_Q and delta_class == -1:
        form[-1][-1] = f.nonsquare()
    return Matrix(f, form)


def brute_force_group_order(
    kind: GroupKind,
    size: int,
    f: Field,
    delta_class: int = 1,
    budget: int | None = None,
) -> int:
    """Count Q with Q·F·Qᵀ = F by scanning every candidate matrix row by row"""
    if size < 1:
        raise PreconditionError(f"group size must be positive, got {size}")
    if (kind == GroupKind.ORTHOGONAL_Q) == f.is_binary:
        raise FieldCharacteristicError(f"group kind {kind.value} does not live over GF({f.p})")
    _check_budget("brute_force_group_order", f.p ** (size * size), budget, settings.group_budget)
    form = defining_form(kind, size, f, delta_class)
    p = f.p
    vectors = list(itertools.product(range(p), repeat=size))
    f_rows = form.to_lists()
    images = [tuple(sum(r[j] * v[j] for j in range(size)) % p for r in f_rows) for v in vectors]
    # pairing[a][b] = v_a · F · v_bᵀ
    pairing = [[sum(x * y for x, y in zip(u, fv, strict=True)) % p for fv in images] for u in vectors]

    def extend(chosen: list[int]) -> int:
        i = len(chosen)
        if i == size:
            return 1
        total = 0
        for a in range(len(vectors)):
            if pairing[a][a] != f_rows[i][i]:
                continue
            if all(pairing[a][b] == f_rows[i][j] for j, b in enumerate(chosen)):
                total += extend(chosen + [a])
        return total

    order = extend([])
    logger.debug("brute force %s size=%d over GF(%d): %d", kind.value, size, p, order)
    return order


def group_order_report(
    kind: GroupKind, size: int, f: Field, delta_class: int = 1, brute: bool = False
) -> GroupOrderReport:
    """Formula value, optionally checked against the brute-force count"""
    if kind == GroupKind.ORTHOGONAL_GF2:
        formula = counting.order_orthogonal_gf2(size)
    elif kind == GroupKind.SYMPLECTIC_GF2:
        formula = counting.order_symplectic_gf2(size)
    else:
        formula = counting.order_orthogonal_q(size, delta_class, f.p)
    observed = brute_force_group_order(kind, size, f, delta_class) if brute else None
    return GroupOrderReport(
        kind=kind.value,
        size=size,
        p=f.p,
        delta_class=delta_class if kind == GroupKind.ORTHOGONAL_Q else None,
        formula=formula,
        brute_force=observed,
        match=None if observed is None else observed == formula,
    )


# ----------------------------------------------------------------------
# Mass formula
# ----------------------------------------------------------------------
def mass_formula_check(n: int, k: int, max_length: int | None = None) -> MassFormulaReport:
    """Σ 1/|Aut(C)| over permutation classes of LCD_oo[n, k] against |O_n| / (|St(C_oo)|·n!)"""
    if not 0 < k < n:
        raise PreconditionError(f"mass formula needs 0 < k < n, got n={n}, k={k}")
    max_length = max_length or settings.mass_max_length
    if n > max_length:
        raise BudgetExceededError("mass_formula_check length", n, max_length)

    codes = {}
    for pivots in pivot_patterns(n, k):
        for rows in binary_pattern_rows(pivots, n):
            if binary_lcd_type(rows, pivots, n) == LcdType.OO:
                codes[tuple(rows)] = rows

    perms = list(itertools.permutations(range(n)))
    visited: set[tuple[int, ...]] = set()
    total = Fraction(0)
    classes = 0
    for key, rows in codes.items():
        if key in visited:
            continue
        orbit = set()
        automorphisms = 0
        for perm in perms:
            image = gf2.row_space_key((gf2.permute(r, perm) for r in rows), n)
            orbit.add(image)
            if image == key:
                automorphisms += 1
        if len(orbit) * automorphisms != len(perms):
            raise AssertionError("orbit-stabilizer count failed for a permutation class")
        visited |= orbit
        classes += 1
        total += Fraction(1, automorphisms)

    rhs = Fraction(
        counting.order_orthogonal_gf2(n),
        counting.stabilizer_order(LcdType.OO, n, k) * math.factorial(n),
    )
    logger.info("mass formula [%d,%d]: %d classes, sum %s, rhs %s", n, k, classes, total, rhs)
    return MassFormulaReport(
        n=n,
        k=k,
        class_count=classes,
        sum_inverse_aut=format_fraction(total),
        rhs=format_fraction(rhs),
        match=total == rhs,
    )
