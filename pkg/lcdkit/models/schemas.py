"""Pydantic schemas for reports and CLI responses"""

import csv
import io
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field, field_validator

SCHEMA_VERSION = "1"

BINARY_CSV_HEADER = ["p", "n", "k", "total", "lcd", "oo", "oe", "eo", "d_lcd", "formula_match"]
ODD_CSV_HEADER = ["p", "n", "k", "total", "lcd", "plus", "minus", "d_lcd", "formula_match"]


def format_fraction(value: Fraction) -> str:
    """Exact rational as "a/b" """
    return f"{value.numerator}/{value.denominator}"


def _write_csv(header: list[str], rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


class VersionedReport(BaseModel):
    """Base for documents written to disk"""

    version: str = Field(SCHEMA_VERSION, description="Schema version of the document")

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


# ----------------------------------------------------------------------
# Census
# ----------------------------------------------------------------------
class CensusCell(BaseModel):
    """One (n, k) cell of an exhaustive census"""

    k: int = Field(..., ge=0, description="Code dimension")
    total: int = Field(..., description="Number of k-dimensional subspaces scanned")
    lcd: int = Field(..., description="Number of LCD codes")
    counts: dict[str, int] = Field(
        default_factory=dict, description="LCD codes per type (OO/OE/EO or Plus/Minus)"
    )
    formula: dict[str, int] = Field(
        default_factory=dict, description="Closed-form values for total, lcd and every type"
    )
    d_lcd: int | None = Field(None, description="Largest minimum distance among LCD codes")
    witness: str | None = Field(None, description="Generator of one LCD code attaining d_lcd")
    formula_match: dict[str, bool] = Field(
        default_factory=dict, description="Per counted quantity: does it equal its formula"
    )

    @property
    def all_match(self) -> bool:
        return bool(self.formula_match) and all(self.formula_match.values())


class CensusReport(VersionedReport):
    """Exhaustive classification of all [n, k] codes for one length"""

    p: int = Field(..., description="Field characteristic")
    n: int = Field(..., ge=1, description="Code length")
    cells: list[CensusCell] = Field(default_factory=list, description="One entry per 0 < k < n")

    @property
    def all_match(self) -> bool:
        return all(cell.all_match for cell in self.cells)

    def cell(self, k: int) -> CensusCell:
        return next(cell for cell in self.cells if cell.k == k)

    def to_csv(self) -> str:
        binary = self.p == 2
        rows = []
        for cell in self.cells:
            types = ["OO", "OE", "EO"] if binary else ["Plus", "Minus"]
            rows.append(
                [self.p, self.n, cell.k, cell.total, cell.lcd]
                + [cell.counts.get(t, 0) for t in types]
                + ["" if cell.d_lcd is None else cell.d_lcd, str(cell.all_match).lower()]
            )
        return _write_csv(BINARY_CSV_HEADER if binary else ODD_CSV_HEADER, rows)


class DlcdEntry(BaseModel):
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    d_lcd: int | None = Field(None, description="None when no [n, k] LCD code exists")
    witness: str | None = Field(None, description="Generator of a code attaining d_lcd")
    monotone: bool = Field(..., description="d_lcd(n, k) <= d_lcd(n, k - 1)")


class DlcdTable(VersionedReport):
    """Largest minimum distance of LCD codes per (n, k)"""

    p: int
    n_max: int
    entries: list[DlcdEntry] = Field(default_factory=list)

    @property
    def is_monotone(self) -> bool:
        return all(entry.monotone for entry in self.entries)

    def value(self, n: int, k: int) -> int | None:
        return next(e.d_lcd for e in self.entries if e.n == n and e.k == k)

    def to_csv(self) -> str:
        rows = [
            [self.p, e.n, e.k, "" if e.d_lcd is None else e.d_lcd, str(e.monotone).lower()]
            for e in self.entries
        ]
        return _write_csv(["p", "n", "k", "d_lcd", "monotone"], rows)


# ----------------------------------------------------------------------
# Formula checks
# ----------------------------------------------------------------------
class MassFormulaReport(VersionedReport):
    """Sum of 1/|Aut(C)| over permutation classes of LCD_oo[n, k] against the group-order side"""

    n: int
    k: int
    class_count: int = Field(..., description="Permutation-equivalence classes found")
    sum_inverse_aut: str = Field(..., description="Exact rational a/b")
    rhs: str = Field(..., description="|O_n| / (|St(C_oo)| * n!) as a/b")
    match: bool

    @field_validator("sum_inverse_aut", "rhs")
    @classmethod
    def validate_rational(cls, v):
        Fraction(v)
        return v


class AsymptoticReport(BaseModel):
    """Finite ratio against its limit constant"""

    q: int
    n: int
    k: int
    which: str = Field(..., description="Ratio selector")
    ratio: str = Field(..., description="Exact finite ratio a/b")
    ratio_decimal: str = Field(..., description="Finite ratio rounded to the requested precision")
    partial_product: str = Field(..., description="Exact g_{q,m} = ∏(1 - q^-i) over i <= m, a/b")
    limit_product: str = Field(
        ..., description="Exact truncated product whose inverse estimates the limit, a/b"
    )
    factors: int = Field(..., ge=1, description="Number m of factors in both partial products")
    limit_estimate: str = Field(..., description="Limit constant to the requested precision")
    tail_bound: str = Field(..., description="Bound on the truncation error of the limit")
    precision: int
    distance: str = Field(..., description="|ratio - limit| to the requested precision")


class GroupOrderReport(BaseModel):
    kind: str
    size: int
    p: int
    delta_class: int | None = None
    formula: int
    brute_force: int | None = None
    match: bool | None = None


# ----------------------------------------------------------------------
# CLI responses
# ----------------------------------------------------------------------
class CheckResponse(BaseModel):
    p: int
    n: int
    k: int
    lcd: bool
    type: str | None = Field(None, description="Orbit type when 0 < k < n and LCD")
    hull_dimension: int


class BasisResponse(BaseModel):
    kind: str
    delta: int | None = None
    rows: str = Field(..., description="Basis rows in the matrix text format")


class NormalizeResponse(BaseModel):
    shape: str
    rank: int
    delta: int | None = None
    q: str
    normal: str


class MatrixResponse(BaseModel):
    matrix: str
    rows: int
    cols: int
    min_distance: int | None = None


class CanonicalResponse(BaseModel):
    type: str
    gen: str
    parity: str


class CountResponse(BaseModel):
    p: int
    n: int
    k: int
    type: str | None = None
    count: int


class ErrorResponse(BaseModel):
    """Error response model"""

    error: str = Field(..., description="Error type")
    message: str = Field(..., description="Human-readable error message")
    details: dict[str, Any] | None = Field(None, description="Additional error details")
