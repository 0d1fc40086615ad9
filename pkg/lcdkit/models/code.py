"""Linear code model for lcdkit
A code is stored by the canonical RREF of its generator matrix
"""

from enum import Enum

import numpy as np

from ..core import gf2
from ..core.config import settings
from ..core.errors import (
    BudgetExceededError,
    DimensionMismatchError,
    FieldCharacteristicError,
    NotLcdError,
    PreconditionError,
)
from ..core.field import Field
from ..core.matrix import Matrix


class LcdType(str, Enum):
    """Orbit type of an LCD code: (code parity, dual parity) over GF(2), square class otherwise"""

    OO = "OO"
    OE = "OE"
    EO = "EO"
    PLUS = "Plus"
    MINUS = "Minus"

    @property
    def is_binary(self) -> bool:
        return self in (LcdType.OO, LcdType.OE, LcdType.EO)

    @classmethod
    def parse(cls, text: str) -> "LcdType":
        for member in cls:
            if member.value.lower() == text.strip().lower():
                return member
        raise PreconditionError(
            f"unknown LCD type {text!r}; expected one of {[m.value for m in cls]}"
        )

    @classmethod
    def binary_types(cls) -> tuple["LcdType", ...]:
        return (cls.OO, cls.OE, cls.EO)

    @classmethod
    def odd_types(cls) -> tuple["LcdType", ...]:
        return (cls.PLUS, cls.MINUS)


class LinearCode:
    """An [n, k] linear code over a prime field"""

    __slots__ = ("field", "gen", "_dual")

    def __init__(self, gen: Matrix, *, canonical: bool = False) -> None:
        """Build from any generator matrix; rows are reduced to canonical RREF

        canonical=True skips the reduction for callers that already hold a
        full-rank RREF (the enumeration oracle).
        """
        if not canonical:
            result = gen.rref()
            gen = result.reduced.select_rows(range(result.rank))
        self.field: Field = gen.field
        self.gen: Matrix = gen
        self._dual: LinearCode | None = None

    @classmethod
    def from_text(cls, field: Field, text: str) -> "LinearCode":
        return cls(Matrix.parse(field, text))

    @classmethod
    def zero(cls, field: Field, n: int) -> "LinearCode":
        return cls(Matrix.zeros(field, 0, n), canonical=True)

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and other.gen == self.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        return f"<LinearCode(GF({self.field.p}), [{self.n},{self.k}], gen='{self.gen.format()}')>"

    # ------------------------------------------------------------------
    # Duality and the LCD predicate
    # ------------------------------------------------------------------
    def dual(self) -> "LinearCode":
        """C⊥ as an [n, n-k] code"""
        if self._dual is None:
            self._dual = LinearCode(self.gen.right_kernel(), canonical=True)
        return self._dual

    def parity_check(self) -> Matrix:
        return self.dual().gen

    def gram(self) -> Matrix:
        return self.gen.gram()

    def hull_dimension(self) -> int:
        """dim(C ∩ C⊥) = k - rank(G·Gᵀ)"""
        return self.k - self.gram().rank

    def is_lcd(self) -> bool:
        """LCD iff G·Gᵀ is invertible; the zero code and the full space count as LCD"""
        if self.k == 0:
            return True
        return self.gram().det() != 0

    def is_even_like(self) -> bool:
        """Binary only: every codeword has even weight"""
        if not self.field.is_binary:
            raise FieldCharacteristicError("even-like is defined for binary codes only")
        return all(gf2.weight(row) % 2 == 0 for row in self.gen.packed_rows())

    def classify(self) -> LcdType:
        """Orbit type of a nontrivial LCD code"""
        if not 0 < self.k < self.n:
            raise PreconditionError(
                f"classification needs 0 < k < n, got [{self.n},{self.k}]",
                {"n": self.n, "k": self.k},
            )
        if not self.is_lcd():
            raise NotLcdError("code is not LCD", {"gen": self.gen.format()})
        if self.field.is_binary:
            code_even = self.is_even_like()
            dual_even = self.dual().is_even_like()
            if code_even and dual_even:
                raise AssertionError("binary LCD code with even-like dual cannot be even-like")
            if code_even:
                return LcdType.EO
            return LcdType.OE if dual_even else LcdType.OO
        eta = self.field.legendre(self.gram().det())
        return LcdType.PLUS if eta == 1 else LcdType.MINUS

    # ------------------------------------------------------------------
    # Codewords
    # ------------------------------------------------------------------
    def contains(self, vector) -> bool:
        v = Matrix(self.field, [list(vector)])
        if v.cols != self.n:
            raise DimensionMismatchError(f"vector of length {v.cols} for a code of length {self.n}")
        return Matrix.vstack(self.gen, v).rank == self.k

    def transform(self, q: Matrix) -> "LinearCode":
        """The code C·Q"""
        return LinearCode(self.gen @ q)

    def permuted(self, perm) -> "LinearCode":
        """Move coordinate j to position perm[j]"""
        out = np.zeros_like(self.gen.values)
        out[:, list(perm)] = self.gen.values
        return LinearCode(Matrix(self.field, out))

    def min_distance(self, budget: int | None = None) -> int:
        """Minimum weight over all p^k - 1 nonzero codewords by exhaustive enumeration"""
        if self.k < 1:
            raise PreconditionError("minimum distance of the zero code is undefined")
        budget = budget or settings.distance_budget
        size = self.field.p**self.k
        if size > budget:
            raise BudgetExceededError("min_distance", size, budget)
        if self.field.is_binary:
            return gf2.min_weight(self.gen.packed_rows())
        return self._min_distance_odd()

    def _min_distance_odd(self, chunk: int = 1 << 15) -> int:
        p, k = self.field.p, self.k
        gen = self.gen.entries
        powers = p ** np.arange(k, dtype=np.int64)
        best = self.n
        for start in range(1, p**k, chunk):
            idx = np.arange(start, min(start + chunk, p**k), dtype=np.int64)
            # base-p digits of idx, one message per row
            messages = self.field.array((idx[:, None] // powers[None, :]) % p)
            weights = np.count_nonzero((messages @ gen).view(np.ndarray), axis=1)
            best = min(best, int(weights.min()))
        return best
