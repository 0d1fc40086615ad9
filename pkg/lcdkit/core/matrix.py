"""Dense exact matrices over a prime field

Entries live in an immutable galois FieldArray, so products and elimination
are exact for every prime.  Over GF(2) the elimination routines run on
bit-packed rows instead (see gf2.py); the API is the same for every field.
"""

import re
from typing import NamedTuple

import galois
import numpy as np

from . import gf2
from .errors import DimensionMismatchError, MatrixParseError, PreconditionError, SingularMatrixError
from .field import Field


class RrefResult(NamedTuple):
    reduced: "Matrix"
    rank: int
    pivots: tuple[int, ...]
    transform: "Matrix"


class Matrix:
    """Immutable dense matrix over GF(p)"""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, data) -> None:
        if not isinstance(data, galois.FieldArray):
            data = np.array(data, dtype=object)
        if data.ndim != 2:
            raise DimensionMismatchError(
                f"matrix data must be two-dimensional, got {data.ndim} dimensions"
            )
        arr = field.array(data)
        arr.setflags(write=False)
        self.field = field
        self.entries: galois.FieldArray = arr

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, field.gf.Zeros((rows, cols)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, field.gf.Identity(n))

    @classmethod
    def from_rows(cls, field: Field, rows, cols: int) -> "Matrix":
        """Build from a (possibly empty) sequence of rows of known width"""
        rows = list(rows)
        if not rows:
            return cls.zeros(field, 0, cols)
        return cls(field, rows)

    @classmethod
    def from_bits(cls, field: Field, rows: list[int], cols: int) -> "Matrix":
        """Build a binary matrix from row bitsets"""
        return cls(field, gf2.unpack_rows(rows, cols))

    @classmethod
    def parse(cls, field: Field, text: str) -> "Matrix":
        """Parse the shared text format: rows split by ';' or newline

        Entries are single digits when p < 10, comma-separated integers otherwise
        (commas are also accepted for small p).
        """
        rows = [r.strip() for r in re.split(r"[;\n]", text or "") if r.strip()]
        if not rows:
            raise MatrixParseError("empty matrix text", {"text": text})
        parsed = []
        for row in rows:
            if "," in row or field.p >= 10:
                tokens = [t.strip() for t in row.split(",")]
            else:
                tokens = list(row.replace(" ", ""))
            try:
                values = [int(t) for t in tokens]
            except ValueError as e:
                raise MatrixParseError(f"bad matrix entry in row {row!r}", {"row": row}) from e
            if any(v < 0 or v >= field.p for v in values):
                raise MatrixParseError(
                    f"entries of row {row!r} must lie in [0, {field.p})", {"row": row}
                )
            parsed.append(values)
        if len({len(r) for r in parsed}) != 1:
            raise MatrixParseError("rows have different lengths", {"text": text})
        return cls(field, parsed)

    @classmethod
    def vstack(cls, top: "Matrix", bottom: "Matrix") -> "Matrix":
        top._check_field(bottom)
        if top.cols != bottom.cols:
            raise DimensionMismatchError(f"cannot stack {top.shape} on {bottom.shape}")
        return cls(top.field, np.vstack([top.values, bottom.values]))

    @classmethod
    def block_diag(cls, a: "Matrix", b: "Matrix") -> "Matrix":
        a._check_field(b)
        out = np.zeros((a.rows + b.rows, a.cols + b.cols), dtype=object)
        out[: a.rows, : a.cols] = a.values
        out[a.rows :, a.cols :] = b.values
        return cls(a.field, out)

    # ------------------------------------------------------------------
    # Basic protocol
    # ------------------------------------------------------------------
    @property
    def values(self) -> np.ndarray:
        """Entries as a plain integer ndarray (read-only view)"""
        return self.entries.view(np.ndarray)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> "Matrix":  # noqa: N802
        return Matrix(self.field, self.entries.T)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.shape == self.shape
            and bool(np.array_equal(other.values, self.values))
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.shape, tuple(self.values.ravel().tolist())))

    def __repr__(self) -> str:
        return f"Matrix(GF({self.field.p}), {self.rows}x{self.cols}, {self.format()!r})"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.mul(other)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, self.entries + other.entries)

    def _check_field(self, other: "Matrix") -> None:
        if other.field != self.field:
            raise DimensionMismatchError(
                f"field mismatch: GF({self.field.p}) vs GF({other.field.p})"
            )

    def to_lists(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.values.tolist()]

    def format(self) -> str:
        """Inverse of parse"""
        sep = "" if self.field.p < 10 else ","
        return ";".join(sep.join(str(x) for x in row) for row in self.to_lists())

    def packed_rows(self) -> list[int]:
        """Row bitsets (binary matrices only)"""
        if not self.field.is_binary:
            raise PreconditionError("bit packing needs GF(2)")
        return gf2.pack_rows(self.values)

    def select_rows(self, indices) -> "Matrix":
        picked = np.asarray(list(indices), dtype=np.intp)
        return Matrix(self.field, self.entries[picked])

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------
    def mul(self, other: "Matrix") -> "Matrix":
        """Exact product"""
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        if 0 in (self.rows, self.cols, other.cols):
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, self.entries @ other.entries)

    def gram(self) -> "Matrix":
        """G·Gᵀ"""
        return self.mul(self.T)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and bool(np.array_equal(self.values, self.values.T))

    def is_orthogonal(self) -> bool:
        return self.is_square() and self.gram() == Matrix.identity(self.field, self.rows)

    def rref(self) -> RrefResult:
        """Reduced row-echelon form R with transform·self = R"""
        if self.field.is_binary:
            reduced, pivots, transform = gf2.rref(self.packed_rows(), self.cols)
            return RrefResult(
                Matrix.from_bits(self.field, reduced, self.cols),
                len(pivots),
                tuple(pivots),
                Matrix.from_bits(self.field, transform, self.rows),
            )
        return self._rref_odd()

    def _rref_odd(self) -> RrefResult:
        n_rows, n_cols = self.shape
        if n_rows == 0 or n_cols == 0:
            return RrefResult(self, 0, (), Matrix.identity(self.field, n_rows))
        # reduce [A | I] on the first n_cols columns; the right block records the row operations
        augmented = self.field.array(
            np.hstack([self.values, np.eye(n_rows, dtype=self.values.dtype)])
        )
        work = augmented.row_reduce(ncols=n_cols)
        reduced = work[:, :n_cols]
        pivots = tuple(
            int(np.flatnonzero(row)[0]) for row in reduced.view(np.ndarray) if row.any()
        )
        return RrefResult(
            Matrix(self.field, reduced),
            len(pivots),
            pivots,
            Matrix(self.field, work[:, n_cols:]),
        )

    @property
    def rank(self) -> int:
        if 0 in self.shape:
            return 0
        if self.field.is_binary:
            return gf2.rank(self.packed_rows(), self.cols)
        return int(np.linalg.matrix_rank(self.entries))

    def det(self) -> int:
        """Exact determinant"""
        if not self.is_square():
            raise DimensionMismatchError(f"determinant of non-square {self.shape} matrix")
        if self.rows == 0:
            return 1
        if self.field.is_binary:
            return int(gf2.is_nonsingular(self.packed_rows()))
        return int(np.linalg.det(self.entries))

    def inverse(self) -> "Matrix":
        """m⁻¹ with m·m⁻¹ = I"""
        if not self.is_square():
            raise DimensionMismatchError(f"inverse of non-square {self.shape} matrix")
        rank = self.rank
        if rank < self.rows:
            raise SingularMatrixError(
                f"matrix is singular (rank {rank} < {self.rows})",
                {"matrix": self.format()},
            )
        if self.rows == 0:
            return self
        if self.field.is_binary:
            return self.rref().transform
        return Matrix(self.field, np.linalg.inv(self.entries))

    def right_kernel(self) -> "Matrix":
        """Canonical RREF basis of {x : self·xᵀ = 0}"""
        n = self.cols
        if self.rows == 0:
            return Matrix.identity(self.field, n)
        if n == 0:
            return Matrix.zeros(self.field, 0, 0)
        if self.field.is_binary:
            kernel = self._binary_kernel()
        else:
            kernel = Matrix(self.field, self.entries.null_space())
        return kernel.rref().reduced if kernel.rows else kernel

    def _binary_kernel(self) -> "Matrix":
        n = self.cols
        result = self.rref()
        pivots = result.pivots
        free = [c for c in range(n) if c not in pivots]
        basis = np.zeros((len(free), n), dtype=np.int64)
        reduced = result.reduced.values
        for row, f in enumerate(free):
            basis[row, f] = 1
            for i, pc in enumerate(pivots):
                basis[row, pc] = reduced[i, f]
        return Matrix(self.field, basis)

    def row_space_equal(self, other: "Matrix") -> bool:
        """Compare row spaces through their canonical RREF rows"""
        self._check_field(other)
        if self.cols != other.cols:
            return False
        a, b = self.rref(), other.rref()
        return a.rank == b.rank and a.reduced.select_rows(range(a.rank)) == b.reduced.select_rows(
            range(b.rank)
        )
