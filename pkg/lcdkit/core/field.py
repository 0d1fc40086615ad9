"""Prime field arithmetic GF(p)

Thin wrapper over a galois prime field: elements cross the API as plain
integers in [0, p), while the arithmetic itself and the dense linear algebra
(see matrix.py) run on galois FieldArrays.  The quadratic-character helpers
are only defined for odd p.
"""

from functools import lru_cache

import galois
import numpy as np

from .errors import FieldCharacteristicError, PreconditionError


class Field:
    """The prime field GF(p)"""

    __slots__ = ("p", "gf", "_nonsquare")

    def __init__(self, p: int) -> None:
        if not isinstance(p, int) or isinstance(p, bool) or p < 2 or not galois.is_prime(p):
            raise PreconditionError(f"field modulus must be prime, got {p!r}", {"p": p})
        self.p = p
        self.gf: type[galois.FieldArray] = galois.GF(p)
        self._nonsquare: int | None = None
        if p > 2:
            # smallest positive residue with character -1
            self._nonsquare = next(x for x in range(2, p) if galois.legendre_symbol(x, p) == -1)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __reduce__(self):
        return (GF, (self.p,))

    @property
    def is_binary(self) -> bool:
        return self.p == 2

    # ------------------------------------------------------------------
    # Arrays
    # ------------------------------------------------------------------
    def array(self, data) -> galois.FieldArray:
        """Reduce integer data mod p into a FieldArray

        Entries may be any Python or numpy integers, negative ones included.
        """
        if isinstance(data, self.gf):
            return data.astype(self.gf.dtypes[-1])
        raw = np.array(data, dtype=object)
        if raw.size:
            raw = raw % self.p
        return self.gf(raw.astype(self.gf.dtypes[-1]))

    def _elem(self, a: int) -> galois.FieldArray:
        return self.gf(int(a) % self.p)

    # ------------------------------------------------------------------
    # Element arithmetic
    # ------------------------------------------------------------------
    def elements(self) -> range:
        return range(self.p)

    def add(self, a: int, b: int) -> int:
        return int(self._elem(a) + self._elem(b))

    def sub(self, a: int, b: int) -> int:
        return int(self._elem(a) - self._elem(b))

    def neg(self, a: int) -> int:
        return int(-self._elem(a))

    def mul(self, a: int, b: int) -> int:
        return int(self._elem(a) * self._elem(b))

    def pow(self, a: int, e: int) -> int:
        return int(self._elem(a) ** e)

    def inv(self, a: int) -> int:
        if int(a) % self.p == 0:
            raise PreconditionError("zero has no multiplicative inverse", {"p": self.p})
        return int(self._elem(a) ** -1)

    # ------------------------------------------------------------------
    # Quadratic character
    # ------------------------------------------------------------------
    def _require_odd(self, what: str) -> None:
        if self.p == 2:
            raise FieldCharacteristicError(f"{what} is only defined for odd p", {"p": 2})

    def legendre(self, x: int) -> int:
        """Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise"""
        self._require_odd("legendre")
        return int(galois.legendre_symbol(int(x) % self.p, self.p))

    def is_square(self, x: int) -> bool:
        """Test for quadratic residuosity (0 is also a square)"""
        return bool(self._elem(x).is_square())

    def nonsquare(self) -> int:
        """The canonical nonsquare: smallest residue with character -1"""
        self._require_odd("nonsquare")
        return self._nonsquare

    def sqrt(self, x: int) -> int:
        """Smallest square root of a square x"""
        x = int(x) % self.p
        if self.p == 2 or x == 0:
            return x
        if not self.is_square(x):
            raise PreconditionError(f"{x} is not a square mod {self.p}", {"x": x, "p": self.p})
        root = int(np.sqrt(np.atleast_1d(self._elem(x)))[0])
        return min(root, self.p - root)

    def two_squares(self, z: int) -> tuple[int, int]:
        """Deterministic x, y with x^2 + y^2 = z

        x is the smallest residue for which z - x^2 is a square; y is the
        smallest root of z - x^2.
        """
        self._require_odd("two_squares")
        z = int(z) % self.p
        for x in range(self.p):
            rest = (z - x * x) % self.p
            if self.is_square(rest):
                return x, self.sqrt(rest)
        raise AssertionError(f"no two-square decomposition of {z} mod {self.p}")


@lru_cache(maxsize=None)
def GF(p: int) -> Field:  # noqa: N802
    """Shared Field instance for the prime p"""
    return Field(p)
