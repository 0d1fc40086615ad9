"""Test prime field arithmetic and the quadratic character"""

import itertools

import pytest

from lcdkit.core.errors import FieldCharacteristicError, PreconditionError
from lcdkit.core.field import GF, Field


class TestFieldConstruction:
    """Test field validation and identity"""

    @pytest.mark.parametrize("p", [0, 1, 4, 9, 15])
    def test_rejects_non_prime(self, p):
        with pytest.raises(PreconditionError):
            Field(p)

    def test_factory_shares_instances(self):
        assert GF(7) is GF(7)
        assert GF(7) == Field(7)
        assert hash(GF(7)) == hash(Field(7))

    @pytest.mark.parametrize("p, expected", [(3, 2), (5, 2), (7, 3)])
    def test_nonsquare(self, p, expected):
        f = GF(p)
        assert f.nonsquare() == expected
        assert f.legendre(expected) == -1

    def test_binary_rejects_quadratic_helpers(self, gf2):
        with pytest.raises(FieldCharacteristicError):
            gf2.legendre(1)
        with pytest.raises(FieldCharacteristicError):
            gf2.nonsquare()
        with pytest.raises(FieldCharacteristicError):
            gf2.two_squares(1)


class TestArithmetic:
    """Test field axioms on exhaustive small triples"""

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_axioms(self, p):
        f = GF(p)
        for a, b, c in itertools.product(f.elements(), repeat=3):
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        for a in range(1, p):
            assert f.mul(a, f.inv(a)) == 1

    def test_inverse_of_zero(self, gf5):
        with pytest.raises(PreconditionError):
            gf5.inv(0)

    def test_sub_and_neg(self, gf5):
        assert gf5.sub(1, 3) == 3
        assert gf5.neg(2) == 3
        assert gf5.pow(2, 4) == 1


class TestQuadraticCharacter:
    """Test legendre, sqrt and two_squares"""

    @pytest.mark.parametrize("p, x, expected", [(3, 1, 1), (3, 2, -1), (7, 2, 1), (5, 0, 0)])
    def test_legendre_examples(self, p, x, expected):
        assert GF(p).legendre(x) == expected

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_legendre_is_multiplicative(self, p):
        f = GF(p)
        for x in range(1, p):
            assert f.legendre(x * x) == 1
            for y in range(1, p):
                assert f.legendre(x) * f.legendre(y) == f.legendre(x * y)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
    def test_sqrt_returns_smallest_root(self, p):
        f = GF(p)
        for x in range(p):
            if f.is_square(x):
                root = f.sqrt(x)
                assert root * root % p == x
                assert root <= p - root or root == 0

    def test_sqrt_of_nonsquare(self, gf3):
        with pytest.raises(PreconditionError):
            gf3.sqrt(2)

    @pytest.mark.parametrize(
        "p, z, expected", [(3, 0, (0, 0)), (3, 2, (1, 1)), (7, 3, (1, 3))]
    )
    def test_two_squares_examples(self, p, z, expected):
        assert GF(p).two_squares(z) == expected

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_two_squares_covers_every_element(self, p):
        f = GF(p)
        for z in range(p):
            x, y = f.two_squares(z)
            assert (x * x + y * y) % p == z


class TestFieldArrays:
    """Test the galois array backing"""

    def test_array_reduces_integers(self, gf3):
        arr = gf3.array([[-1, 5], [3, 7]])
        assert isinstance(arr, gf3.gf)
        assert arr.tolist() == [[2, 2], [0, 1]]

    def test_backing_field_order(self, gf5):
        assert gf5.gf.order == 5

    def test_large_prime_character(self):
        p = 2147483629
        f = GF(p)
        assert f.legendre(4) == 1
        assert f.sqrt(4) == 2
        assert f.mul(p - 1, p - 1) == 1
