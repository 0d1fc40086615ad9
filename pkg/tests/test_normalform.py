"""Test congruence normal forms, shortening, canonical codes and transporters"""

import pytest

from lcdkit.core.errors import (
    DimensionMismatchError,
    FieldCharacteristicError,
    NotLcdError,
    PreconditionError,
)
from lcdkit.core.field import GF
from lcdkit.core.matrix import Matrix
from lcdkit.models.code import LcdType, LinearCode
from lcdkit.services.normalform import (
    BasisKind,
    CongruenceShape,
    adjusted_symplectic_basis,
    binary_pairs_agree,
    canonical_code,
    canonical_lcd_code,
    congruence_normalize,
    in_stabilizer,
    lcd_basis,
    normal_form_matrix,
    shorten_lcd,
    stabilizer_element,
    transporter,
)
from lcdkit.services.oracle import enumerate_codes
from tests.utils.assertions import CodeAssertions, MatrixAssertions
from tests.utils.factories import CodeFactory, MatrixFactory


def _lcd_codes(n: int, f):
    for k in range(1, n):
        for code in enumerate_codes(n, k, f):
            if code.is_lcd():
                yield code


class TestCongruence:
    """Test congruence_normalize"""

    def test_binary_mixed_form(self, gf2):
        result = congruence_normalize(Matrix(gf2, [[1, 1], [1, 0]]))
        assert result.q_transform == Matrix(gf2, [[1, 0], [1, 1]])
        assert result.normal == Matrix.identity(gf2, 2)
        assert result.shape == CongruenceShape.IDENTITY_BLOCK
        assert result.delta is None

    def test_binary_alternating(self, gf2):
        j2 = Matrix(gf2, [[0, 1], [1, 0]])
        result = congruence_normalize(j2)
        assert result.shape == CongruenceShape.ALTERNATING_J_BLOCKS
        assert result.normal == j2
        assert result.rank == 2

    def test_identity_plus_pair_becomes_identity(self, gf2):
        m = Matrix.block_diag(Matrix(gf2, [[1]]), Matrix(gf2, [[0, 1], [1, 0]]))
        result = congruence_normalize(m)
        assert result.normal == Matrix.identity(gf2, 3)

    def test_odd_nonsquare_diagonal(self, gf3):
        result = congruence_normalize(Matrix(gf3, [[2, 0], [0, 2]]))
        assert result.normal == Matrix.identity(gf3, 2)
        assert result.delta == 1

    def test_odd_single_nonsquare(self, gf3):
        result = congruence_normalize(Matrix(gf3, [[1, 0], [0, 2]]))
        assert result.normal == Matrix(gf3, [[1, 0], [0, 2]])
        assert result.delta == 2

    def test_zero_diagonal_odd(self, gf5):
        result = congruence_normalize(Matrix(gf5, [[0, 1], [1, 0]]))
        assert result.rank == 2
        assert result.shape == CongruenceShape.DIAG_ONE_DELTA

    def test_degenerate(self, gf3):
        result = congruence_normalize(Matrix(gf3, [[1, 1], [1, 1]]))
        assert result.rank == 1
        assert result.normal == normal_form_matrix(gf3, 2, 1, CongruenceShape.DIAG_ONE_DELTA, 1)

    def test_rejects_asymmetric(self, gf2):
        with pytest.raises(PreconditionError):
            congruence_normalize(Matrix(gf2, [[1, 1], [0, 1]]))

    def test_random_symmetric(self, small_field, rng):
        for size in range(1, 9):
            for _ in range(10):
                m = MatrixFactory.random_symmetric(small_field, size, rng)
                result = congruence_normalize(m)
                MatrixAssertions.assert_invertible(result.q_transform)
                assert result.q_transform @ m @ result.q_transform.T == result.normal
                assert result.rank == m.rank

    @pytest.mark.slow
    def test_thousand_symmetric_per_field(self, small_field, rng):
        for i in range(1000):
            size = i % 8 + 1
            m = MatrixFactory.random_symmetric(small_field, size, rng)
            result = congruence_normalize(m)
            MatrixAssertions.assert_invertible(result.q_transform)
            assert result.q_transform @ m @ result.q_transform.T == result.normal
            assert result.rank == m.rank
            expected = normal_form_matrix(small_field, size, result.rank, result.shape, result.delta)
            assert result.normal == expected
            if result.shape == CongruenceShape.ALTERNATING_J_BLOCKS:
                assert result.rank % 2 == 0

    @pytest.mark.parametrize("diagonal, delta", [([2, 2, 3, 2, 1, 3], 2), ([2, 3, 2, 3, 1, 1], 1)])
    def test_several_nonsquare_pivots(self, gf5, diagonal, delta):
        size = len(diagonal)
        m = Matrix(gf5, [[diagonal[i] if i == j else 0 for j in range(size)] for i in range(size)])
        result = congruence_normalize(m)
        assert result.rank == size
        assert result.q_transform @ m @ result.q_transform.T == result.normal
        assert result.delta == delta

    def test_binary_identity_absorbs_many_pairs(self, gf2):
        j2 = Matrix(gf2, [[0, 1], [1, 0]])
        m = Matrix.block_diag(Matrix.block_diag(j2, Matrix(gf2, [[1]])), Matrix.block_diag(j2, j2))
        result = congruence_normalize(m)
        assert result.shape == CongruenceShape.IDENTITY_BLOCK
        assert result.normal == Matrix.identity(gf2, 7)


class TestLcdBasis:
    """Test normalized bases of LCD codes"""

    def test_orthonormal_binary(self, gf2):
        code = CodeFactory.from_text(gf2, "100;010")
        basis = lcd_basis(code)
        assert basis.kind == BasisKind.ORTHONORMAL
        CodeAssertions.assert_basis_of(basis, code)

    def test_symplectic_binary(self, gf2):
        code = CodeFactory.from_text(gf2, "110;011")
        basis = lcd_basis(code)
        assert basis.kind == BasisKind.SYMPLECTIC
        CodeAssertions.assert_basis_of(basis, code)

    def test_minus_code_delta(self, gf3):
        code = canonical_lcd_code(LcdType.MINUS, 3, 1, gf3)
        basis = lcd_basis(code)
        assert basis.kind == BasisKind.DIAG_ONE_DELTA
        assert basis.delta == gf3.nonsquare()

    def test_rejects_non_lcd(self, gf2):
        with pytest.raises(NotLcdError):
            lcd_basis(CodeFactory.from_text(gf2, "11"))

    def test_rejects_zero_code(self, gf2):
        with pytest.raises(PreconditionError):
            lcd_basis(LinearCode.zero(gf2, 3))

    @pytest.mark.slow
    def test_every_binary_lcd_code(self, gf2):
        for n in range(2, 8):
            for code in _lcd_codes(n, gf2):
                basis = lcd_basis(code)
                CodeAssertions.assert_basis_of(basis, code)
                expected = BasisKind.SYMPLECTIC if code.is_even_like() else BasisKind.ORTHONORMAL
                assert basis.kind == expected

    def test_every_ternary_lcd_code(self, gf3):
        for n in range(2, 5):
            for code in _lcd_codes(n, gf3):
                basis = lcd_basis(code)
                CodeAssertions.assert_basis_of(basis, code)
                assert (basis.delta == 1) == (code.classify() == LcdType.PLUS)


class TestAdjustedBasis:
    """Test symplectic bases whose pairs agree at a coordinate"""

    def test_pairs_agree(self, gf2):
        code = CodeFactory.from_text(gf2, "110;011")
        for coord in range(3):
            basis = adjusted_symplectic_basis(code, coord)
            assert binary_pairs_agree(basis, coord)
            CodeAssertions.assert_basis_of(basis, code)

    def test_adjusted_pair_example(self, gf2):
        # 110 and 101 are the only codewords of span{110, 011} that agree at coordinate 0
        basis = adjusted_symplectic_basis(CodeFactory.from_text(gf2, "110;011"), 0)
        assert sorted(basis.rows.format().split(";")) == ["101", "110"]
        assert basis.rows.gram() == Matrix(gf2, [[0, 1], [1, 0]])

    def test_every_even_like_code(self, gf2):
        for n in range(3, 7):
            for code in _lcd_codes(n, gf2):
                if not code.is_even_like():
                    continue
                for coord in range(n):
                    basis = adjusted_symplectic_basis(code, coord)
                    assert binary_pairs_agree(basis, coord)
                    CodeAssertions.assert_basis_of(basis, code)

    def test_rejects_odd_like(self, gf2):
        with pytest.raises(PreconditionError):
            adjusted_symplectic_basis(CodeFactory.from_text(gf2, "100"))

    def test_rejects_odd_field(self, gf3):
        with pytest.raises(FieldCharacteristicError):
            adjusted_symplectic_basis(CodeFactory.from_text(gf3, "100"))


class TestShorten:
    """Test the LCD shortening construction"""

    def test_even_like_example(self, gf2):
        code = CodeFactory.from_text(gf2, "110;011")
        shortened = shorten_lcd(code, 0)
        CodeAssertions.assert_same_code(shortened, CodeFactory.from_text(gf2, "111"))

    def test_odd_like_example(self, gf2):
        code = LinearCode(Matrix.identity(gf2, 3).select_rows([0, 1]))
        shortened = shorten_lcd(code)
        assert shortened.k == 1
        CodeAssertions.assert_lcd(shortened)

    def test_zero_coordinate_branch(self, gf2):
        code = CodeFactory.from_text(gf2, "0110;0011")
        shortened = shorten_lcd(code, 0)
        assert shortened.k == 1
        CodeAssertions.assert_lcd(shortened)
        assert shortened.min_distance() >= code.min_distance()

    def test_rejects_dimension_one(self, gf2):
        with pytest.raises(PreconditionError):
            shorten_lcd(CodeFactory.from_text(gf2, "111"))

    def test_rejects_non_lcd(self, gf2):
        with pytest.raises(NotLcdError):
            shorten_lcd(CodeFactory.from_text(gf2, "1100;0011"))

    def test_rejects_bad_coordinate(self, gf2):
        with pytest.raises(PreconditionError):
            shorten_lcd(CodeFactory.from_text(gf2, "110;011"), 3)

    @pytest.mark.slow
    def test_every_binary_lcd_code(self, gf2):
        for n in range(3, 8):
            for code in _lcd_codes(n, gf2):
                if code.k < 2:
                    continue
                d = code.min_distance()
                for coord in range(n):
                    shortened = shorten_lcd(code, coord)
                    assert shortened.k == code.k - 1
                    CodeAssertions.assert_lcd(shortened)
                    assert shortened.min_distance() >= d


class TestCanonical:
    """Test the canonical orbit representatives"""

    def test_oo_example(self, gf2):
        gen, parity = canonical_code(LcdType.OO, 3, 2, gf2)
        assert gen.format() == "100;010"
        assert parity.format() == "001"

    def test_oe_example(self, gf2):
        gen, parity = canonical_code(LcdType.OE, 3, 1, gf2)
        assert gen.format() == "111"
        assert parity.format() == "110;011"

    def test_minus_example(self, gf3):
        gen, _ = canonical_code(LcdType.MINUS, 3, 1, gf3)
        assert gen.format() == "110"

    @pytest.mark.parametrize(
        "t, n, k", [(LcdType.OE, 4, 1), (LcdType.EO, 4, 1), (LcdType.EO, 5, 3)]
    )
    def test_empty_classes(self, gf2, t, n, k):
        with pytest.raises(PreconditionError):
            canonical_code(t, n, k, gf2)

    def test_type_field_mismatch(self, gf2, gf3):
        with pytest.raises(FieldCharacteristicError):
            canonical_code(LcdType.PLUS, 3, 1, gf2)
        with pytest.raises(FieldCharacteristicError):
            canonical_code(LcdType.OO, 3, 1, gf3)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_binary_representatives(self, gf2, n):
        for k in range(1, n):
            for t in LcdType.binary_types():
                if (t == LcdType.OE and (n - k) % 2) or (t == LcdType.EO and k % 2):
                    continue
                gen, parity = canonical_code(t, n, k, gf2)
                code = LinearCode(gen)
                assert code.k == k
                assert code.classify() == t
                CodeAssertions.assert_same_code(code.dual(), LinearCode(parity))

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_odd_representatives(self, p):
        f = GF(p)
        for n in range(2, 7):
            for k in range(1, n):
                for t in LcdType.odd_types():
                    gen, parity = canonical_code(t, n, k, f)
                    code = LinearCode(gen)
                    assert code.classify() == t
                    CodeAssertions.assert_same_code(code.dual(), LinearCode(parity))


class TestTransporter:
    """Test orthogonal maps between codes of one type"""

    def test_binary_example(self, gf2):
        c1 = CodeFactory.from_text(gf2, "100")
        c2 = CodeFactory.from_text(gf2, "001")
        q = transporter(c1, c2)
        MatrixAssertions.assert_orthogonal(q)
        CodeAssertions.assert_same_code(c1.transform(q), c2)

    def test_every_pair_reaches_canonical(self, small_field):
        for n in range(2, 5):
            for code in _lcd_codes(n, small_field):
                target = canonical_lcd_code(code.classify(), n, code.k, small_field)
                q = transporter(code, target)
                MatrixAssertions.assert_orthogonal(q)
                CodeAssertions.assert_same_code(code.transform(q), target)

    def test_sampled_pairs(self, small_field, rng):
        for _ in range(20):
            c1 = CodeFactory.random_lcd(small_field, 6, 3, rng)
            c2 = CodeFactory.random_lcd(small_field, 6, 3, rng)
            if c1.classify() != c2.classify():
                continue
            q = transporter(c1, c2)
            MatrixAssertions.assert_orthogonal(q)
            CodeAssertions.assert_same_code(c1.transform(q), c2)

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [2, 3])
    def test_census_pairs(self, p, rng):
        f = GF(p)
        by_type = {}
        for code in _lcd_codes(5, f):
            by_type.setdefault((code.k, code.classify()), []).append(code)
        groups = [codes for codes in by_type.values() if len(codes) > 1]
        for _ in range(250):
            codes = groups[rng.integers(len(groups))]
            i, j = rng.choice(len(codes), size=2, replace=False)
            q = transporter(codes[i], codes[j])
            MatrixAssertions.assert_orthogonal(q)
            CodeAssertions.assert_same_code(codes[i].transform(q), codes[j])

    def test_different_types(self, gf2):
        with pytest.raises(PreconditionError):
            transporter(CodeFactory.from_text(gf2, "100"), CodeFactory.from_text(gf2, "111"))

    def test_different_shapes(self, gf2):
        with pytest.raises(DimensionMismatchError):
            transporter(CodeFactory.from_text(gf2, "100"), CodeFactory.from_text(gf2, "1000"))


class TestStabilizer:
    """Test stabilizer construction and membership"""

    def test_identity_blocks(self, gf2):
        code = CodeFactory.from_text(gf2, "100")
        q = stabilizer_element(code, Matrix.identity(gf2, 1), Matrix.identity(gf2, 2))
        assert q == Matrix.identity(gf2, 3)

    def test_swap_in_dual(self, gf2):
        code = CodeFactory.from_text(gf2, "100")
        swap = Matrix(gf2, [[0, 1], [1, 0]])
        q = stabilizer_element(code, Matrix.identity(gf2, 1), swap)
        MatrixAssertions.assert_orthogonal(q)
        assert in_stabilizer(code, q)

    def test_odd_sign_flip(self, gf5):
        code = canonical_lcd_code(LcdType.PLUS, 4, 2, gf5)
        flip = Matrix(gf5, [[4, 0], [0, 1]])
        q = stabilizer_element(code, flip, Matrix.identity(gf5, 2))
        assert in_stabilizer(code, q)
        assert q != Matrix.identity(gf5, 4)

    def test_rejects_non_isometry(self, gf2):
        code = CodeFactory.from_text(gf2, "100")
        with pytest.raises(PreconditionError):
            stabilizer_element(code, Matrix.identity(gf2, 1), Matrix(gf2, [[1, 1], [0, 1]]))

    def test_rejects_wrong_blocks(self, gf2):
        code = CodeFactory.from_text(gf2, "100")
        with pytest.raises(DimensionMismatchError):
            stabilizer_element(code, Matrix.identity(gf2, 2), Matrix.identity(gf2, 1))

    def test_membership(self, gf2):
        code = CodeFactory.from_text(gf2, "100")
        assert in_stabilizer(code, Matrix.identity(gf2, 3))
        cycle = Matrix(gf2, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert not in_stabilizer(code, cycle)
        assert not in_stabilizer(code, Matrix(gf2, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]))

    def test_pair_swap_on_even_like_code(self, gf2):
        code = CodeFactory.from_text(gf2, "110;011")
        j2 = Matrix(gf2, [[0, 1], [1, 0]])
        q = stabilizer_element(code, j2, Matrix.identity(gf2, 1))
        MatrixAssertions.assert_orthogonal(q)
        assert in_stabilizer(code, q)
        # swapping the generators 101 and 011 swaps coordinates 0 and 1
        assert q == Matrix(gf2, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])

    def test_reversal_fixes_even_like_code(self, gf2):
        code = CodeFactory.from_text(gf2, "110;011")
        reversal = Matrix(gf2, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
        assert in_stabilizer(code, reversal)

    def test_swap_moves_coordinate_line(self, gf2):
        code = CodeFactory.from_text(gf2, "10")
        assert not in_stabilizer(code, Matrix(gf2, [[0, 1], [1, 0]]))
