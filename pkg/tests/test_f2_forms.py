#!/usr/bin/env python3
"""
f2_forms のユニットテスト
"""

import random
import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.f2_forms import (
    DegenerateFormError,
    DimensionTooLargeError,
    F2BilinearForm,
    F2QuadraticForm,
    F2Vector,
    FormParseError,
    add_forms,
    arf,
    brute_force_zeros,
    change_of_basis,
    classify,
    count_zeros,
    direct_sum,
    evaluate,
    format_form_text,
    hyperbolic_form,
    load_form_file,
    parse_form_text,
    polarize,
    product_of_linear_forms,
    radical,
    random_invertible_matrix,
    random_quadratic_form,
    refinement_holds,
    symplectic_basis,
    zero_count_closed_form,
    zero_form,
)

XY_TEXT = """# q = xy
2
0 0
0 1
1 0
"""

X2_XY_Y2_TEXT = """2
1 1
0 1
1 0
"""


class TestF2Vector:
    """F2Vectorのテストクラス"""

    def test_from_int_bit_order(self):
        """ビット i が (value >> i) & 1 になる"""
        v = F2Vector.from_int(4, 5)
        assert v.bits == (1, 0, 1, 0)
        assert v.to_int() == 5
        assert v.support() == [0, 2]
        assert v.weight() == 2

    def test_addition_is_xor(self):
        """加法は成分ごとの XOR"""
        v = F2Vector.from_bits((1, 1, 0))
        w = F2Vector.from_bits((0, 1, 1))
        assert (v + w).bits == (1, 0, 1)
        assert (v + v).is_zero()

    def test_rejects_non_bits(self):
        """0/1 以外は拒否"""
        with pytest.raises(ValueError):
            F2Vector.from_bits((0, 2))


class TestBilinearForm:
    """F2BilinearFormのテストクラス"""

    def test_rejects_nonzero_diagonal(self):
        """対角成分が1なら交代形式ではない"""
        with pytest.raises(ValueError):
            F2BilinearForm(2, ((1, 0), (0, 0)))

    def test_rejects_asymmetric(self):
        """非対称行列は拒否"""
        with pytest.raises(ValueError):
            F2BilinearForm(2, ((0, 1), (0, 0)))

    def test_standard_symplectic_pairs(self):
        """e_0 と e_1 がペアになる"""
        b = F2BilinearForm.standard_symplectic(4)
        assert b.pair(F2Vector.unit(4, 0), F2Vector.unit(4, 1)) == 1
        assert b.pair(F2Vector.unit(4, 0), F2Vector.unit(4, 2)) == 0
        assert b.is_nondegenerate()


class TestClassification:
    """分類と零点数のテストクラス"""

    @pytest.fixture
    def rng(self):
        return random.Random(1234)

    def test_xy_and_x2_xy_y2(self):
        """xy は Arf 0 で零点3、x²+xy+y² は Arf 1 で零点1"""
        assert arf(hyperbolic_form(1, 0)) == 0
        assert count_zeros(hyperbolic_form(1, 0)) == 3
        assert arf(hyperbolic_form(1, 1)) == 1
        assert count_zeros(hyperbolic_form(1, 1)) == 1

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    @pytest.mark.parametrize("arf_value", [0, 1])
    def test_hyperbolic_arf(self, k, arf_value):
        """双曲形式の Arf は指定した値"""
        q = hyperbolic_form(k, arf_value)
        assert arf(q) == arf_value
        assert count_zeros(q) == brute_force_zeros(q)

    def test_closed_form_values(self):
        """2^r · 2^{k-1}(2^k ± 1)"""
        assert zero_count_closed_form(1, 0) == 3
        assert zero_count_closed_form(1, 1) == 1
        assert zero_count_closed_form(2, 0) == 10
        assert zero_count_closed_form(2, 1) == 6
        assert zero_count_closed_form(1, 0, radical_dim=2) == 12
        assert zero_count_closed_form(0, 0, radical_dim=3) == 8

    def test_arf_additive_under_direct_sum(self):
        """Arf 1 同士の直和は Arf 0"""
        q = direct_sum(hyperbolic_form(1, 1), hyperbolic_form(1, 1))
        assert arf(q) == 0
        assert count_zeros(q) == 10

    def test_arf_additive_all_pairs(self, rng):
        """次元8以下の非退化形式の全ペアで Arf は加法的"""
        forms = []
        for k in range(1, 5):
            for arf_value in (0, 1):
                moved = change_of_basis(hyperbolic_form(k, arf_value), random_invertible_matrix(rng, 2 * k))
                forms.append((moved, arf_value))
        for q1, arf1 in forms:
            for q2, arf2 in forms:
                assert arf(direct_sum(q1, q2)) == arf1 ^ arf2

    def test_nonzero_on_radical(self):
        """根基上で消えない形式は Arf 未定義で零点は半分"""
        q = F2QuadraticForm(3, (0, 0, 1), F2BilinearForm.zero(3))
        c = classify(q)
        assert not c.q_on_radical_zero
        assert c.arf is None
        assert count_zeros(q) == 4 == brute_force_zeros(q)

    def test_degenerate_radical_vanishing(self):
        """根基上で消える退化形式"""
        q = direct_sum(hyperbolic_form(2, 1), zero_form(2))
        c = classify(q)
        assert c.radical_dim == 2
        assert c.hyperbolic_rank == 2
        assert c.arf == 1
        assert count_zeros(q) == 4 * 6

    def test_radical_of_zero_form(self):
        """0形式の根基は全空間"""
        assert len(radical(F2BilinearForm.zero(3))) == 3
        assert radical(F2BilinearForm.standard_symplectic(4)) == []

    def test_symplectic_basis_requires_nondegenerate(self):
        """退化形式には DegenerateFormError"""
        with pytest.raises(DegenerateFormError):
            symplectic_basis(F2BilinearForm.zero(2))

    def test_symplectic_basis_is_symplectic(self, rng):
        """得られた基底は ⟨a_i, b_j⟩ = δ_ij を満たす"""
        q = random_quadratic_form(rng, 8, 'nondegenerate')
        pairs = symplectic_basis(q.form)
        assert len(pairs) == 4
        for i, (a, b) in enumerate(pairs):
            assert q.form.pair(a, b) == 1
            for j, (c, d) in enumerate(pairs):
                if i != j:
                    assert q.form.pair(a, c) == q.form.pair(a, d) == 0
                    assert q.form.pair(b, c) == q.form.pair(b, d) == 0

    def test_closed_form_matches_brute_force(self, rng):
        """ランダムな形式で閉じた式と全数列挙が一致"""
        for index in range(60):
            kind = ('random', 'nondegenerate', 'vanishing_radical')[index % 3]
            dim = rng.randint(1, 10)
            if kind == 'nondegenerate' and dim % 2:
                dim += 1
            q = random_quadratic_form(rng, dim, kind)
            assert count_zeros(q) == brute_force_zeros(q)

    def test_arf_invariant_under_change_of_basis(self, rng):
        """基底変換で Arf は変わらない"""
        for arf_value in (0, 1):
            q = hyperbolic_form(3, arf_value)
            moved = change_of_basis(q, random_invertible_matrix(rng, 6))
            assert arf(moved) == arf_value

    def test_arf_basis_independent_random(self, rng):
        """100個のランダムな非退化形式で基底変換後も Arf が同じ"""
        for _ in range(100):
            dim = 2 * rng.randint(1, 6)
            q = random_quadratic_form(rng, dim, 'nondegenerate')
            moved = change_of_basis(q, random_invertible_matrix(rng, dim))
            assert arf(moved) == arf(q)
            assert count_zeros(moved) == count_zeros(q)

    def test_brute_force_guard(self):
        """次元ガードを超えると DimensionTooLargeError"""
        with pytest.raises(DimensionTooLargeError):
            brute_force_zeros(zero_form(5), max_dim=4)


class TestRefinement:
    """二次精密化と構成のテストクラス"""

    def test_polarization_recovers_form(self):
        """q の極化は q.form"""
        q = hyperbolic_form(2, 1)
        assert polarize(q) == F2BilinearForm.standard_symplectic(4)

    def test_polarization_of_random_forms(self):
        """次元12以下の生成した形式で極化は form に一致し、全ペアで精密化"""
        rng = random.Random(12)
        for dim in range(1, 13):
            kinds = ('random', 'vanishing_radical') + (('nondegenerate',) if dim % 2 == 0 else ())
            for kind in kinds:
                q = random_quadratic_form(rng, dim, kind)
                assert polarize(q) == q.form
                assert refinement_holds(q)

    def test_refinement_holds(self):
        """正しい双線形形式では成り立ち、0形式では成り立たない"""
        q = hyperbolic_form(1, 0)
        assert refinement_holds(q)
        assert not refinement_holds(q, F2BilinearForm.zero(2))

    def test_random_forms_are_refinements(self):
        """生成した形式は全て自分の form の精密化"""
        rng = random.Random(7)
        for kind in ('random', 'vanishing_radical'):
            assert refinement_holds(random_quadratic_form(rng, 6, kind))

    def test_substitution_identity(self):
        """(x+u)(x+y+u)+(y+v)(y+u+v) = (x²+xy+y²)+(u²+uv+v²) が F2^4 の全点で成立"""
        lhs = add_forms(
            product_of_linear_forms(F2Vector.from_bits((1, 0, 1, 0)), F2Vector.from_bits((1, 1, 1, 0))),
            product_of_linear_forms(F2Vector.from_bits((0, 1, 0, 1)), F2Vector.from_bits((0, 1, 1, 1))),
        )
        rhs = direct_sum(hyperbolic_form(1, 1), hyperbolic_form(1, 1))
        for value in range(16):
            v = F2Vector.from_int(4, value)
            assert evaluate(lhs, v) == evaluate(rhs, v)


class TestFormText:
    """二次形式テキスト形式のテストクラス"""

    def test_parse_xy(self):
        """コメントつきの xy を解析"""
        q = parse_form_text(XY_TEXT)
        assert q == hyperbolic_form(1, 0)
        assert classify(q).arf == 0

    def test_parse_arf_one(self):
        """x²+xy+y² は Arf 1、零点1"""
        q = parse_form_text(X2_XY_Y2_TEXT)
        assert arf(q) == 1
        assert count_zeros(q) == 1

    def test_asymmetric_reports_line(self):
        """非対称行列は行番号つきの FormParseError"""
        with pytest.raises(FormParseError) as exc:
            parse_form_text("2\n0 0\n0 1\n0 0\n")
        assert exc.value.line == 4
        assert exc.value.column == 1

    def test_bad_token_reports_column(self):
        """0/1 以外のトークンの列番号"""
        with pytest.raises(FormParseError) as exc:
            parse_form_text("2\n0 x\n0 1\n1 0\n")
        assert exc.value.line == 2
        assert exc.value.column == 3

    def test_wrong_row_count(self):
        """行数不足"""
        with pytest.raises(FormParseError):
            parse_form_text("3\n0 0 0\n0 1 0\n")

    def test_format_is_parseable(self, tmp_path):
        """書き出したテキストは読み戻せる"""
        q = direct_sum(hyperbolic_form(2, 1), zero_form(1))
        path = tmp_path / 'form.txt'
        path.write_text(format_form_text(q), encoding='utf-8')
        assert load_form_file(path) == q


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
