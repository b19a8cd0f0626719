#!/usr/bin/env python3
"""
spectral_invariants のユニットテスト
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.spectral_invariants import (
    KIND_SL,
    KIND_SP,
    DegreeLedger,
    OddEllError,
    c1_from_ell,
    canonical_c1_sp,
    canonical_exponents_sl,
    canonical_exponents_sp,
    canonical_spin_degree,
    canonical_w2_sl,
    canonical_w_exponents_sp,
    character_variety_dim,
    direct_image_degree,
    direct_image_trivial_ledger,
    dirac_rank_check,
    geometry,
    h1_splitting,
    hz_dim,
    lambda_rank,
    lefschetz_dims,
    milnor_wood_sl2,
    milnor_wood_sp,
    norm_map_degree,
    pullback_theta_parity,
)


class TestGeometry:
    """CurveGeometryのテストクラス"""

    def test_sl_n2_g2(self):
        """SL(2), g=2: g_S=5, p=3"""
        geo = geometry(KIND_SL, 2, 2)
        assert geo.g_S == 5
        assert geo.p == 3
        assert geo.N is None

    def test_sp_m1_g2(self):
        """Sp(2), g=2: g_S=5, g_Sbar=2, N=4, p=3"""
        geo = geometry(KIND_SP, 1, 2)
        assert (geo.g_S, geo.g_Sbar, geo.N, geo.p, geo.q) == (5, 2, 4, 3, 2)
        assert geo.group_label == 'Sp(2,R)'

    def test_riemann_hurwitz_grid(self):
        """m ≤ 5, g ≤ 8 で Riemann-Hurwitz と Prym 次元の分解"""
        for m in range(1, 6):
            for g in range(2, 9):
                geo = geometry(KIND_SP, m, g)
                assert 2 - 2 * geo.g_S == 2 * (2 - 2 * geo.g_Sbar) - geo.N
                assert geo.p == (2 * m * m + m) * (g - 1)

    @pytest.mark.parametrize("kind,rank,g", [(KIND_SL, 1, 2), (KIND_SL, 3, 1), (KIND_SP, 0, 2), ('so', 3, 2)])
    def test_guards(self, kind, rank, g):
        """範囲外のパラメータ"""
        with pytest.raises(ValueError):
            geometry(kind, rank, g)

    def test_hz_dim(self):
        """4m(g-1) - 2"""
        assert hz_dim(1, 2) == 2
        assert hz_dim(2, 3) == 14

    def test_character_variety_and_h1(self):
        """表現空間の次元 = 2p、H¹ の分解"""
        assert character_variety_dim(KIND_SL, 2, 2) == 6
        assert character_variety_dim(KIND_SP, 1, 2) == 6
        assert h1_splitting(3, 2) == (20, 4, 16)


class TestCanonicalSections:
    """標準切断のテストクラス"""

    def test_exponents_sl(self):
        """n=3: (-1, 0, 1)、n=2: (-1/2, 1/2)"""
        assert canonical_exponents_sl(3).exponents == (-1, 0, 1)
        assert canonical_exponents_sl(2).exponents == (Fraction(-1, 2), Fraction(1, 2))
        for n in range(2, 10):
            ledger = canonical_exponents_sl(n)
            assert ledger.exponent_sum() == 0
            assert ledger.is_symmetric()

    def test_exponents_sp(self):
        """V と W の台帳"""
        assert canonical_exponents_sp(1).exponents == (Fraction(-1, 2), Fraction(1, 2))
        assert canonical_w_exponents_sp(2).exponents == (Fraction(3, 2), Fraction(-1, 2))
        assert canonical_w_exponents_sp(3).exponent_sum() == Fraction(3, 2)

    def test_ledger_rejects_quarter(self):
        """分母4の指数は拒否"""
        with pytest.raises(ValueError):
            DegreeLedger((Fraction(1, 4),))

    def test_ledger_degrees(self):
        """次数 = 指数 × (2g-2)"""
        assert canonical_exponents_sl(2).degrees(3) == (-2, 2)

    @pytest.mark.parametrize("n,g,expected", [(4, 2, 4), (3, 3, 4), (2, 2, 1)])
    def test_spin_degree(self, n, g, expected):
        """m²(g-1) または m(m+1)(g-1)"""
        assert canonical_spin_degree(n, g) == expected

    @pytest.mark.parametrize("n,g,expected", [(5, 2, 0), (5, 3, 0), (4, 2, 0), (2, 2, 1), (2, 3, 0)])
    def test_canonical_w2(self, n, g, expected):
        """n 奇数で0、n=2m で g 偶数なら m mod 2"""
        assert canonical_w2_sl(n, g) == expected

    def test_w2_parity_grid(self):
        """w2 とスピン次数の偶奇が n ≤ 10, g ≤ 8 で一致"""
        for n in range(2, 11):
            for g in range(2, 9):
                assert canonical_w2_sl(n, g) == canonical_spin_degree(n, g) % 2

    @pytest.mark.parametrize("m,g,expected", [(1, 2, 1), (2, 3, 4), (3, 2, 3)])
    def test_canonical_c1_sp(self, m, g, expected):
        """c1(W) = m(g-1)"""
        assert canonical_c1_sp(m, g) == expected

    def test_pullback_theta_parity(self):
        """n 奇数で0、n=2m で m(g-1) mod 2"""
        assert pullback_theta_parity(3, 2) == 0
        assert pullback_theta_parity(2, 2) == 1
        assert pullback_theta_parity(2, 3) == 0
        assert pullback_theta_parity(6, 2) == 1


class TestCharacteristicClasses:
    """ℓ・c1・Milnor-Wood のテストクラス"""

    def test_milnor_wood(self):
        """|c1| ≤ m(g-1)"""
        assert milnor_wood_sp(1, 2, 1)
        assert not milnor_wood_sp(1, 2, 2)
        assert milnor_wood_sp(3, 5, 0)
        assert milnor_wood_sl2(3, -4)
        assert not milnor_wood_sl2(3, 5)

    def test_c1_from_ell(self):
        """c1 = -ℓ/2 + m(g-1)"""
        assert c1_from_ell(1, 2, 0) == 1
        assert c1_from_ell(1, 2, 2) == 0
        assert c1_from_ell(2, 3, 16) == -4

    def test_odd_ell(self):
        """奇数の ℓ は OddEllError"""
        with pytest.raises(OddEllError):
            c1_from_ell(1, 2, 3)

    def test_ell_out_of_range(self):
        """ℓ > N は範囲外"""
        with pytest.raises(ValueError):
            c1_from_ell(1, 2, 6)

    def test_complement_negates(self):
        """c1(ℓ) + c1(N-ℓ) = 0"""
        for m in range(1, 4):
            for g in range(2, 6):
                N = 4 * m * (g - 1)
                for ell in range(0, N + 1, 2):
                    assert c1_from_ell(m, g, ell) + c1_from_ell(m, g, N - ell) == 0

    def test_lefschetz_example(self):
        """m=1, g=2, ℓ=2, degM=10"""
        dims = lefschetz_dims(1, 2, 2, 10)
        assert (dims.diff, dims.total, dims.dim_plus, dims.c1) == (0, 18, 9, 0)

    def test_lefschetz_extremes(self):
        """ℓ=0 と ℓ=N"""
        assert lefschetz_dims(2, 3, 0, 7).dim_plus == 14
        assert lefschetz_dims(2, 3, 0, 7).c1 == 4
        assert lefschetz_dims(2, 3, 16, 7).c1 == -4

    def test_lefschetz_small_degree(self):
        """total < 0 になる degM は拒否"""
        with pytest.raises(ValueError):
            lefschetz_dims(1, 3, 0, 1)


class TestDirectImage:
    """順像・Dirac・外冪のテストクラス"""

    def test_direct_image_examples(self):
        """SL 正規化で0、n=1 で恒等、π_*O の次数"""
        assert direct_image_degree(2 * 1 * 1, 2, 2) == 0
        assert direct_image_degree(7, 1, 4) == 7
        assert direct_image_degree(0, 2, 2) == -2

    def test_direct_image_grid(self):
        """n ≤ 8, g ≤ 8 で deg π_*L = 0"""
        for n in range(1, 9):
            for g in range(2, 9):
                assert direct_image_degree(n * (n - 1) * (g - 1), n, g) == 0

    def test_norm_map_and_trivial_ledger(self):
        """Nm 経路と π_*O の台帳"""
        for n in range(1, 6):
            for g in range(2, 5):
                assert norm_map_degree(3, n, g) == direct_image_degree(3, n, g)
                assert direct_image_trivial_ledger(n).total_degree(g) == direct_image_degree(0, n, g)

    def test_dirac_rank(self):
        """(2g-2)·2m = 4m(g-1) = N"""
        assert all(dirac_rank_check(m, g) for m in range(1, 6) for g in range(2, 9))

    def test_lambda_rank(self):
        """C(N, 2k) と対称性"""
        assert lambda_rank(1, 2, 0) == 1
        assert lambda_rank(1, 2, 1) == 6
        assert lambda_rank(1, 2, 2) == 1
        with pytest.raises(ValueError):
            lambda_rank(1, 2, 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
