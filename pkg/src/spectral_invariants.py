#!/usr/bin/env python3
"""
Spectral Invariants - スペクトル曲線の整数不変量

このモジュールは以下の責務を持つ：
1. 種数・Prym 次元・分岐点数の計算 (CurveGeometry)
2. 標準切断の K 冪の台帳 (DegreeLedger) と次数
3. Milnor-Wood 不等式、Lefschetz 公式による c1、順像の次数
4. Dirac 作用素の階数検査と外冪の階数

曲線そのものは表現せず、(群, 階数, g) の整数だけから計算する。
台帳の恒等式が崩れた場合は AssertionError を送出する。
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

logger = logging.getLogger(__name__)

KIND_SL = 'sl'
KIND_SP = 'sp'
KINDS = (KIND_SL, KIND_SP)


class OddEllError(ValueError):
    """ℓ（-1 固有値の点の数）が奇数"""


@dataclass(frozen=True)
class CurveGeometry:
    """
    スペクトル曲線の数値データ

    kind='sl' では rank=n、kind='sp' では rank=m（群は Sp(2m)）。
    g_Sbar, N, q は Sp の場合のみ値を持つ。
    """
    g: int
    kind: str
    rank: int
    g_S: int
    p: int
    g_Sbar: Optional[int] = None
    N: Optional[int] = None
    q: Optional[int] = None

    @property
    def group_label(self) -> str:
        if self.kind == KIND_SL:
            return f"SL({self.rank},R)"
        return f"Sp({2 * self.rank},R)"


@dataclass(frozen=True)
class DegreeLedger:
    """K の冪の直和。exponents は分母2以下の有理数"""
    exponents: Tuple[Fraction, ...]

    def __post_init__(self):
        exps = tuple(Fraction(e) for e in self.exponents)
        for e in exps:
            if (2 * e).denominator != 1:
                raise ValueError(f"指数の分母は2以下である必要があります: {e}")
        object.__setattr__(self, 'exponents', exps)

    @classmethod
    def from_range(cls, start: Fraction, count: int, step: int = 1) -> 'DegreeLedger':
        return cls(tuple(Fraction(start) + step * i for i in range(count)))

    def degrees(self, g: int) -> Tuple[int, ...]:
        """各成分の次数 exponent·(2g-2)"""
        out = []
        for e in self.exponents:
            d = e * (2 * g - 2)
            assert d.denominator == 1, f"次数が整数ではありません: {e}*(2g-2)"
            out.append(int(d))
        return tuple(out)

    def exponent_sum(self) -> Fraction:
        return sum(self.exponents, Fraction(0))

    def total_degree(self, g: int) -> int:
        return sum(self.degrees(g))

    def positive_part(self) -> 'DegreeLedger':
        return DegreeLedger(tuple(e for e in self.exponents if e > 0))

    def is_symmetric(self) -> bool:
        """K^ℓ と K^{-ℓ} が対になっている"""
        return sorted(self.exponents) == sorted(-e for e in self.exponents)

    def labels(self) -> Tuple[str, ...]:
        return tuple(f"K^{e}" for e in self.exponents)


def _check_g(g: int):
    if g < 2:
        raise ValueError(f"g は2以上が必要です: {g}")


def _check_sl(n: int, g: int):
    if n < 2:
        raise ValueError(f"n は2以上が必要です: {n}")
    _check_g(g)


def _check_sp(m: int, g: int):
    if m < 1:
        raise ValueError(f"m は1以上が必要です: {m}")
    _check_g(g)


def group_dimension(kind: str, rank: int) -> int:
    """dim SL(n) = n²-1, dim Sp(2m) = m(2m+1)"""
    if kind == KIND_SL:
        return rank * rank - 1
    if kind == KIND_SP:
        return rank * (2 * rank + 1)
    raise ValueError(f"未知の群: {kind!r}（'sl' または 'sp'）")


def geometry(kind: str, rank: int, g: int) -> CurveGeometry:
    """
    (群, 階数, g) からスペクトル曲線の数値データを計算

    Args:
        kind: 'sl'（rank=n ≥ 2）または 'sp'（rank=m ≥ 1）
        rank: 階数パラメータ
        g: 底曲線の種数（≥ 2）
    """
    if kind == KIND_SL:
        _check_sl(rank, g)
        g_S = rank * rank * (g - 1) + 1
        p = (g - 1) * (rank * rank - 1)
        return CurveGeometry(g=g, kind=kind, rank=rank, g_S=g_S, p=p)
    if kind == KIND_SP:
        _check_sp(rank, g)
        n = 2 * rank
        g_S = n * n * (g - 1) + 1
        g_Sbar = (2 * rank * rank - rank) * (g - 1) + 1
        N = 4 * rank * (g - 1)
        assert 2 - 2 * g_S == 2 * (2 - 2 * g_Sbar) - N, "Riemann-Hurwitz が成り立ちません"
        p = g_S - g_Sbar
        assert p == (g - 1) * group_dimension(KIND_SP, rank), "Prym 次元の分解が成り立ちません"
        return CurveGeometry(g=g, kind=kind, rank=rank, g_S=g_S, p=p,
                             g_Sbar=g_Sbar, N=N, q=g_Sbar)
    raise ValueError(f"未知の群: {kind!r}（'sl' または 'sp'）")


def hz_dim(m: int, g: int) -> int:
    """dim P[2]/p*H¹(S̄, Z₂) = 4m(g-1) - 2"""
    geo = geometry(KIND_SP, m, g)
    value = 4 * m * (g - 1) - 2
    assert 2 * geo.p == value + 2 * geo.g_Sbar, "次元の台帳が一致しません"
    return value


def character_variety_dim(kind: str, rank: int, g: int) -> int:
    """表現空間の実次元 2(g-1)·dim G（= 2p）"""
    geo = geometry(kind, rank, g)
    value = 2 * (g - 1) * group_dimension(kind, rank)
    assert value == 2 * geo.p, "表現空間の次元が 2p と一致しません"
    return value


def h1_splitting(n: int, g: int) -> Tuple[int, int, int]:
    """(dim H¹(S,Z₂), dim π*H¹(Σ,Z₂), dim P[2]) = (2g_S, 2g, 2p)"""
    geo = geometry(KIND_SL, n, g)
    splitting = (2 * geo.g_S, 2 * g, 2 * geo.p)
    assert splitting[0] == splitting[1] + splitting[2], "H¹ の分解が次元と合いません"
    return splitting


# ----------------------------------------------------------------------------
# 標準切断
# ----------------------------------------------------------------------------

def canonical_exponents_sl(n: int) -> DegreeLedger:
    """V = K^{-(n-1)/2} ⊕ ... ⊕ K^{(n-1)/2}"""
    if n < 2:
        raise ValueError(f"n は2以上が必要です: {n}")
    return DegreeLedger.from_range(Fraction(-(n - 1), 2), n)


def canonical_exponents_sp(m: int) -> DegreeLedger:
    """V = K^{-(2m-1)/2} ⊕ ... ⊕ K^{(2m-1)/2}"""
    if m < 1:
        raise ValueError(f"m は1以上が必要です: {m}")
    return DegreeLedger.from_range(Fraction(-(2 * m - 1), 2), 2 * m)


def canonical_w_exponents_sp(m: int) -> DegreeLedger:
    """W = K^{(2m-1)/2} ⊕ K^{(2m-1)/2-2} ⊕ ... ⊕ K^{-(2m-3)/2}"""
    if m < 1:
        raise ValueError(f"m は1以上が必要です: {m}")
    return DegreeLedger.from_range(Fraction(2 * m - 1, 2), m, step=-2)


def canonical_spin_degree(n: int, g: int) -> int:
    """極大等方部分束の次数：n=2m で m²(g-1)、n=2m+1 で m(m+1)(g-1)"""
    _check_sl(n, g)
    m = n // 2
    value = m * m * (g - 1) if n % 2 == 0 else m * (m + 1) * (g - 1)
    ledger = canonical_exponents_sl(n).positive_part()
    assert ledger.total_degree(g) == value, "等方部分束の台帳と閉じた式が一致しません"
    return value


def canonical_w2_sl(n: int, g: int) -> int:
    """標準切断の w2：n 奇数で0、n=2m で g 奇数なら0、g 偶数なら m mod 2"""
    _check_sl(n, g)
    if n % 2:
        value = 0
    else:
        value = 0 if g % 2 else (n // 2) % 2
    assert value == canonical_spin_degree(n, g) % 2, "w2 とスピン次数の偶奇が一致しません"
    return value


def canonical_c1_sp(m: int, g: int) -> int:
    """c1(W) = m(g-1)"""
    _check_sp(m, g)
    value = m * (g - 1)
    assert canonical_w_exponents_sp(m).total_degree(g) == value, "W の台帳と c1 が一致しません"
    return value


def milnor_wood_sp(m: int, g: int, c1: int) -> bool:
    _check_sp(m, g)
    return abs(c1) <= m * (g - 1)


def milnor_wood_sl2(g: int, c: int) -> bool:
    _check_g(g)
    return abs(c) <= 2 * g - 2


def pullback_theta_parity(n: int, g: int) -> int:
    """
    引き戻したテータ指標の偶奇（順像の直和から読む）

    n=2m+1: Σ_{j=1..m} 2j(g-1) ≡ 0、n=2m: (g-1) + Σ_{j=2..m} (2j-1)(g-1) ≡ m(g-1)
    """
    _check_sl(n, g)
    m = n // 2
    if n % 2:
        total = sum(2 * j * (g - 1) for j in range(1, m + 1))
    else:
        total = (g - 1) + sum((2 * j - 1) * (g - 1) for j in range(2, m + 1))
        assert total % 2 == (m * (g - 1)) % 2
    return total % 2


# ----------------------------------------------------------------------------
# ℓ と c1
# ----------------------------------------------------------------------------

def _check_ell(m: int, g: int, ell: int):
    if ell % 2:
        raise OddEllError(f"ℓ は偶数である必要があります: {ell}")
    N = 4 * m * (g - 1)
    if not 0 <= ell <= N:
        raise ValueError(f"ℓ={ell} は範囲 [0, {N}] の外です")


def c1_from_ell(m: int, g: int, ell: int) -> int:
    """c1(W) = -ℓ/2 + m(g-1)"""
    _check_sp(m, g)
    _check_ell(m, g, ell)
    value = -ell // 2 + m * (g - 1)
    complement = 4 * m * (g - 1) - ell
    assert -complement // 2 + m * (g - 1) == -value, "補集合で c1 の符号が反転しません"
    return value


@dataclass(frozen=True)
class LefschetzDims:
    diff: int
    total: int
    dim_plus: int
    c1: int


def lefschetz_dims(m: int, g: int, ell: int, deg_M: int) -> LefschetzDims:
    """
    正則 Lefschetz 公式による固有空間の次元

    Args:
        m, g: 群と種数
        ell: -1 で作用する分岐点の数（偶数）
        deg_M: 十分大きい補助直線束の次数（total, dim_plus ≥ 0 を要求）
    """
    _check_sp(m, g)
    _check_ell(m, g, ell)
    diff = (-ell + (4 * m * (g - 1) - ell)) // 2
    total = 2 * m * (1 - g + deg_M)
    dim_plus = -ell // 2 + m * deg_M
    if total < 0 or dim_plus < 0:
        raise ValueError(f"deg_M={deg_M} が小さすぎます（total={total}, dim_plus={dim_plus}）")
    assert 2 * dim_plus == diff + total, "Lefschetz の差と全体の次元が合いません"
    c1 = dim_plus - (m * (1 - g) + m * deg_M)
    assert c1 == c1_from_ell(m, g, ell)
    return LefschetzDims(diff=diff, total=total, dim_plus=dim_plus, c1=c1)


# ----------------------------------------------------------------------------
# 順像
# ----------------------------------------------------------------------------

def _spectral_genus(n: int, g: int) -> int:
    return n * n * (g - 1) + 1


def direct_image_degree(deg_L: int, n: int, g: int) -> int:
    """deg π_*L = deg L + (1 - g_S) + n(g-1)"""
    if n < 1:
        raise ValueError(f"n は1以上が必要です: {n}")
    _check_g(g)
    value = deg_L + (1 - _spectral_genus(n, g)) + n * (g - 1)
    if deg_L == n * (n - 1) * (g - 1):
        assert value == 0, "SL 正規化で順像の次数が0になりません"
    return value


def norm_map_degree(deg_L: int, n: int, g: int) -> int:
    """deg Λⁿ(π_*L) = deg Nm(L) - n(n-1)(g-1)"""
    value = deg_L - n * (n - 1) * (g - 1)
    assert value == direct_image_degree(deg_L, n, g)
    return value


def direct_image_trivial_ledger(n: int) -> DegreeLedger:
    """π_*O = O ⊕ K^{-1} ⊕ ... ⊕ K^{-(n-1)}"""
    if n < 1:
        raise ValueError(f"n は1以上が必要です: {n}")
    return DegreeLedger.from_range(Fraction(0), n, step=-1)


# ----------------------------------------------------------------------------
# Dirac 作用素と外冪
# ----------------------------------------------------------------------------

def dirac_rank_check(m: int, g: int) -> bool:
    """指数定理 dim ker D* = (2g-2)·rk V と分岐点数 N の一致"""
    geo = geometry(KIND_SP, m, g)
    assert (2 * g - 2) * (2 * m) == 4 * m * (g - 1) == geo.N, "Dirac 階数が分岐点数と一致しません"
    return True


def lambda_rank(m: int, g: int, k: int) -> int:
    """rk Λ^{2k} = C(N, 2k)"""
    _check_sp(m, g)
    N = 4 * m * (g - 1)
    if not 0 <= 2 * k <= N:
        raise ValueError(f"2k={2 * k} は範囲 [0, {N}] の外です")
    value = math.comb(N, 2 * k)
    assert value == math.comb(N, N - 2 * k)
    return value


if __name__ == "__main__":
    geo = geometry(KIND_SP, 1, 2)
    print(geo)
    print(f"hz_dim={hz_dim(1, 2)} c1_sp={canonical_c1_sp(1, 2)}")
    print(lefschetz_dims(1, 2, 2, 10))
