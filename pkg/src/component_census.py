#!/usr/bin/env python3
"""
Component Census - 特性類ごとの位数2スペクトルデータの数え上げ

このモジュールは以下の責務を持つ：
1. SL(n,R) の w2 ごとの数（閉じた式と二次形式モデルの2経路）
2. 小さい場合の明示的な F2 二次形式の構成と全数列挙
3. Sp(2m,R) の c1 ごとの数（分岐点の部分集合による）
4. H(Z) の軌道の管理、1の冪根フィルタ、n=2 の照合

数は全て多倍長整数で扱い、浮動小数点は使わない。
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from src.f2_forms import (
    DimensionTooLargeError,
    F2QuadraticForm,
    direct_sum,
    hyperbolic_form,
    zero_count_closed_form,
    zero_form,
)
from src.spectral_invariants import (
    KIND_SL,
    KIND_SP,
    c1_from_ell,
    geometry,
    milnor_wood_sp,
    pullback_theta_parity,
)

logger = logging.getLogger(__name__)

# 明示的な Prym 形式を作る次元の上限
EXPLICIT_FORM_MAX_DIM = 20


class OddSubsetError(ValueError):
    """分岐点の部分集合の位数が奇数"""


@dataclass(frozen=True)
class SLCensus:
    n: int
    g: int
    p: int
    count_w2_0: int
    count_w2_1: int
    total: int

    def __post_init__(self):
        assert self.count_w2_0 + self.count_w2_1 == self.total == 1 << (2 * self.p), \
            f"w2 ごとの数の和が 2^(2p) になりません (n={self.n}, g={self.g})"

    def count_for(self, w2: int) -> int:
        if w2 not in (0, 1):
            raise ValueError(f"w2 は 0 または 1 です: {w2}")
        return self.count_w2_1 if w2 else self.count_w2_0


@dataclass(frozen=True)
class SpCensusRow:
    c1: int
    ell: int
    count: int


@dataclass(frozen=True)
class SpCensus:
    m: int
    g: int
    rows: Tuple[SpCensusRow, ...]

    @property
    def total(self) -> int:
        return sum(row.count for row in self.rows)

    def row_for(self, c1: int) -> SpCensusRow:
        for row in self.rows:
            if row.c1 == c1:
                return row
        raise ValueError(f"c1={c1} は Milnor-Wood の範囲 |c1| ≤ {self.m * (self.g - 1)} の外です")

    def is_symmetric(self) -> bool:
        counts = {row.c1: row.count for row in self.rows}
        return all(counts.get(-c1) == count for c1, count in counts.items())


@dataclass(frozen=True)
class PrymModelSL:
    """P[2] 上の二次形式の構造：根基の次元、商の Arf、ψ(0)=0"""
    n: int
    g: int
    total_dim: int
    radical_dim: int
    quotient_arf: int
    base_value: int = 0

    @property
    def quotient_rank(self) -> int:
        return (self.total_dim - self.radical_dim) // 2


@dataclass(frozen=True)
class HZClass:
    """C_0(Z)/⟨1⟩ の元。subset は (部分集合, 補集合) の辞書式で小さい方"""
    N: int
    subset: Tuple[int, ...]


def census_sl(n: int, g: int) -> SLCensus:
    """閉じた式による w2 ごとの数"""
    geo = geometry(KIND_SL, n, g)
    p = geo.p
    if n % 2:
        zeros = (1 << (2 * p - 1)) + (1 << (p - 1))
    else:
        m = n // 2
        sign = -1 if (m * (g - 1)) % 2 else 1
        zeros = (1 << (2 * p - 1)) + sign * (1 << (p + g - 1))
    total = 1 << (2 * p)
    return SLCensus(n=n, g=g, p=p, count_w2_0=zeros, count_w2_1=total - zeros, total=total)


def prym_model_sl(n: int, g: int) -> PrymModelSL:
    geo = geometry(KIND_SL, n, g)
    radical_dim = 0 if n % 2 else 2 * g
    return PrymModelSL(n=n, g=g, total_dim=2 * geo.p, radical_dim=radical_dim,
                       quotient_arf=pullback_theta_parity(n, g))


def census_sl_via_model(n: int, g: int) -> SLCensus:
    """二次形式モデル（根基 × 商の零点数）による w2 ごとの数"""
    model = prym_model_sl(n, g)
    zeros = zero_count_closed_form(model.quotient_rank, model.quotient_arf, model.radical_dim)
    total = 1 << model.total_dim
    result = SLCensus(n=n, g=g, p=model.total_dim // 2, count_w2_0=zeros,
                      count_w2_1=total - zeros, total=total)
    logger.debug(f"census_sl_via_model: n={n} g={g} model={model}")
    return result


def build_explicit_prym_form(n: int, g: int, max_dim: int = EXPLICIT_FORM_MAX_DIM) -> F2QuadraticForm:
    """
    モデルの構造を持つ明示的な二次形式

    根基の補空間上の双曲ブロック（商の Arf を指定）と根基上の0形式の直和。

    Raises:
        DimensionTooLargeError: 2p が max_dim を超える場合
    """
    model = prym_model_sl(n, g)
    if model.total_dim > max_dim:
        raise DimensionTooLargeError(
            f"Prym 形式の次元 {model.total_dim} は上限 {max_dim} を超えています (n={n}, g={g})")
    quotient = hyperbolic_form(model.quotient_rank, model.quotient_arf)
    return direct_sum(quotient, zero_form(model.radical_dim))


def census_sp(m: int, g: int) -> SpCensus:
    """ℓ（偶数）ごとに c1 = -ℓ/2 + m(g-1)、数 = C(N, ℓ)·2^{2q}"""
    geo = geometry(KIND_SP, m, g)
    fiber = 1 << (2 * geo.q)
    rows: List[SpCensusRow] = []
    for ell in range(0, geo.N + 1, 2):
        c1 = c1_from_ell(m, g, ell)
        assert milnor_wood_sp(m, g, c1), f"c1={c1} が Milnor-Wood の範囲外です"
        rows.append(SpCensusRow(c1=c1, ell=ell, count=math.comb(geo.N, ell) * fiber))
    return SpCensus(m=m, g=g, rows=tuple(rows))


def maximal_component_count(m: int, g: int) -> int:
    """|c1| = m(g-1) の行の数 2^{2q}（m=1 では 2^{2g}）"""
    geo = geometry(KIND_SP, m, g)
    value = 1 << (2 * geo.q)
    assert census_sp(m, g).row_for(m * (g - 1)).count == value
    return value


def sp_total_check(m: int, g: int) -> bool:
    """行の和 = 2·2^{2p}（W と W* の選択で二重に数える）"""
    geo = geometry(KIND_SP, m, g)
    total = census_sp(m, g).total
    assert total == 2 * (1 << (2 * geo.p)), f"Sp の総数が一致しません (m={m}, g={g})"
    assert geo.N - 1 + 2 * geo.q == 2 * geo.p + 1
    return True


# ----------------------------------------------------------------------------
# H(Z) の軌道
# ----------------------------------------------------------------------------

def hz_orbit(subset: Iterable[int], N: int) -> HZClass:
    """
    部分集合 ⊆ {1..N} の H(Z) での類

    Raises:
        OddSubsetError: 位数が奇数の場合
    """
    elements = tuple(sorted(set(subset)))
    if any(not 1 <= x <= N for x in elements):
        raise ValueError(f"部分集合が {{1..{N}}} に含まれていません: {elements}")
    if len(elements) % 2:
        raise OddSubsetError(f"位数が奇数の部分集合です: {elements}")
    chosen = set(elements)
    complement = tuple(x for x in range(1, N + 1) if x not in chosen)
    return HZClass(N=N, subset=min(elements, complement))


def orbit_label(hz: HZClass) -> int:
    return min(len(hz.subset), hz.N - len(hz.subset))


def hz_orbit_size(N: int, label: int) -> int:
    """ラベルが label の HZClass の個数"""
    if label % 2 or not 0 <= 2 * label <= N:
        raise ValueError(f"label={label} は N={N} に対して不正です")
    count = math.comb(N, label)
    return count // 2 if 2 * label == N else count


@dataclass(frozen=True)
class HZAccounting:
    m: int
    g: int
    classes: int
    even_subsets: int
    fiber: int
    prym_points: int

    @property
    def balanced(self) -> bool:
        return (self.classes * self.fiber == self.prym_points
                and self.even_subsets * self.fiber == 2 * self.prym_points)


def hz_accounting(m: int, g: int) -> HZAccounting:
    """Σ 類·2^{2q} = |P[2]|、Σ 偶部分集合·2^{2q} = 2|P[2]|"""
    geo = geometry(KIND_SP, m, g)
    N = geo.N
    classes = sum(hz_orbit_size(N, label) for label in range(0, N // 2 + 1, 2))
    even_subsets = sum(math.comb(N, ell) for ell in range(0, N + 1, 2))
    accounting = HZAccounting(m=m, g=g, classes=classes, even_subsets=even_subsets,
                              fiber=1 << (2 * geo.q), prym_points=1 << (2 * geo.p))
    assert accounting.balanced, f"H(Z) の台帳が一致しません (m={m}, g={g})"
    return accounting


# ----------------------------------------------------------------------------
# 1の冪根フィルタ
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int = 0

    def __add__(self, other: 'GaussianInteger') -> 'GaussianInteger':
        return GaussianInteger(self.re + other.re, self.im + other.im)

    def __mul__(self, other: 'GaussianInteger') -> 'GaussianInteger':
        return GaussianInteger(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    def __pow__(self, exponent: int) -> 'GaussianInteger':
        result, base = GaussianInteger(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    @classmethod
    def i_power(cls, k: int) -> 'GaussianInteger':
        return (cls(1), cls(0, 1), cls(-1), cls(0, -1))[k % 4]


def _filter_direct(N: int, r: int) -> int:
    return sum(math.comb(N, ell) for ell in range(r, N + 1, 4))


def _filter_gaussian(N: int, r: int) -> int:
    """¼ Σ_{j=0..3} i^{-jr}(1+i^j)^N"""
    acc = GaussianInteger(0)
    for j in range(4):
        term = GaussianInteger.i_power(-j * r) * (GaussianInteger(1) + GaussianInteger.i_power(j)) ** N
        acc = acc + term
    assert acc.im == 0 and acc.re % 4 == 0, f"フィルタが整数になりません: N={N}, r={r}"
    return acc.re // 4


def roots_of_unity_filter(N: int, r: int) -> int:
    """Σ_{ℓ ≡ r mod 4} C(N, ℓ) を直接和とガウス整数の2経路で計算"""
    if N < 0 or r not in (0, 1, 2, 3):
        raise ValueError(f"N ≥ 0, r ∈ {{0,1,2,3}} が必要です: N={N}, r={r}")
    direct = _filter_direct(N, r)
    assert direct == _filter_gaussian(N, r), f"2経路が一致しません: N={N}, r={r}"
    return direct


# ----------------------------------------------------------------------------
# n=2 の照合
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class CrosscheckN2Report:
    """
    SL(2,R) の w2=0 の数を Sp(2) 側の二項係数で数え直した結果

    adopted_residue は ℓ ≡ 0 mod 4（ℓ=0 の成分を基準に w2 を測る規約）、
    literal_residue は ℓ ≡ 2g-2 mod 4 の規約。g 奇数で両者は一致する。
    """
    g: int
    census_w2_0: int
    census_w2_1: int
    by_residue: Dict[int, int] = field(default_factory=dict)
    adopted_residue: int = 0
    literal_residue: int = 0
    closed_form_plus: int = 0
    closed_form_minus: int = 0

    @property
    def adopted_value(self) -> int:
        return self.by_residue[self.adopted_residue]

    @property
    def literal_value(self) -> int:
        return self.by_residue[self.literal_residue]

    @property
    def matching_residues(self) -> List[int]:
        return [r for r in sorted(self.by_residue) if self.by_residue[r] == self.census_w2_0]

    @property
    def matching_closed_form(self) -> Optional[str]:
        if self.closed_form_plus == self.census_w2_0:
            return 'plus'
        if self.closed_form_minus == self.census_w2_0:
            return 'minus'
        return None

    @property
    def adopted_matches(self) -> bool:
        return self.adopted_value == self.census_w2_0

    @property
    def literal_matches(self) -> bool:
        return self.literal_value == self.census_w2_0


def crosscheck_n2(g: int) -> CrosscheckN2Report:
    """C(r) = ½·filter(4(g-1), r)·2^{2g} を r ∈ {0, 2} で計算して census_sl(2, g) と比べる"""
    census = census_sl(2, g)
    N = 4 * (g - 1)
    by_residue = {}
    for r in (0, 2):
        doubled = roots_of_unity_filter(N, r) * (1 << (2 * g))
        assert doubled % 2 == 0
        by_residue[r] = doubled // 2
    assert by_residue[0] + by_residue[2] == 1 << (6 * (g - 1)) == census.total, \
        f"C(0)+C(2) が 2^(2p) になりません (g={g})"
    report = CrosscheckN2Report(
        g=g,
        census_w2_0=census.count_w2_0,
        census_w2_1=census.count_w2_1,
        by_residue=by_residue,
        adopted_residue=0,
        literal_residue=(2 * g - 2) % 4,
        closed_form_plus=(1 << (6 * g - 7)) + (1 << (4 * g - 4)),
        closed_form_minus=(1 << (6 * g - 7)) - (1 << (4 * g - 4)),
    )
    logger.debug(f"crosscheck_n2: g={g} residues={by_residue} census={census.count_w2_0}")
    return report


if __name__ == "__main__":
    print(census_sl(3, 2))
    print(census_sp(1, 2))
    report = crosscheck_n2(3)
    print(report, report.matching_residues, report.matching_closed_form)
