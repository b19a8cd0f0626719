#!/usr/bin/env python3
"""
KO Surface - 曲面の KO 群のモデル

このモジュールは以下の責務を持つ：
1. KO(Σ) の元を (仮想階数, w1, w2) の三つ組で表現
2. 交叉形式でねじれた加法、α 写像、Ω 類
3. テータ指標（二次精密化）による mod 2 指数 φ
4. Stiefel-Whitney 類 w2 の公式の評価

ベクトル束そのものは扱わず、不変量のみで計算する。
"""

import logging
import random
from dataclasses import dataclass

from src.f2_forms import (
    F2BilinearForm,
    F2QuadraticForm,
    F2Vector,
    evaluate,
    hyperbolic_form,
    polarize,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfaceH1:
    """H¹(Σ, Z₂) と交叉形式"""
    genus: int
    intersection: F2BilinearForm

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"種数は2以上が必要です: {self.genus}")
        if self.intersection != F2BilinearForm.standard_symplectic(2 * self.genus):
            raise ValueError("交叉形式は標準シンプレクティック形式である必要があります")

    @classmethod
    def standard(cls, genus: int) -> 'SurfaceH1':
        if genus < 2:
            raise ValueError(f"種数は2以上が必要です: {genus}")
        return cls(genus, F2BilinearForm.standard_symplectic(2 * genus))

    @property
    def dim(self) -> int:
        return 2 * self.genus

    def random_class(self, rng: random.Random) -> F2Vector:
        return F2Vector.from_int(self.dim, rng.getrandbits(self.dim))


@dataclass(frozen=True)
class KOClass:
    """[V] = (rank, w1, w2)。rank は仮想階数で負もとる"""
    rank: int
    w1: F2Vector
    w2: int

    def __post_init__(self):
        if self.w2 not in (0, 1):
            raise ValueError(f"w2 は 0 または 1 です: {self.w2}")


@dataclass(frozen=True)
class ThetaModel:
    """テータ指標 K^{1/2} のモデル：交叉形式の二次精密化 q と φ(1)"""
    q: F2QuadraticForm
    phi_of_1: int = 0

    def __post_init__(self):
        if self.phi_of_1 not in (0, 1):
            raise ValueError(f"phi_of_1 は 0 または 1 です: {self.phi_of_1}")

    @classmethod
    def default(cls, surface: SurfaceH1) -> 'ThetaModel':
        """Arf 0（偶）かつ φ(1)=0 の標準モデル"""
        return cls(hyperbolic_form(surface.genus, 0), 0)

    @classmethod
    def odd(cls, surface: SurfaceH1, phi_of_1: int = 1) -> 'ThetaModel':
        """Arf 1（奇）のモデル"""
        return cls(hyperbolic_form(surface.genus, 1), phi_of_1)

    @classmethod
    def from_form(cls, surface: SurfaceH1, q: F2QuadraticForm, phi_of_1: int = 0) -> 'ThetaModel':
        """q が交叉形式の精密化であることを確認して構成"""
        if q.dim != surface.dim or polarize(q) != surface.intersection:
            raise ValueError("q は交叉形式の二次精密化ではありません")
        return cls(q, phi_of_1)

    @classmethod
    def unchecked(cls, q: F2QuadraticForm, phi_of_1: int = 0) -> 'ThetaModel':
        """精密化の確認を省略（負のテスト用）"""
        return cls(q, phi_of_1)

    def is_refinement_of(self, surface: SurfaceH1) -> bool:
        return self.q.dim == surface.dim and polarize(self.q) == surface.intersection


class KORing:
    """KO(Σ) の加法群。w2 は交叉形式 ⟨w1, w1'⟩ でねじれる"""

    def __init__(self, surface: SurfaceH1):
        self.surface = surface

    def _check(self, *vectors: F2Vector):
        for v in vectors:
            if v.dim != self.surface.dim:
                raise ValueError(f"次元不一致: w1.dim={v.dim}, 2g={self.surface.dim}")

    def zero(self) -> KOClass:
        return KOClass(0, F2Vector.zero(self.surface.dim), 0)

    def scalar(self, k: int) -> KOClass:
        """k · 1（自明束 k 個）"""
        return KOClass(k, F2Vector.zero(self.surface.dim), 0)

    def unit(self) -> KOClass:
        return self.scalar(1)

    def ko_add(self, c1: KOClass, c2: KOClass) -> KOClass:
        """(r+r', w1+w1', w2+w2'+⟨w1,w1'⟩)：全 Stiefel-Whitney 類の乗法性"""
        self._check(c1.w1, c2.w1)
        twist = self.surface.intersection.pair(c1.w1, c2.w1)
        return KOClass(c1.rank + c2.rank, c1.w1 + c2.w1, c1.w2 ^ c2.w2 ^ twist)

    def ko_negate(self, c: KOClass) -> KOClass:
        self._check(c.w1)
        return KOClass(-c.rank, c.w1, c.w2)

    def ko_subtract(self, c1: KOClass, c2: KOClass) -> KOClass:
        return self.ko_add(c1, self.ko_negate(c2))

    def multiple(self, c: KOClass, k: int) -> KOClass:
        result = self.zero()
        step = c if k >= 0 else self.ko_negate(c)
        for _ in range(abs(k)):
            result = self.ko_add(result, step)
        return result

    def alpha(self, x: F2Vector) -> KOClass:
        """x ∈ H¹(Σ, Z₂) に対応する直線束の類"""
        self._check(x)
        return KOClass(1, x, 0)

    def omega(self) -> KOClass:
        """Ω = O_p + O_p* - 2"""
        return KOClass(0, F2Vector.zero(self.surface.dim), 1)

    def class_of_bundle(self, n: int, w1: F2Vector, w2: int) -> KOClass:
        """階数 n の直交束の類 [V] = n-1 + α(w1) + w2·Ω"""
        if n < 1:
            raise ValueError(f"階数は1以上が必要です: {n}")
        self._check(w1)
        return KOClass(n, w1, w2)

    def expand_bundle(self, n: int, w1: F2Vector, w2: int) -> KOClass:
        """class_of_bundle を ko_add の連鎖で計算"""
        result = self.ko_add(self.scalar(n - 1), self.alpha(w1))
        return self.ko_add(result, self.multiple(self.omega(), w2))


def phi(c: KOClass, theta: ThetaModel) -> int:
    """φ(c) = (rank mod 2)·φ(1) + q(w1) + w2"""
    return ((c.rank & 1) * theta.phi_of_1 + evaluate(theta.q, c.w1) + c.w2) & 1


def theorem_w2(phi_S_1: int, w1: F2Vector, theta: ThetaModel) -> int:
    """w2(V) = φ_S(1) + φ_Σ(α(w1(V)))（φ_Σ(1)=0 のモデルで評価）"""
    return (phi_S_1 + evaluate(theta.q, w1)) & 1


def solve_w2(phi_of_V: int, n: int, w1: F2Vector, theta: ThetaModel) -> int:
    """φ([V]) = (n-1)φ(1) + φ(α(w1)) + w2·φ(Ω) を w2 について解く"""
    alpha_term = (theta.phi_of_1 + evaluate(theta.q, w1)) & 1
    return (phi_of_V + (n - 1) * theta.phi_of_1 + alpha_term) & 1
