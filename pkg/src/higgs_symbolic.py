#!/usr/bin/env python3
"""
Higgs Symbolic - 標準ヒッグス場の特性多項式

このモジュールは以下の責務を持つ：
1. λ と重み付き生成元 a_i の整数係数疎多項式
2. 多項式を成分とする行列と、メモ化 Laplace 展開による行列式
3. SL(n) / Sp(2m) の標準ヒッグス行列の構成
4. 特性多項式の直接計算とべき級数（Bezout）による計算、両者の照合
5. 係数系から生成元への三角的な逆算
"""

import logging
import random
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
LAMBDA_NAME = 'λ'


def _strip(exponents: Iterable[int]) -> Exponents:
    exps = [int(e) for e in exponents]
    if any(e < 0 for e in exps):
        raise ValueError(f"指数が負です: {exps}")
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def monomial_weight(exponents: Exponents) -> int:
    """λ の重み1、a_i の重み i"""
    if not exponents:
        return 0
    return exponents[0] + sum(i * e for i, e in enumerate(exponents[1:], start=1))


class WeightedPolynomial:
    """
    λ, a_1, a_2, ... の整数係数疎多項式

    項は指数ベクトル (e_λ, e_1, e_2, ...)（末尾の0は除去）から0でない係数への写像。
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[Sequence[int], int]] = None):
        cleaned: Dict[Exponents, int] = {}
        for exponents, coeff in (terms or {}).items():
            key = _strip(exponents)
            value = cleaned.get(key, 0) + int(coeff)
            if value:
                cleaned[key] = value
            else:
                cleaned.pop(key, None)
        self._terms = cleaned

    @classmethod
    def constant(cls, value: int) -> 'WeightedPolynomial':
        return cls({(): value})

    @classmethod
    def lam(cls) -> 'WeightedPolynomial':
        return cls({(1,): 1})

    @classmethod
    def generator(cls, index: int) -> 'WeightedPolynomial':
        """a_index（index ≥ 1）"""
        if index < 1:
            raise ValueError(f"生成元の番号は1以上です: {index}")
        return cls({(0,) * index + (1,): 1})

    @classmethod
    def _coerce(cls, value: Union['WeightedPolynomial', int]) -> 'WeightedPolynomial':
        if isinstance(value, WeightedPolynomial):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"多項式に変換できません: {value!r}")

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- 環演算 ------------------------------------------------------------

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        result = dict(self._terms)
        for exps, coeff in other._terms.items():
            result[exps] = result.get(exps, 0) + coeff
        return WeightedPolynomial(result)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPolynomial({exps: -coeff for exps, coeff in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        result: Dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                width = max(len(e1), len(e2))
                key = _strip(
                    (e1[i] if i < len(e1) else 0) + (e2[i] if i < len(e2) else 0)
                    for i in range(width)
                )
                result[key] = result.get(key, 0) + c1 * c2
        return WeightedPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"指数は非負整数です: {exponent!r}")
        result = WeightedPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = WeightedPolynomial.constant(other)
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- 構造 --------------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Exponents, int]]:
        """重み付き次数、同じ重みでは λ の冪から辞書式（降順）"""
        return sorted(self._terms.items(), key=lambda item: (monomial_weight(item[0]), item[0]), reverse=True)

    def weights(self) -> set:
        return {monomial_weight(exps) for exps in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> Optional[int]:
        """斉次なら重み、0多項式・非斉次なら None"""
        weights = self.weights()
        return weights.pop() if len(weights) == 1 else None

    def lambda_degree(self) -> int:
        if not self._terms:
            return -1
        return max(exps[0] if exps else 0 for exps in self._terms)

    def has_lambda(self) -> bool:
        return any(exps and exps[0] for exps in self._terms)

    def coefficient_of_lambda(self, power: int) -> 'WeightedPolynomial':
        """λ^power の係数（λ を含まない多項式）"""
        result = {}
        for exps, coeff in self._terms.items():
            if (exps[0] if exps else 0) == power:
                result[(0,) + tuple(exps[1:])] = coeff
        return WeightedPolynomial(result)

    def inflate_lambda(self, factor: int) -> 'WeightedPolynomial':
        """λ → λ^factor の代入"""
        result = {}
        for exps, coeff in self._terms.items():
            if exps:
                result[(exps[0] * factor,) + tuple(exps[1:])] = coeff
            else:
                result[exps] = coeff
        return WeightedPolynomial(result)

    def generators_used(self) -> set:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps[1:], start=1) if e)
        return used

    def evaluate(self, values: Mapping[int, int], lam: Optional[int] = None) -> int:
        """a_i = values[i]（λ を含むときは lam も必要）"""
        total = 0
        for exps, coeff in self._terms.items():
            term = coeff
            if exps and exps[0]:
                if lam is None:
                    raise ValueError("λ の値が必要です")
                term *= lam ** exps[0]
            for i, e in enumerate(exps[1:], start=1):
                if e:
                    if i not in values:
                        raise ValueError(f"a{i} の値が必要です")
                    term *= values[i] ** e
            total += term
        return total

    # -- 出力 --------------------------------------------------------------

    @staticmethod
    def _monomial_text(exps: Exponents, lambda_name: str) -> str:
        factors = []
        for i, e in enumerate(exps[1:], start=1):
            if e:
                factors.append(f"a{i}" if e == 1 else f"a{i}^{e}")
        if exps and exps[0]:
            factors.append(lambda_name if exps[0] == 1 else f"{lambda_name}^{exps[0]}")
        return '*'.join(factors)

    def to_text(self, lambda_name: str = LAMBDA_NAME) -> str:
        """例: 'λ^3 - 2*a2*λ - a3'"""
        if not self._terms:
            return '0'
        parts = []
        for index, (exps, coeff) in enumerate(self.sorted_terms()):
            mono = self._monomial_text(exps, lambda_name)
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if index == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return ' '.join(parts)

    def to_json(self) -> List[Dict[str, object]]:
        """[{coeff, exponents: {lambda, a2, ...}}]（sorted_terms の順）"""
        out = []
        for exps, coeff in self.sorted_terms():
            named = {}
            if exps and exps[0]:
                named['lambda'] = exps[0]
            for i, e in enumerate(exps[1:], start=1):
                if e:
                    named[f"a{i}"] = e
            out.append({'coeff': coeff, 'exponents': named})
        return out

    def __repr__(self):
        return f"WeightedPolynomial({self.to_text()!r})"


ZERO = WeightedPolynomial()
ONE = WeightedPolynomial.constant(1)


def random_polynomial(rng: random.Random, max_terms: int = 4, max_index: int = 4,
                      max_exponent: int = 2, max_coeff: int = 5) -> WeightedPolynomial:
    """λ, a_1..a_{max_index} のランダムな疎多項式（0多項式もあり得る）"""
    terms: Dict[Exponents, int] = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exponent) for _ in range(max_index + 1))
        terms[exps] = rng.randint(-max_coeff, max_coeff)
    return WeightedPolynomial(terms)


@dataclass(frozen=True)
class SymbolicMatrix:
    """WeightedPolynomial を成分とする n×n 行列"""
    size: int
    entries: Tuple[Tuple[WeightedPolynomial, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(WeightedPolynomial._coerce(x) for x in row) for row in self.entries)
        object.__setattr__(self, 'entries', rows)
        if len(rows) != self.size or any(len(row) != self.size for row in rows):
            raise ValueError(f"行列の形が {self.size}x{self.size} ではありません")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Union[WeightedPolynomial, int]]]) -> 'SymbolicMatrix':
        return cls(len(rows), tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> 'SymbolicMatrix':
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> 'SymbolicMatrix':
        return cls.from_rows([[0] * n for _ in range(n)])

    @classmethod
    def block(cls, top_left, top_right, bottom_left, bottom_right) -> 'SymbolicMatrix':
        """2×2 ブロック行列（各ブロックは同じ大きさ）"""
        k = top_left.size
        if any(b.size != k for b in (top_right, bottom_left, bottom_right)):
            raise ValueError("ブロックの大きさが一致しません")
        rows = []
        for i in range(k):
            rows.append(top_left.entries[i] + top_right.entries[i])
        for i in range(k):
            rows.append(bottom_left.entries[i] + bottom_right.entries[i])
        return cls.from_rows(rows)

    def __getitem__(self, index: Tuple[int, int]) -> WeightedPolynomial:
        i, j = index
        return self.entries[i][j]

    def lambda_minus(self) -> 'SymbolicMatrix':
        """λI - M"""
        lam = WeightedPolynomial.lam()
        return SymbolicMatrix.from_rows([
            [(lam if i == j else ZERO) - self.entries[i][j] for j in range(self.size)]
            for i in range(self.size)
        ])

    def is_persymmetric(self) -> bool:
        """反対角線に関する対称性 M[i][j] = M[n-1-j][n-1-i]"""
        n = self.size
        return all(self.entries[i][j] == self.entries[n - 1 - j][n - 1 - i]
                   for i in range(n) for j in range(n))

    def trace(self) -> WeightedPolynomial:
        result = ZERO
        for i in range(self.size):
            result = result + self.entries[i][i]
        return result

    def generators_used(self) -> set:
        used = set()
        for row in self.entries:
            for entry in row:
                used |= entry.generators_used()
        return used

    def to_text(self) -> str:
        return '\n'.join('[' + ', '.join(e.to_text() for e in row) + ']' for row in self.entries)


@dataclass(frozen=True)
class CharPoly:
    """モニックな特性多項式。coefficients[k] は λ^k の係数（λ を含まない）"""
    degree: int
    coefficients: Tuple[WeightedPolynomial, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("係数の個数が degree+1 ではありません")
        if any(c.has_lambda() for c in self.coefficients):
            raise ValueError("係数に λ が含まれています")
        if self.coefficients[self.degree] != ONE:
            raise ValueError("モニックではありません")

    @classmethod
    def from_polynomial(cls, poly: WeightedPolynomial) -> 'CharPoly':
        degree = poly.lambda_degree()
        if degree < 0:
            raise ValueError("0多項式は特性多項式ではありません")
        return cls(degree, tuple(poly.coefficient_of_lambda(k) for k in range(degree + 1)))

    def coefficient(self, power: int) -> WeightedPolynomial:
        return self.coefficients[power]

    def as_polynomial(self) -> WeightedPolynomial:
        lam = WeightedPolynomial.lam()
        result = ZERO
        for k, c in enumerate(self.coefficients):
            result = result + c * (lam ** k)
        return result

    def is_weight_homogeneous(self) -> bool:
        """λ^{n-k} の係数が重み k の斉次式（または0）"""
        for k in range(self.degree + 1):
            c = self.coefficients[self.degree - k]
            if not c.is_zero() and c.weights() != {k}:
                return False
        return True

    def is_even_in_lambda(self) -> bool:
        return all(self.coefficients[k].is_zero()
                   for k in range(self.degree + 1) if (self.degree - k) % 2)

    def to_text(self, lambda_name: str = LAMBDA_NAME) -> str:
        return self.as_polynomial().to_text(lambda_name)

    def to_json(self) -> List[Dict[str, object]]:
        return self.as_polynomial().to_json()


# ----------------------------------------------------------------------------
# 標準ヒッグス行列
# ----------------------------------------------------------------------------

def canonical_higgs_sl(n: int) -> SymbolicMatrix:
    """
    SL(n, R) の標準ヒッグス場

    上副対角線が1、i-j ≥ 1 の成分が a_{i-j+1}（下三角 Toeplitz）、他は0。
    最終行は (a_n, a_{n-1}, ..., a_2, 0)。
    """
    if n < 2:
        raise ValueError(f"n は2以上が必要です: {n}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if j == i + 1:
                row.append(ONE)
            elif i - j >= 1:
                row.append(WeightedPolynomial.generator(i - j + 1))
            else:
                row.append(ZERO)
        rows.append(row)
    return SymbolicMatrix.from_rows(rows)


def canonical_higgs_sp(m: int) -> Tuple[SymbolicMatrix, SymbolicMatrix]:
    """
    Sp(2m, R) の標準ヒッグス場 (A, Φ)

    A は対角 a_2、上副対角 1、i > j で a_{2(i-j+1)}。Φ = [[0, I], [A, 0]]。
    """
    if m < 1:
        raise ValueError(f"m は1以上が必要です: {m}")
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if j == i + 1:
                row.append(ONE)
            elif i >= j:
                row.append(WeightedPolynomial.generator(2 * (i - j + 1)))
            else:
                row.append(ZERO)
        rows.append(row)
    a = SymbolicMatrix.from_rows(rows)
    phi = SymbolicMatrix.block(SymbolicMatrix.zero(m), SymbolicMatrix.identity(m), a, SymbolicMatrix.zero(m))
    return a, phi


# ----------------------------------------------------------------------------
# 行列式と特性多項式
# ----------------------------------------------------------------------------

def determinant(matrix: SymbolicMatrix) -> WeightedPolynomial:
    """列部分集合でメモ化した Laplace 展開（O(n·2^n) 回の環演算）"""
    n = matrix.size
    memo: Dict[int, WeightedPolynomial] = {0: ONE}

    def minor(mask: int) -> WeightedPolynomial:
        if mask in memo:
            return memo[mask]
        row = n - bin(mask).count('1')
        total = ZERO
        position = 0
        for col in range(n):
            if not (mask >> col) & 1:
                continue
            entry = matrix.entries[row][col]
            if not entry.is_zero():
                term = entry * minor(mask & ~(1 << col))
                total = total + term if position % 2 == 0 else total - term
            position += 1
        memo[mask] = total
        return total

    result = minor((1 << n) - 1)
    logger.debug(f"determinant: size={n} subsets={len(memo)} terms={len(result.terms)}")
    return result


def char_poly_direct(matrix: SymbolicMatrix) -> CharPoly:
    """det(λI - M)"""
    return CharPoly.from_polynomial(determinant(matrix.lambda_minus()))


def char_poly_bezout(n: int) -> CharPoly:
    """
    p(x) = 1 - λx + a_2x² + ... + a_nx^n の x^n を法とする逆元 a(x) から
    b(x)x^n = 1 - a(x)p(x) を作り、b(0) を返す
    """
    if n < 2:
        raise ValueError(f"n は2以上が必要です: {n}")
    p: List[WeightedPolynomial] = [ONE, -WeightedPolynomial.lam()]
    p.extend(WeightedPolynomial.generator(i) for i in range(2, n + 1))

    # a_0 = 1, a_k = -Σ_{i=1..k} p_i a_{k-i}（p(0) = 1 なので割り算不要）
    inverse: List[WeightedPolynomial] = [ONE]
    for k in range(1, n):
        acc = ZERO
        for i in range(1, k + 1):
            acc = acc + p[i] * inverse[k - i]
        inverse.append(-acc)

    # 1 - a(x)p(x) の x^n の係数
    top = ZERO
    for i in range(n):
        top = top + inverse[i] * p[n - i]
    return CharPoly.from_polynomial(-top)


def companion_char_poly(n: int) -> CharPoly:
    """λ^n + a_2λ^{n-2} + ... + a_n（コンパニオン行列の特性多項式）"""
    if n < 2:
        raise ValueError(f"n は2以上が必要です: {n}")
    coefficients = [ZERO] * (n + 1)
    coefficients[n] = ONE
    for i in range(2, n + 1):
        coefficients[n - i] = WeightedPolynomial.generator(i)
    return CharPoly(n, tuple(coefficients))


def sp_char_poly(m: int) -> CharPoly:
    _, phi = canonical_higgs_sp(m)
    return char_poly_direct(phi)


def verify_sp_factorization(m: int) -> bool:
    """det(λI - Φ) == det(μI - A)|_{μ=λ²}"""
    a, phi = canonical_higgs_sp(m)
    lhs = determinant(phi.lambda_minus())
    rhs = determinant(a.lambda_minus()).inflate_lambda(2)
    equal = lhs == rhs
    logger.debug(f"verify_sp_factorization: m={m} equal={equal}")
    return equal


# ----------------------------------------------------------------------------
# 係数系の三角的逆算
# ----------------------------------------------------------------------------

def _pure_generator_key(index: int) -> Exponents:
    return (0,) * index + (1,)


def leading_coefficients(charpoly: CharPoly, generators: Sequence[int]) -> Dict[int, int]:
    """
    λ^{n-w} の係数における a_w の整数係数 ε_w

    標準ヒッグス場では ε_w = -(a_w が並ぶ対角線の長さ)。

    Raises:
        ValueError: ε_w が0、または a_w 以上の生成元が混入している場合
    """
    leading = {}
    for w in generators:
        c = charpoly.coefficient(charpoly.degree - w)
        key = _pure_generator_key(w)
        eps = c.terms.get(key, 0)
        if eps == 0:
            raise ValueError(f"λ^{charpoly.degree - w} の係数に a{w} が現れません")
        rest = WeightedPolynomial({k: v for k, v in c.terms.items() if k != key})
        if any(i >= w for i in rest.generators_used()):
            raise ValueError(f"λ^{charpoly.degree - w} の係数が三角的ではありません")
        leading[w] = eps
    return leading


def recover_generators(charpoly: CharPoly, generators: Sequence[int],
                       coefficient_values: Mapping[int, int]) -> Dict[int, int]:
    """
    係数 c_w（λ^{n-w} の係数の値）から a_w を重み順に逆算

    Args:
        charpoly: 特性多項式
        generators: 生成元の番号（昇順に処理）
        coefficient_values: 重み w -> c_w の整数値

    Raises:
        ValueError: 割り切れず整数解がない場合
    """
    leading = leading_coefficients(charpoly, generators)
    recovered: Dict[int, int] = {}
    for w in sorted(generators):
        c = charpoly.coefficient(charpoly.degree - w)
        key = _pure_generator_key(w)
        rest = WeightedPolynomial({k: v for k, v in c.terms.items() if k != key})
        residual = coefficient_values[w] - rest.evaluate(recovered)
        if residual % leading[w]:
            raise ValueError(f"a{w} が整数になりません: {residual} / {leading[w]}")
        recovered[w] = residual // leading[w]
    return recovered
