#!/usr/bin/env python3
"""
F2 Forms - 二元体上の双線形形式と二次形式

このモジュールは以下の責務を持つ：
1. F2ベクトル・交代双線形形式・二次形式（二次精密化）の不変な値型
2. 根基、シンプレクティック基底、Arf不変量、零点数の計算
3. 全数列挙による零点数オラクル
4. 二次形式テキストファイルの解析
"""

import logging
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

# 全数列挙の次元ガード（2^24 ≒ 1600万点）
BRUTE_FORCE_MAX_DIM = 24
# 二次精密化の全ペア検査ガード
REFINEMENT_CHECK_MAX_DIM = 12

_ENUMERATION_CHUNK = 1 << 16
_PAIR_CHUNK_ROWS = 256


class DegenerateFormError(ValueError):
    """根基が自明でない形式に非退化性を要求した"""


class DimensionTooLargeError(ValueError):
    """全数列挙の次元ガードを超えた"""


class FormParseError(ValueError):
    """二次形式テキストの解析エラー（行・列つき）"""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _as_bits(values: Iterable[int]) -> Tuple[int, ...]:
    bits = []
    for value in values:
        bit = int(value)
        if bit not in (0, 1):
            raise ValueError(f"F2の元ではありません: {value!r}")
        bits.append(bit)
    return tuple(bits)


@dataclass(frozen=True)
class F2Vector:
    """F2^dim の元"""
    dim: int
    bits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'bits', _as_bits(self.bits))
        if self.dim < 0:
            raise ValueError(f"次元が負です: {self.dim}")
        if len(self.bits) != self.dim:
            raise ValueError(f"ビット長 {len(self.bits)} が次元 {self.dim} と一致しません")

    @classmethod
    def zero(cls, dim: int) -> 'F2Vector':
        return cls(dim, (0,) * dim)

    @classmethod
    def unit(cls, dim: int, index: int) -> 'F2Vector':
        if not 0 <= index < dim:
            raise ValueError(f"基底番号 {index} が範囲外です (dim={dim})")
        return cls(dim, tuple(1 if i == index else 0 for i in range(dim)))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> 'F2Vector':
        bits = tuple(bits)
        return cls(len(bits), bits)

    @classmethod
    def from_int(cls, dim: int, value: int) -> 'F2Vector':
        """ビット i を (value >> i) & 1 とする"""
        return cls(dim, tuple((value >> i) & 1 for i in range(dim)))

    def to_int(self) -> int:
        return sum(bit << i for i, bit in enumerate(self.bits))

    def is_zero(self) -> bool:
        return not any(self.bits)

    def weight(self) -> int:
        return sum(self.bits)

    def support(self) -> List[int]:
        return [i for i, bit in enumerate(self.bits) if bit]

    def as_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)

    def __add__(self, other: 'F2Vector') -> 'F2Vector':
        if not isinstance(other, F2Vector):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError(f"次元不一致: {self.dim} != {other.dim}")
        return F2Vector(self.dim, tuple(a ^ b for a, b in zip(self.bits, other.bits)))


# ----------------------------------------------------------------------------
# GF(2) 行列演算
# ----------------------------------------------------------------------------

def _row_reduce(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """簡約行階段形とピボット列を返す"""
    a = (np.asarray(matrix, dtype=np.uint8) & 1).copy()
    if a.ndim != 2:
        raise ValueError("2次元配列が必要です")
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = None
        for i in range(r, rows):
            if a[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        # Eliminate all other 1s in column c
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        pivots.append(c)
        r += 1
    return a[:r].copy(), pivots


def gf2_rank(matrix: np.ndarray) -> int:
    """GF(2) 上の階数"""
    if np.asarray(matrix).size == 0:
        return 0
    return len(_row_reduce(matrix)[1])


def _null_space(matrix: np.ndarray) -> np.ndarray:
    """{x : M x = 0} の基底を行として返す"""
    m = np.asarray(matrix, dtype=np.uint8)
    n = m.shape[1]
    rref, pivots = _row_reduce(m) if m.size else (np.zeros((0, n), dtype=np.uint8), [])
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = np.zeros(n, dtype=np.uint8)
        v[free] = 1
        for i, p in enumerate(pivots):
            v[p] = rref[i, free]
        basis.append(v)
    if not basis:
        return np.zeros((0, n), dtype=np.uint8)
    return np.array(basis, dtype=np.uint8)


@dataclass(frozen=True)
class F2BilinearForm:
    """対称かつ対角成分0（交代）の F2 双線形形式"""
    dim: int
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(_as_bits(row) for row in self.matrix)
        object.__setattr__(self, 'matrix', rows)
        if len(rows) != self.dim or any(len(row) != self.dim for row in rows):
            raise ValueError(f"行列の形が {self.dim}x{self.dim} ではありません")
        for i in range(self.dim):
            if rows[i][i]:
                raise ValueError(f"対角成分 ({i},{i}) が0ではありません（交代形式ではない）")
            for j in range(i + 1, self.dim):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"行列が対称ではありません: ({i},{j})")

    @classmethod
    def from_array(cls, array) -> 'F2BilinearForm':
        a = np.asarray(array, dtype=np.int64) & 1
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("正方行列が必要です")
        return cls(a.shape[0], tuple(tuple(int(x) for x in row) for row in a))

    @classmethod
    def zero(cls, dim: int) -> 'F2BilinearForm':
        return cls(dim, tuple((0,) * dim for _ in range(dim)))

    @classmethod
    def standard_symplectic(cls, dim: int) -> 'F2BilinearForm':
        """基底 (e_{2i}, e_{2i+1}) を双曲対とする標準形"""
        if dim % 2:
            raise ValueError(f"標準シンプレクティック形式には偶数次元が必要です: {dim}")
        a = np.zeros((dim, dim), dtype=np.uint8)
        for i in range(0, dim, 2):
            a[i, i + 1] = a[i + 1, i] = 1
        return cls.from_array(a)

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.uint8).reshape(self.dim, self.dim)

    def pair(self, x: F2Vector, y: F2Vector) -> int:
        if x.dim != self.dim or y.dim != self.dim:
            raise ValueError(f"次元不一致: form={self.dim}, x={x.dim}, y={y.dim}")
        total = 0
        ys = y.support()
        for i in x.support():
            row = self.matrix[i]
            total += sum(row[j] for j in ys)
        return total & 1

    def rank(self) -> int:
        return gf2_rank(self.as_array()) if self.dim else 0

    def is_nondegenerate(self) -> bool:
        return self.rank() == self.dim


@dataclass(frozen=True)
class F2QuadraticForm:
    """基底での値と極化双線形形式で与える二次関数 q"""
    dim: int
    basis_values: Tuple[int, ...]
    form: F2BilinearForm

    def __post_init__(self):
        object.__setattr__(self, 'basis_values', _as_bits(self.basis_values))
        if len(self.basis_values) != self.dim:
            raise ValueError(f"basis_values の長さ {len(self.basis_values)} が次元 {self.dim} と一致しません")
        if self.form.dim != self.dim:
            raise ValueError(f"双線形形式の次元 {self.form.dim} が {self.dim} と一致しません")


@dataclass(frozen=True)
class FormClassification:
    """根基次元・根基上の消滅・双曲階数・Arf 不変量"""
    dim: int
    radical_dim: int
    q_on_radical_zero: bool
    hyperbolic_rank: int
    arf: Optional[int]

    def __post_init__(self):
        if self.radical_dim + 2 * self.hyperbolic_rank != self.dim:
            raise ValueError("radical_dim + 2k が次元と一致しません")
        if self.q_on_radical_zero and self.arf is None:
            raise ValueError("根基上で消える形式には Arf 不変量が必要です")


# ----------------------------------------------------------------------------
# 基本演算
# ----------------------------------------------------------------------------

def evaluate(q: F2QuadraticForm, v: F2Vector) -> int:
    """q(Σ x_i e_i) = Σ x_i q(e_i) + Σ_{i<j} x_i x_j B(e_i, e_j)"""
    if v.dim != q.dim:
        raise ValueError(f"次元不一致: q={q.dim}, v={v.dim}")
    support = v.support()
    total = sum(q.basis_values[i] for i in support)
    matrix = q.form.matrix
    for pos, i in enumerate(support):
        row = matrix[i]
        total += sum(row[j] for j in support[pos + 1:])
    return total & 1


def polarize(q: F2QuadraticForm) -> F2BilinearForm:
    """B(x, y) = q(x+y) + q(x) + q(y) を基底上で計算"""
    units = [F2Vector.unit(q.dim, i) for i in range(q.dim)]
    values = [evaluate(q, e) for e in units]
    a = np.zeros((q.dim, q.dim), dtype=np.uint8)
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            a[i, j] = a[j, i] = evaluate(q, units[i] + units[j]) ^ values[i] ^ values[j]
    return F2BilinearForm.from_array(a) if q.dim else F2BilinearForm.zero(0)


def radical(form: F2BilinearForm) -> List[F2Vector]:
    """{x : B(x, y) = 0 ∀y} の行簡約基底"""
    if form.dim == 0:
        return []
    kernel = _null_space(form.as_array())
    if kernel.shape[0] == 0:
        return []
    rref, _ = _row_reduce(kernel)
    return [F2Vector(form.dim, tuple(int(x) for x in row)) for row in rref]


def symplectic_basis(form: F2BilinearForm) -> List[Tuple[F2Vector, F2Vector]]:
    """
    非退化形式のシンプレクティック基底 (a_i, b_i)

    基底ベクトルを番号順に処理し、残りのうち最小番号でペアリング1となるものと組にする。

    Raises:
        DegenerateFormError: 根基が0でない場合
    """
    rad = radical(form)
    if rad:
        raise DegenerateFormError(f"根基の次元が {len(rad)} です（非退化ではない）")

    remaining = [F2Vector.unit(form.dim, i) for i in range(form.dim)]
    pairs: List[Tuple[F2Vector, F2Vector]] = []
    while remaining:
        a = remaining.pop(0)
        index = next((i for i, v in enumerate(remaining) if form.pair(a, v)), None)
        if index is None:
            raise DegenerateFormError(f"{a.bits} に相手が見つかりません")
        b = remaining.pop(index)
        reduced = []
        for v in remaining:
            w = v
            if form.pair(v, b):
                w = w + a
            if form.pair(v, a):
                w = w + b
            reduced.append(w)
        remaining = reduced
        pairs.append((a, b))
    return pairs


def arf(q: F2QuadraticForm) -> int:
    """Σ q(a_i) q(b_i)（シンプレクティック基底に依らない）"""
    total = 0
    for a, b in symplectic_basis(q.form):
        total += evaluate(q, a) * evaluate(q, b)
    return total & 1


def restrict(q: F2QuadraticForm, vectors: Sequence[F2Vector]) -> F2QuadraticForm:
    """vectors を基底とする部分空間への制限（座標は vectors の順）"""
    values = tuple(evaluate(q, v) for v in vectors)
    size = len(vectors)
    a = np.zeros((size, size), dtype=np.uint8)
    for i in range(size):
        for j in range(i + 1, size):
            a[i, j] = a[j, i] = q.form.pair(vectors[i], vectors[j])
    form = F2BilinearForm.from_array(a) if size else F2BilinearForm.zero(0)
    return F2QuadraticForm(size, values, form)


def _complement_indices(basis: Sequence[F2Vector], dim: int) -> List[int]:
    pivots = {v.bits.index(1) for v in basis}
    return [i for i in range(dim) if i not in pivots]


def classify(q: F2QuadraticForm) -> FormClassification:
    """根基を求め、q が根基上で消えれば商形式の双曲階数と Arf 不変量で分類"""
    rad = radical(q.form)
    r = len(rad)
    k = (q.dim - r) // 2
    if any(evaluate(q, v) for v in rad):
        logger.debug(f"classify: dim={q.dim} radical={r} q nonzero on radical")
        return FormClassification(q.dim, r, False, k, None)

    complement = [F2Vector.unit(q.dim, i) for i in _complement_indices(rad, q.dim)]
    quotient = restrict(q, complement)
    value = arf(quotient)
    logger.debug(f"classify: dim={q.dim} radical={r} k={k} arf={value}")
    return FormClassification(q.dim, r, True, k, value)


def zero_count_closed_form(k: int, arf_value: int, radical_dim: int = 0) -> int:
    """2^r · 2^{k-1}(2^k + (-1)^arf)（k=0 のときは 2^r）"""
    if k < 0 or radical_dim < 0:
        raise ValueError(f"負の次元: k={k}, r={radical_dim}")
    if k == 0:
        if arf_value:
            raise ValueError("0次元の商形式の Arf 不変量は0です")
        return 1 << radical_dim
    sign = -1 if arf_value else 1
    return (1 << radical_dim) * ((1 << (2 * k - 1)) + sign * (1 << (k - 1)))


def count_zeros(q: F2QuadraticForm) -> int:
    """閉じた式による零点数"""
    c = classify(q)
    if not c.q_on_radical_zero:
        return 1 << (q.dim - 1)
    return zero_count_closed_form(c.hyperbolic_rank, c.arf, c.radical_dim)


def _bit_matrix(start: int, stop: int, dim: int) -> np.ndarray:
    ints = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(dim, dtype=np.int64)
    return (ints[:, None] >> shifts) & 1


def _evaluate_range(q: F2QuadraticForm, start: int, stop: int) -> np.ndarray:
    """整数 start..stop-1 が表すベクトル全てでの q の値"""
    bits = _bit_matrix(start, stop, q.dim)
    linear = bits @ np.array(q.basis_values, dtype=np.int64).reshape(q.dim)
    upper = np.triu(q.form.as_array().astype(np.int64), k=1)
    quadratic = ((bits @ upper) * bits).sum(axis=1)
    return ((linear + quadratic) & 1).astype(np.uint8)


def brute_force_zeros(q: F2QuadraticForm, max_dim: int = BRUTE_FORCE_MAX_DIM) -> int:
    """全 2^dim ベクトルを列挙して零点を数える"""
    if q.dim > max_dim:
        raise DimensionTooLargeError(f"次元 {q.dim} は全数列挙の上限 {max_dim} を超えています")
    total = 1 << q.dim
    zeros = 0
    for start in range(0, total, _ENUMERATION_CHUNK):
        values = _evaluate_range(q, start, min(start + _ENUMERATION_CHUNK, total))
        zeros += int(np.count_nonzero(values == 0))
    logger.debug(f"brute_force_zeros: dim={q.dim} zeros={zeros}")
    return zeros


def refinement_holds(q: F2QuadraticForm, form: Optional[F2BilinearForm] = None,
                     max_dim: int = REFINEMENT_CHECK_MAX_DIM) -> bool:
    """全ペア (x, y) で q(x+y) = q(x) + q(y) + B(x, y) を検査（B の既定は q.form）"""
    form = form if form is not None else q.form
    if form.dim != q.dim:
        raise ValueError(f"次元不一致: q={q.dim}, B={form.dim}")
    if q.dim > max_dim:
        raise DimensionTooLargeError(f"次元 {q.dim} は全ペア検査の上限 {max_dim} を超えています")
    size = 1 << q.dim
    table = _evaluate_range(q, 0, size).astype(np.int64)
    ints = np.arange(size, dtype=np.int64)
    bits = _bit_matrix(0, size, q.dim)
    b = form.as_array().astype(np.int64)
    for start in range(0, size, _PAIR_CHUNK_ROWS):
        stop = min(start + _PAIR_CHUNK_ROWS, size)
        pairing = ((bits[start:stop] @ b) @ bits.T) & 1
        lhs = table[ints[start:stop, None] ^ ints[None, :]]
        rhs = table[start:stop, None] ^ table[None, :] ^ pairing
        if not np.array_equal(lhs, rhs):
            return False
    return True


# ----------------------------------------------------------------------------
# 構成
# ----------------------------------------------------------------------------

def direct_sum(q1: F2QuadraticForm, q2: F2QuadraticForm) -> F2QuadraticForm:
    """ブロック直和 q1 ⊕ q2"""
    dim = q1.dim + q2.dim
    a = np.zeros((dim, dim), dtype=np.uint8)
    if q1.dim:
        a[:q1.dim, :q1.dim] = q1.form.as_array()
    if q2.dim:
        a[q1.dim:, q1.dim:] = q2.form.as_array()
    form = F2BilinearForm.from_array(a) if dim else F2BilinearForm.zero(0)
    return F2QuadraticForm(dim, q1.basis_values + q2.basis_values, form)


def zero_form(dim: int) -> F2QuadraticForm:
    """恒等的に0の二次形式（B = 0）"""
    return F2QuadraticForm(dim, (0,) * dim, F2BilinearForm.zero(dim))


def hyperbolic_form(k: int, arf_value: int = 0) -> F2QuadraticForm:
    """k 個の xy ブロック（arf=1 なら最後を x²+xy+y² に置換）"""
    if k < 0:
        raise ValueError(f"k が負です: {k}")
    if k == 0:
        if arf_value:
            raise ValueError("k=0 で Arf 1 の形式は存在しません")
        return zero_form(0)
    values = [0] * (2 * k)
    if arf_value:
        values[-2] = values[-1] = 1
    return F2QuadraticForm(2 * k, tuple(values), F2BilinearForm.standard_symplectic(2 * k))


def add_forms(q1: F2QuadraticForm, q2: F2QuadraticForm) -> F2QuadraticForm:
    """各点の和 (q1 + q2)(x) = q1(x) + q2(x)"""
    if q1.dim != q2.dim:
        raise ValueError(f"次元不一致: {q1.dim} != {q2.dim}")
    values = tuple(a ^ b for a, b in zip(q1.basis_values, q2.basis_values))
    if not q1.dim:
        return zero_form(0)
    return F2QuadraticForm(q1.dim, values,
                           F2BilinearForm.from_array(q1.form.as_array() ^ q2.form.as_array()))


def product_of_linear_forms(l1: F2Vector, l2: F2Vector) -> F2QuadraticForm:
    """q(x) = l1(x)·l2(x)"""
    if l1.dim != l2.dim:
        raise ValueError(f"次元不一致: {l1.dim} != {l2.dim}")
    dim = l1.dim
    values = tuple(a & b for a, b in zip(l1.bits, l2.bits))
    a = np.zeros((dim, dim), dtype=np.uint8)
    for i in range(dim):
        for j in range(i + 1, dim):
            a[i, j] = a[j, i] = (l1.bits[i] & l2.bits[j]) ^ (l1.bits[j] & l2.bits[i])
    form = F2BilinearForm.from_array(a) if dim else F2BilinearForm.zero(0)
    return F2QuadraticForm(dim, values, form)


def change_of_basis(q: F2QuadraticForm, matrix) -> F2QuadraticForm:
    """行を新しい基底ベクトルとする可逆行列で座標変換"""
    p = np.asarray(matrix, dtype=np.uint8) & 1
    if p.shape != (q.dim, q.dim):
        raise ValueError(f"行列の形 {p.shape} が ({q.dim}, {q.dim}) ではありません")
    if gf2_rank(p) != q.dim:
        raise ValueError("基底変換行列が可逆ではありません")
    rows = [F2Vector(q.dim, tuple(int(x) for x in row)) for row in p]
    return restrict(q, rows)


def random_invertible_matrix(rng: random.Random, dim: int) -> np.ndarray:
    """GF(2) 上の一様ランダムな可逆行列"""
    if dim == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    while True:
        m = np.array([[rng.randint(0, 1) for _ in range(dim)] for _ in range(dim)], dtype=np.uint8)
        if gf2_rank(m) == dim:
            return m


def random_quadratic_form(rng: random.Random, dim: int, kind: str = 'random') -> F2QuadraticForm:
    """
    ランダムな二次形式を生成

    Args:
        rng: 乱数生成器
        dim: 次元
        kind: 'random'（任意の交代形式）, 'nondegenerate'（dim 偶数）,
              'vanishing_radical'（根基上で消える退化形式）
    """
    if kind == 'random':
        a = np.zeros((dim, dim), dtype=np.uint8)
        for i in range(dim):
            for j in range(i + 1, dim):
                a[i, j] = a[j, i] = rng.randint(0, 1)
        values = tuple(rng.randint(0, 1) for _ in range(dim))
        form = F2BilinearForm.from_array(a) if dim else F2BilinearForm.zero(0)
        return F2QuadraticForm(dim, values, form)
    if kind == 'nondegenerate':
        if dim % 2:
            raise ValueError(f"非退化形式には偶数次元が必要です: {dim}")
        values = tuple(rng.randint(0, 1) for _ in range(dim))
        base = F2QuadraticForm(dim, values, F2BilinearForm.standard_symplectic(dim))
        return change_of_basis(base, random_invertible_matrix(rng, dim))
    if kind == 'vanishing_radical':
        r = rng.randint(0, dim)
        if (dim - r) % 2:
            r += 1
        k = (dim - r) // 2
        base = direct_sum(hyperbolic_form(k, rng.randint(0, 1) if k else 0), zero_form(r))
        return change_of_basis(base, random_invertible_matrix(rng, dim))
    raise ValueError(f"未知の生成種別: {kind}")


# ----------------------------------------------------------------------------
# テキスト形式
# ----------------------------------------------------------------------------

def _tokens(line: str) -> List[Tuple[str, int]]:
    """空白区切りのトークンと1始まりの列番号"""
    tokens = []
    col = 0
    while col < len(line):
        if line[col].isspace():
            col += 1
            continue
        start = col
        while col < len(line) and not line[col].isspace():
            col += 1
        tokens.append((line[start:col], start + 1))
    return tokens


def _parse_bit(token: str, line: int, column: int) -> int:
    if token not in ('0', '1'):
        raise FormParseError(f"0 または 1 が必要です: {token!r}", line, column)
    return int(token)


def parse_form_text(text: str) -> F2QuadraticForm:
    """
    二次形式テキストを解析

    1行目: 次元 dim / 2行目: 基底での値 dim 個 / 続く dim 行: 双線形形式の行。
    空行と '#' で始まる行は無視する。

    Raises:
        FormParseError: 形式違反（非対称・対角非零を含む）
    """
    lines = [(number, _tokens(raw)) for number, raw in enumerate(text.splitlines(), start=1)
             if raw.strip() and not raw.lstrip().startswith('#')]
    if not lines:
        raise FormParseError("次元の行がありません", 1, 1)

    number, tokens = lines[0]
    if len(tokens) != 1:
        raise FormParseError("1行目は次元1つだけです", number, tokens[-1][1] if tokens else 1)
    token, column = tokens[0]
    try:
        dim = int(token)
    except ValueError:
        raise FormParseError(f"次元が整数ではありません: {token!r}", number, column)
    if dim < 0:
        raise FormParseError(f"次元が負です: {dim}", number, column)

    body = lines[1:]
    expected = 1 + dim if dim else 0
    if len(body) != expected:
        last = body[-1][0] if body else number
        raise FormParseError(f"{expected} 行が必要ですが {len(body)} 行あります", last, 1)
    if dim == 0:
        return zero_form(0)

    def row_bits(entry) -> List[int]:
        line_no, toks = entry
        if len(toks) != dim:
            col = toks[dim][1] if len(toks) > dim else (toks[-1][1] if toks else 1)
            raise FormParseError(f"{dim} 個の値が必要ですが {len(toks)} 個あります", line_no, col)
        return [_parse_bit(t, line_no, c) for t, c in toks]

    values = row_bits(body[0])
    matrix = [row_bits(entry) for entry in body[1:]]
    for i in range(dim):
        line_no, toks = body[1 + i]
        if matrix[i][i]:
            raise FormParseError("対角成分が0ではありません", line_no, toks[i][1])
        for j in range(i):
            if matrix[i][j] != matrix[j][i]:
                raise FormParseError(f"行列が対称ではありません: ({i + 1},{j + 1})", line_no, toks[j][1])
    return F2QuadraticForm(dim, tuple(values), F2BilinearForm(dim, tuple(tuple(r) for r in matrix)))


def format_form_text(q: F2QuadraticForm) -> str:
    """parse_form_text が読める形式で書き出す"""
    lines = [str(q.dim)]
    if q.dim:
        lines.append(' '.join(str(b) for b in q.basis_values))
        lines.extend(' '.join(str(b) for b in row) for row in q.form.matrix)
    return '\n'.join(lines) + '\n'


def load_form_file(path: Union[str, Path]) -> F2QuadraticForm:
    """ファイルから二次形式を読み込み"""
    text = Path(path).read_text(encoding='utf-8')
    return parse_form_text(text)
