#!/usr/bin/env python3
"""
Verify Suite - 恒等式の一括検証

このモジュールは以下の責務を持つ：
1. 各モジュールの性質を名前付きの検査として実行
2. 検査結果 (CheckResult) の収集と VerifyReport への集約
3. 経過時間と常駐メモリのログ出力（標準出力には載せない）

スイート: f2, ko, symbolic, geometry, census（all は全て）
"""

import logging
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from lib.utils import get_memory_usage_mb
from src.component_census import (
    build_explicit_prym_form,
    census_sl,
    census_sl_via_model,
    census_sp,
    crosscheck_n2,
    hz_accounting,
    hz_orbit,
    maximal_component_count,
    orbit_label,
    roots_of_unity_filter,
    sp_total_check,
)
from src.f2_forms import (
    F2Vector,
    add_forms,
    arf,
    brute_force_zeros,
    change_of_basis,
    count_zeros,
    direct_sum,
    evaluate,
    hyperbolic_form,
    polarize,
    product_of_linear_forms,
    random_invertible_matrix,
    random_quadratic_form,
    refinement_holds,
    zero_form,
)
from src.higgs_symbolic import (
    canonical_higgs_sl,
    canonical_higgs_sp,
    char_poly_bezout,
    char_poly_direct,
    companion_char_poly,
    leading_coefficients,
    random_polynomial,
    recover_generators,
    sp_char_poly,
    verify_sp_factorization,
)
from src.ko_surface import KORing, SurfaceH1, ThetaModel, phi, solve_w2, theorem_w2
from src.spectral_invariants import (
    KIND_SL,
    KIND_SP,
    c1_from_ell,
    canonical_c1_sp,
    canonical_spin_degree,
    canonical_w2_sl,
    character_variety_dim,
    direct_image_degree,
    direct_image_trivial_ledger,
    dirac_rank_check,
    geometry,
    h1_splitting,
    hz_dim,
    lambda_rank,
    lefschetz_dims,
    norm_map_degree,
)

logger = logging.getLogger(__name__)

SUITES = ('f2', 'ko', 'symbolic', 'geometry', 'census')

# 全数列挙で確認する二次形式の最大次元
F2_SAMPLE_MAX_DIM = 16
# 極化と全ペア精密化を確かめる最大次元
POLARIZE_MAX_DIM = 12
ARF_BASIS_SAMPLES = 100
ARF_SUM_MAX_DIM = 8
# 明示的な Prym 形式を全数列挙する (n, g)
EXPLICIT_PRYM_CASES = ((2, 2), (2, 3), (3, 2))
# Bezout 経路と直接計算を比べる n の上限
BEZOUT_MAX_RANK = 7
SP_FACTORIZATION_MAX_M = 4
ROOTS_FILTER_MAX_N = 64


@dataclass(frozen=True)
class CheckResult:
    name: str
    params: str
    passed: bool
    details: str = ''


@dataclass
class VerifyReport:
    suites: Tuple[str, ...]
    checks: List[CheckResult] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    memory_mb: float = 0.0

    @property
    def overall_pass(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


class VerifySuite:
    """検証スイートの実行クラス"""

    def __init__(self, max_g: int = 8, max_rank: int = 8, seed: int = 20240,
                 samples: int = 200, symbolic_max_rank: int = 8):
        if max_g < 2:
            raise ValueError(f"max_g は2以上が必要です: {max_g}")
        if max_rank < 2:
            raise ValueError(f"max_rank は2以上が必要です: {max_rank}")
        if samples < 1:
            raise ValueError(f"samples は1以上が必要です: {samples}")
        self.max_g = max_g
        self.max_rank = max_rank
        self.seed = seed
        self.samples = samples
        self.symbolic_max_rank = symbolic_max_rank
        self._runners: Dict[str, Callable[[], List[CheckResult]]] = {
            'f2': self.suite_f2,
            'ko': self.suite_ko,
            'symbolic': self.suite_symbolic,
            'geometry': self.suite_geometry,
            'census': self.suite_census,
        }

    @staticmethod
    def _run_check(name: str, params: str, body: Callable[[], Tuple[bool, str]]) -> CheckResult:
        try:
            passed, details = body()
        except (AssertionError, ValueError) as e:
            passed, details = False, f"{type(e).__name__}: {e}"
        if not passed:
            logger.error(f"Check failed: {name} [{params}] {details}")
        return CheckResult(name, params, passed, details)

    def _rng(self, salt: int) -> random.Random:
        return random.Random(self.seed * 1009 + salt)

    def _genera(self) -> range:
        return range(2, self.max_g + 1)

    # ------------------------------------------------------------------
    # f2
    # ------------------------------------------------------------------

    def suite_f2(self) -> List[CheckResult]:
        return [
            self._run_check('closed_form==brute_force', f"samples={self.samples}, dim<={F2_SAMPLE_MAX_DIM}",
                            self._check_zero_count_law),
            self._run_check('polarize==form, refinement exhaustive', f"dim<={POLARIZE_MAX_DIM}",
                            self._check_polarization),
            self._run_check('arf basis independence', f"forms={ARF_BASIS_SAMPLES}, dim<={POLARIZE_MAX_DIM}",
                            self._check_arf_basis_independence),
            self._run_check('arf additive under direct_sum', f"all pairs dim<={ARF_SUM_MAX_DIM}",
                            self._check_arf_additivity),
            self._run_check('substitution identity', 'F2^4', self._check_substitution_identity),
        ]

    def _check_zero_count_law(self) -> Tuple[bool, str]:
        rng = self._rng(1)
        kinds = ('random', 'nondegenerate', 'vanishing_radical')
        agree = 0
        for index in range(self.samples):
            kind = kinds[index % len(kinds)]
            dim = rng.randint(1, F2_SAMPLE_MAX_DIM)
            if kind == 'nondegenerate' and dim % 2:
                dim = dim - 1 if dim > 1 else 2
            q = random_quadratic_form(rng, dim, kind)
            if polarize(q) != q.form:
                return False, f"polarize differs from form (dim={dim}, kind={kind})"
            if count_zeros(q) == brute_force_zeros(q):
                agree += 1
        return agree == self.samples, f"{agree}/{self.samples} agree"

    def _check_polarization(self) -> Tuple[bool, str]:
        rng = self._rng(2)
        count = 0
        for dim in range(1, POLARIZE_MAX_DIM + 1):
            kinds = ('random', 'vanishing_radical') + (('nondegenerate',) if dim % 2 == 0 else ())
            for kind in kinds:
                q = random_quadratic_form(rng, dim, kind)
                if polarize(q) != q.form or not refinement_holds(q):
                    return False, f"dim={dim} kind={kind}"
                count += 1
        return True, f"{count} forms"

    def _check_arf_basis_independence(self) -> Tuple[bool, str]:
        rng = self._rng(3)
        for _ in range(ARF_BASIS_SAMPLES):
            dim = 2 * rng.randint(1, POLARIZE_MAX_DIM // 2)
            q = random_quadratic_form(rng, dim, 'nondegenerate')
            moved = change_of_basis(q, random_invertible_matrix(rng, dim))
            if arf(moved) != arf(q):
                return False, f"arf changed under change of basis (dim={dim})"
        return True, f"{ARF_BASIS_SAMPLES} forms"

    def _check_arf_additivity(self) -> Tuple[bool, str]:
        rng = self._rng(4)
        forms = []
        for k in range(1, ARF_SUM_MAX_DIM // 2 + 1):
            for arf_value in (0, 1):
                q = change_of_basis(hyperbolic_form(k, arf_value), random_invertible_matrix(rng, 2 * k))
                forms.append((q, arf_value))
        for q1, arf1 in forms:
            for q2, arf2 in forms:
                if arf(direct_sum(q1, q2)) != arf1 ^ arf2:
                    return False, f"dims {q1.dim}+{q2.dim}, arf {arf1}+{arf2}"
        return True, f"{len(forms) ** 2} pairs"

    @staticmethod
    def _check_substitution_identity() -> Tuple[bool, str]:
        # 座標 (x, y, u, v)
        lhs = add_forms(
            product_of_linear_forms(F2Vector.from_bits((1, 0, 1, 0)), F2Vector.from_bits((1, 1, 1, 0))),
            product_of_linear_forms(F2Vector.from_bits((0, 1, 0, 1)), F2Vector.from_bits((0, 1, 1, 1))),
        )
        rhs = direct_sum(hyperbolic_form(1, 1), hyperbolic_form(1, 1))
        points = [F2Vector.from_int(4, i) for i in range(16)]
        equal = sum(evaluate(lhs, v) == evaluate(rhs, v) for v in points)
        return equal == 16, f"{equal}/16 points equal"

    # ------------------------------------------------------------------
    # ko
    # ------------------------------------------------------------------

    def suite_ko(self) -> List[CheckResult]:
        trials = 5 * self.samples
        checks = []
        genera = (2, 3) if self.max_g >= 3 else (2,)
        for g in genera:
            surface = SurfaceH1.standard(g)
            params = f"g={g}, trials={trials}"
            checks.append(self._run_check('ko associativity', params,
                                          lambda s=surface: self._check_associativity(s, trials)))
            checks.append(self._run_check('phi additivity (refinement)', params,
                                          lambda s=surface: self._check_phi_additivity(s, trials)))
            checks.append(self._run_check('phi additivity fails (non-refinement)', f"g={g}",
                                          lambda s=surface: self._check_broken_theta(s, trials)))
            checks.append(self._run_check('w2 from phi', params,
                                          lambda s=surface: self._check_w2_formula(s, trials)))
        checks.append(self._run_check('default theta even with 2^(g-1)(2^g+1) zeros', f"g<={self.max_g}",
                                      self._check_default_theta))
        return checks

    def _check_default_theta(self) -> Tuple[bool, str]:
        for g in self._genera():
            surface = SurfaceH1.standard(g)
            theta = ThetaModel.default(surface)
            expected = (1 << (g - 1)) * ((1 << g) + 1)
            if not theta.is_refinement_of(surface) or arf(theta.q) != 0:
                return False, f"default model is not an even refinement at g={g}"
            if count_zeros(theta.q) != expected:
                return False, f"zero count {count_zeros(theta.q)} != {expected} at g={g}"
            if surface.dim <= F2_SAMPLE_MAX_DIM and brute_force_zeros(theta.q) != expected:
                return False, f"brute force differs at g={g}"
        return True, f"g=2..{self.max_g}"

    def _random_class(self, ring: KORing, rng: random.Random):
        return ring.class_of_bundle(rng.randint(1, 6), ring.surface.random_class(rng), rng.randint(0, 1))

    def _check_associativity(self, surface: SurfaceH1, trials: int) -> Tuple[bool, str]:
        ring = KORing(surface)
        rng = self._rng(10 + surface.genus)
        for _ in range(trials):
            a, b, c = (self._random_class(ring, rng) for _ in range(3))
            if ring.ko_add(ring.ko_add(a, b), c) != ring.ko_add(a, ring.ko_add(b, c)):
                return False, f"counterexample {a}, {b}, {c}"
            if ring.ko_add(a, b) != ring.ko_add(b, a):
                return False, f"not commutative {a}, {b}"
            if ring.ko_add(a, ring.ko_negate(a)) != ring.zero():
                return False, f"no inverse {a}"
        return True, f"{trials} triples"

    def _check_phi_additivity(self, surface: SurfaceH1, trials: int) -> Tuple[bool, str]:
        ring = KORing(surface)
        rng = self._rng(20 + surface.genus)
        for theta in (ThetaModel.default(surface), ThetaModel.odd(surface)):
            for _ in range(trials):
                a, b = self._random_class(ring, rng), self._random_class(ring, rng)
                if phi(ring.ko_add(a, b), theta) != phi(a, theta) ^ phi(b, theta):
                    return False, f"counterexample {a}, {b}"
        return True, f"{2 * trials} pairs"

    def _check_broken_theta(self, surface: SurfaceH1, trials: int) -> Tuple[bool, str]:
        ring = KORing(surface)
        rng = self._rng(30 + surface.genus)
        broken = ThetaModel.unchecked(zero_form(surface.dim))
        candidates = [(ring.alpha(F2Vector.unit(surface.dim, 0)), ring.alpha(F2Vector.unit(surface.dim, 1)))]
        candidates += [(self._random_class(ring, rng), self._random_class(ring, rng)) for _ in range(trials)]
        failures = sum(phi(ring.ko_add(a, b), broken) != phi(a, broken) ^ phi(b, broken)
                       for a, b in candidates)
        return failures > 0, f"{failures}/{len(candidates)} pairs break additivity"

    def _check_w2_formula(self, surface: SurfaceH1, trials: int) -> Tuple[bool, str]:
        ring = KORing(surface)
        rng = self._rng(40 + surface.genus)
        theta = ThetaModel.default(surface)
        for _ in range(trials):
            n, w1, w2 = rng.randint(1, 6), surface.random_class(rng), rng.randint(0, 1)
            bundle = ring.class_of_bundle(n, w1, w2)
            if bundle != ring.expand_bundle(n, w1, w2):
                return False, f"expansion mismatch n={n}"
            value = phi(bundle, theta)
            if solve_w2(value, n, w1, theta) != w2 or theorem_w2(value, w1, theta) != w2:
                return False, f"w2 not recovered n={n} w1={w1.bits}"
        return True, f"{trials} bundles"

    # ------------------------------------------------------------------
    # symbolic
    # ------------------------------------------------------------------

    def suite_symbolic(self) -> List[CheckResult]:
        upper = min(BEZOUT_MAX_RANK, self.symbolic_max_rank)
        sp_upper = min(SP_FACTORIZATION_MAX_M, self.symbolic_max_rank // 2)
        return [
            self._run_check(f"bezout==direct n=2..{upper}", f"n<={upper}",
                            lambda: self._check_bezout(upper)),
            self._run_check('companion!=direct n=3', 'n=3', self._check_companion),
            self._run_check(f"sp factorization m=1..{sp_upper}", f"m<={sp_upper}",
                            lambda: self._check_sp_factorization(sp_upper)),
            self._run_check('polynomial ring axioms', f"samples={self.samples}", self._check_ring_axioms),
            self._run_check('canonical higgs persymmetric and trace zero', f"n<={upper}, m<={sp_upper}",
                            lambda: self._check_canonical_shape(upper, sp_upper)),
            self._run_check('generator recovery', f"n<={upper}",
                            lambda: self._check_recovery(upper)),
        ]

    @staticmethod
    def _check_bezout(upper: int) -> Tuple[bool, str]:
        for n in range(2, upper + 1):
            direct = char_poly_direct(canonical_higgs_sl(n))
            if direct != char_poly_bezout(n):
                return False, f"mismatch at n={n}"
            if not direct.is_weight_homogeneous():
                return False, f"not weight-homogeneous at n={n}"
        return True, f"n=2..{upper} equal"

    @staticmethod
    def _check_companion() -> Tuple[bool, str]:
        differs = companion_char_poly(3) != char_poly_direct(canonical_higgs_sl(3))
        return differs, 'companion differs' if differs else 'companion unexpectedly equal'

    @staticmethod
    def _check_sp_factorization(upper: int) -> Tuple[bool, str]:
        for m in range(1, upper + 1):
            if not verify_sp_factorization(m):
                return False, f"factorization fails at m={m}"
            if not sp_char_poly(m).is_even_in_lambda():
                return False, f"not even in λ at m={m}"
        return True, f"m=1..{upper}"

    def _check_ring_axioms(self) -> Tuple[bool, str]:
        rng = self._rng(45)
        for _ in range(self.samples):
            p, q, r = (random_polynomial(rng) for _ in range(3))
            if (p + q) + r != p + (q + r) or p + q != q + p:
                return False, f"addition fails for {p!r}, {q!r}, {r!r}"
            if (p * q) * r != p * (q * r) or p * q != q * p:
                return False, f"multiplication fails for {p!r}, {q!r}, {r!r}"
            if p * (q + r) != p * q + p * r:
                return False, f"distributivity fails for {p!r}, {q!r}, {r!r}"
            if not (p - p).is_zero() or p * 1 != p or p + 0 != p:
                return False, f"identities fail for {p!r}"
        return True, f"{self.samples} triples"

    @staticmethod
    def _check_canonical_shape(upper: int, sp_upper: int) -> Tuple[bool, str]:
        for n in range(2, upper + 1):
            higgs = canonical_higgs_sl(n)
            if not higgs.is_persymmetric() or not higgs.trace().is_zero():
                return False, f"SL shape fails at n={n}"
            if not char_poly_direct(higgs).coefficient(n - 1).is_zero():
                return False, f"λ^(n-1) coefficient nonzero at n={n}"
        for m in range(1, sp_upper + 1):
            a, higgs = canonical_higgs_sp(m)
            if not a.is_persymmetric() or not higgs.trace().is_zero():
                return False, f"Sp shape fails at m={m}"
            if any(i % 2 for i in a.generators_used()):
                return False, f"odd generator in A at m={m}"
        return True, f"n=2..{upper}, m=1..{sp_upper}"

    def _check_recovery(self, upper: int) -> Tuple[bool, str]:
        rng = self._rng(50)
        for n in range(2, upper + 1):
            charpoly = char_poly_direct(canonical_higgs_sl(n))
            generators = list(range(2, n + 1))
            leading_coefficients(charpoly, generators)
            for _ in range(5):
                values = {i: rng.randint(-9, 9) for i in generators}
                coefficients = {w: charpoly.coefficient(n - w).evaluate(values) for w in generators}
                if recover_generators(charpoly, generators, coefficients) != values:
                    return False, f"recovery fails at n={n}"
        return True, f"n=2..{upper}"

    # ------------------------------------------------------------------
    # geometry
    # ------------------------------------------------------------------

    def suite_geometry(self) -> List[CheckResult]:
        params = f"rank<={self.max_rank}, g<={self.max_g}"
        return [
            self._run_check('riemann-hurwitz and hz_dim ledger', params, self._check_sp_geometry),
            self._run_check('dirac rank', params, self._check_dirac),
            self._run_check('canonical w2 == spin degree mod 2', params, self._check_canonical_sl),
            self._run_check('canonical c1 ledger', params, self._check_canonical_sp),
            self._run_check('c1 complement symmetry and lefschetz', params, self._check_ell),
            self._run_check('direct image degree', params, self._check_direct_image),
            self._run_check('lambda rank symmetry', params, self._check_lambda_rank),
        ]

    def _grid(self, start: int):
        for rank in range(start, self.max_rank + 1):
            for g in self._genera():
                yield rank, g

    def _check_sp_geometry(self) -> Tuple[bool, str]:
        count = 0
        for m, g in self._grid(1):
            geo = geometry(KIND_SP, m, g)
            hz_dim(m, g)
            character_variety_dim(KIND_SP, m, g)
            if geo.p != geo.g_S - geo.g_Sbar:
                return False, f"prym dim mismatch m={m} g={g}"
            count += 1
        for n, g in self._grid(2):
            h1_splitting(n, g)
            character_variety_dim(KIND_SL, n, g)
        return True, f"{count} (m, g) pairs"

    def _check_dirac(self) -> Tuple[bool, str]:
        return all(dirac_rank_check(m, g) for m, g in self._grid(1)), 'identity holds'

    def _check_canonical_sl(self) -> Tuple[bool, str]:
        for n, g in self._grid(2):
            if canonical_w2_sl(n, g) != canonical_spin_degree(n, g) % 2:
                return False, f"parity mismatch n={n} g={g}"
        return True, 'all parities agree'

    def _check_canonical_sp(self) -> Tuple[bool, str]:
        for m, g in self._grid(1):
            if canonical_c1_sp(m, g) != m * (g - 1):
                return False, f"c1 mismatch m={m} g={g}"
        return True, 'all ledgers agree'

    def _check_ell(self) -> Tuple[bool, str]:
        for m, g in self._grid(1):
            N = 4 * m * (g - 1)
            for ell in range(0, N + 1, 2):
                if c1_from_ell(m, g, ell) + c1_from_ell(m, g, N - ell) != 0:
                    return False, f"complement fails m={m} g={g} ℓ={ell}"
                if lefschetz_dims(m, g, ell, 2 * g).c1 != c1_from_ell(m, g, ell):
                    return False, f"lefschetz fails m={m} g={g} ℓ={ell}"
        return True, 'all even ℓ'

    def _check_direct_image(self) -> Tuple[bool, str]:
        for n, g in self._grid(2):
            if direct_image_degree(n * (n - 1) * (g - 1), n, g) != 0:
                return False, f"nonzero at n={n} g={g}"
            if norm_map_degree(0, n, g) != direct_image_trivial_ledger(n).total_degree(g):
                return False, f"trivial ledger mismatch n={n} g={g}"
        return True, 'SL normalization gives degree 0'

    def _check_lambda_rank(self) -> Tuple[bool, str]:
        for m, g in self._grid(1):
            N = 4 * m * (g - 1)
            for k in range(0, N // 2 + 1):
                if lambda_rank(m, g, k) != math.comb(N, N - 2 * k):
                    return False, f"asymmetric m={m} g={g} k={k}"
        return True, 'binomial symmetry holds'

    # ------------------------------------------------------------------
    # census
    # ------------------------------------------------------------------

    def suite_census(self) -> List[CheckResult]:
        params = f"rank<={self.max_rank}, g<={self.max_g}"
        return [
            self._run_check('census_sl==census_sl_via_model', params, self._check_sl_routes),
            self._run_check('explicit prym form brute force', 'dims 6, 12, 16', self._check_explicit_prym),
            self._run_check('census_sp(1,2) rows 16/96/16', 'm=1, g=2', self._check_sp_example),
            self._run_check('sp totals, symmetry and maximal rows', params, self._check_sp_totals),
            self._run_check('hz accounting', params, self._check_hz),
            self._run_check('roots of unity filter', f"N<={ROOTS_FILTER_MAX_N}", self._check_filter),
            self._run_check('crosscheck n=2', f"g<={self.max_g}", self._check_crosscheck),
        ]

    def _check_sl_routes(self) -> Tuple[bool, str]:
        count = 0
        for n, g in self._grid(2):
            if census_sl(n, g) != census_sl_via_model(n, g):
                return False, f"routes differ n={n} g={g}"
            count += 1
        return True, f"{count} (n, g) pairs agree"

    @staticmethod
    def _check_explicit_prym() -> Tuple[bool, str]:
        for n, g in EXPLICIT_PRYM_CASES:
            zeros = brute_force_zeros(build_explicit_prym_form(n, g))
            if zeros != census_sl(n, g).count_w2_0:
                return False, f"brute force {zeros} differs at n={n} g={g}"
        return True, f"{len(EXPLICIT_PRYM_CASES)} forms enumerated"

    @staticmethod
    def _check_sp_example() -> Tuple[bool, str]:
        counts = [row.count for row in census_sp(1, 2).rows]
        return counts == [16, 96, 16], f"rows {counts}"

    def _check_sp_totals(self) -> Tuple[bool, str]:
        for m, g in self._grid(1):
            sp_total_check(m, g)
            census = census_sp(m, g)
            if not census.is_symmetric():
                return False, f"asymmetric m={m} g={g}"
            maximal_component_count(m, g)
        return True, 'totals equal 2|P[2]|'

    def _check_hz(self) -> Tuple[bool, str]:
        rng = self._rng(60)
        for m, g in self._grid(1):
            hz_accounting(m, g)
        N = 4
        for _ in range(self.samples):
            size = 2 * rng.randint(0, N // 2)
            subset = rng.sample(range(1, N + 1), size)
            complement = [x for x in range(1, N + 1) if x not in subset]
            hz = hz_orbit(subset, N)
            if hz != hz_orbit(complement, N) or orbit_label(hz) != min(size, N - size):
                return False, f"orbit mismatch {sorted(subset)}"
            if c1_from_ell(1, 2, orbit_label(hz)) not in (1, 0):
                return False, f"label outside Milnor-Wood {sorted(subset)}"
        return True, 'classes and subsets balance'

    @staticmethod
    def _check_filter() -> Tuple[bool, str]:
        for N in range(ROOTS_FILTER_MAX_N + 1):
            values = [roots_of_unity_filter(N, r) for r in range(4)]
            if sum(values) != 1 << N:
                return False, f"residues do not sum to 2^N at N={N}"
        return True, f"N=0..{ROOTS_FILTER_MAX_N}, both routes agree"

    def _check_crosscheck(self) -> Tuple[bool, str]:
        for g in self._genera():
            report = crosscheck_n2(g)
            expected = 'plus' if (g - 1) % 2 == 0 else 'minus'
            if report.matching_residues != [0] or report.matching_closed_form != expected:
                return False, f"g={g}: residues {report.matching_residues}, form {report.matching_closed_form}"
        return True, 'ℓ ≡ 0 mod 4 matches for every g'

    # ------------------------------------------------------------------

    def run(self, suite: str = 'all') -> VerifyReport:
        """スイートを実行してレポートを返す"""
        if suite == 'all':
            names = SUITES
        elif suite in self._runners:
            names = (suite,)
        else:
            raise ValueError(f"未知のスイート: {suite}（{', '.join(SUITES + ('all',))}）")

        report = VerifyReport(suites=tuple(names))
        started = time.perf_counter()
        for name in names:
            logger.info(f"Running suite: {name}")
            report.checks.extend(self._runners[name]())
        report.elapsed_seconds = time.perf_counter() - started
        report.memory_mb = get_memory_usage_mb()
        logger.info(f"Verify finished: {len(report.checks)} checks, "
                    f"{len(report.failures)} failed, {report.elapsed_seconds:.2f}s, {report.memory_mb:.1f}MB")
        return report


def run_suite(suite: str = 'all', settings: Optional[Dict[str, int]] = None, **overrides) -> VerifyReport:
    """設定の既定値にオーバーライドを重ねて実行"""
    options = dict(settings or {})
    options.update({k: v for k, v in overrides.items() if v is not None})
    return VerifySuite(**options).run(suite)
