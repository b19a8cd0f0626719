#!/usr/bin/env python3
"""
Spectral Census CLI - コマンドラインの入口

このモジュールは以下の責務を持つ：
1. サブコマンド census / invariants / charpoly / verify / arf の解析
2. 設定 (SettingsManager) によるガードと既定値の適用
3. 結果の描画と一括出力
4. 終了コードの規約：0 成功、1 検証失敗・経路不一致、2 入力エラー

使い方:
    python3 src/cli.py census sl --n 3 --g 2 --json
    python3 src/cli.py verify --suite all
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

# パッケージルートの追加（相対インポート対応）
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import SettingsManager
from src.component_census import (
    build_explicit_prym_form,
    census_sl,
    census_sl_via_model,
    census_sp,
    crosscheck_n2,
    maximal_component_count,
    sp_total_check,
)
from src.f2_forms import (
    F2Vector,
    FormParseError,
    brute_force_zeros,
    classify,
    count_zeros,
    load_form_file,
)
from src.higgs_symbolic import (
    canonical_higgs_sl,
    char_poly_bezout,
    char_poly_direct,
    sp_char_poly,
    verify_sp_factorization,
)
from src.ko_surface import SurfaceH1, ThetaModel, theorem_w2
from src.report_formatter import (
    Document,
    arf_document,
    census_sl_document,
    census_sp_document,
    charpoly_document,
    invariants_document,
    render,
    verify_document,
)
from src.spectral_invariants import (
    KIND_SL,
    KIND_SP,
    canonical_c1_sp,
    canonical_exponents_sl,
    canonical_exponents_sp,
    canonical_spin_degree,
    canonical_w2_sl,
    canonical_w_exponents_sp,
    character_variety_dim,
    dirac_rank_check,
    direct_image_degree,
    geometry,
    h1_splitting,
    hz_dim,
    lambda_rank,
    pullback_theta_parity,
)
from src.verify_suite import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """引数の組み合わせが不正"""


def configure_logging(level: str):
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(getattr(logging, level, logging.INFO))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true', help='JSON で出力')
    output.add_argument('--csv', action='store_true', help='CSV で出力')
    common.add_argument('--quiet', action='store_true', help='WARNING 未満のログを抑制')

    parser = argparse.ArgumentParser(
        prog='spectral-census',
        description='Higgs bundle spectral data: quadratic forms, characteristic classes and component counts',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    census = sub.add_parser('census', parents=[common], help='特性類ごとの数え上げ')
    census.add_argument('group', choices=['sl', 'sp'])
    census.add_argument('--n', type=int, help='SL(n,R) の n')
    census.add_argument('--m', type=int, help='Sp(2m,R) の m')
    census.add_argument('--rank', type=int, help='--n / --m の別名')
    census.add_argument('--g', type=int, required=True, help='底曲線の種数')
    census.add_argument('--class', dest='class_filter', help="表示する類（例: 'w2=0', 'c1=-1'）")

    invariants = sub.add_parser('invariants', parents=[common], help='整数不変量の表')
    invariants.add_argument('--group', choices=['sl', 'sp'], required=True)
    invariants.add_argument('--n', type=int)
    invariants.add_argument('--m', type=int)
    invariants.add_argument('--rank', type=int)
    invariants.add_argument('--g', type=int, required=True)

    charpoly = sub.add_parser('charpoly', parents=[common], help='標準ヒッグス場の特性多項式')
    charpoly.add_argument('--group', choices=['sl', 'sp'], required=True)
    charpoly.add_argument('--rank', type=int, required=True, help='SL では n、Sp では m')
    charpoly.add_argument('--method', choices=['direct', 'bezout', 'both'], default='direct')

    verify = sub.add_parser('verify', parents=[common], help='恒等式の一括検証')
    verify.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    verify.add_argument('--max-g', type=int)
    verify.add_argument('--max-rank', type=int)
    verify.add_argument('--seed', type=int)
    verify.add_argument('--samples', type=int)

    arf = sub.add_parser('arf', parents=[common], help='二次形式ファイルの分類')
    arf.add_argument('form_file', help='二次形式テキストファイル')
    return parser


def _rank_param(args, group: str) -> int:
    primary = args.n if group == 'sl' else args.m
    value = primary if primary is not None else args.rank
    if value is None:
        flag = '--n' if group == 'sl' else '--m'
        raise UsageError(f"{flag}（または --rank）が必要です")
    return value


def _parse_class(text: Optional[str], prefix: str) -> Optional[int]:
    if text is None:
        return None
    value = text.strip()
    if value.startswith(prefix + '='):
        value = value[len(prefix) + 1:]
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"--class は '{prefix}=<整数>' の形式です: {text!r}")


# ----------------------------------------------------------------------------
# サブコマンド
# ----------------------------------------------------------------------------

def cmd_census(args, settings: SettingsManager) -> Tuple[int, Document]:
    rank = _rank_param(args, args.group)
    if args.group == 'sl':
        w2_filter = _parse_class(args.class_filter, 'w2')
        if w2_filter not in (None, 0, 1):
            raise UsageError(f"w2 は 0 または 1 です: {w2_filter}")
        census = census_sl(rank, args.g)
        crosscheck = crosscheck_n2(args.g) if rank == 2 else None
        doc = census_sl_document(census, w2_filter, crosscheck, census_sl_via_model(rank, args.g))
        limit = min(settings.get_explicit_form_max_dim(), settings.get_brute_force_max_dim())
        if 2 * census.p <= limit:
            form = build_explicit_prym_form(rank, args.g, max_dim=limit)
            doc.add_check('explicit form brute force == w2=0',
                          brute_force_zeros(form, max_dim=limit) == census.count_w2_0)
    else:
        census = census_sp(rank, args.g)
        doc = census_sp_document(census, _parse_class(args.class_filter, 'c1'))
        doc.add_check('total equals 2|P[2]|', sp_total_check(rank, args.g))
        doc.add_check('maximal row equals 2^(2q)',
                      maximal_component_count(rank, args.g) == census.rows[0].count)
    logger.info(f"Census finished: group={args.group} rank={rank} g={args.g}")
    status = EXIT_OK if all(c['pass'] for c in doc.checks) else EXIT_FAILED
    return status, doc


def _theorem_w2_rows(n: int, g: int):
    """標準切断 (w1=0) の w2 を φ_S(1) から読む。φ_S(1) は等方部分束の次数の偶奇"""
    surface = SurfaceH1.standard(g)
    phi_S_1 = canonical_spin_degree(n, g) % 2
    value = theorem_w2(phi_S_1, F2Vector.zero(surface.dim), ThetaModel.default(surface))
    return [('phi_S_1', phi_S_1), ('theorem_w2', value)]


def _invariant_quantities(kind: str, rank: int, g: int):
    geo = geometry(kind, rank, g)
    quantities = [('g_S', geo.g_S)]
    if kind == KIND_SL:
        n = rank
        quantities += [
            ('p', geo.p),
            ('character_variety_dim', character_variety_dim(kind, n, g)),
            ('h1_splitting', ' + '.join(str(x) for x in h1_splitting(n, g)[1:])),
            ('canonical_exponents', ' '.join(canonical_exponents_sl(n).labels())),
            ('canonical_degrees', ' '.join(str(d) for d in canonical_exponents_sl(n).degrees(g))),
            ('canonical_spin_degree', canonical_spin_degree(n, g)),
            ('canonical_w2', canonical_w2_sl(n, g)),
            ('pullback_theta_parity', pullback_theta_parity(n, g)),
            ('direct_image_degree_sl', direct_image_degree(n * (n - 1) * (g - 1), n, g)),
        ]
        if n % 2 == 0:
            quantities += _theorem_w2_rows(n, g)
        if n == 2:
            quantities.append(('milnor_wood_bound', 2 * g - 2))
        return quantities

    m = rank
    N = geo.N
    quantities += [
        ('g_Sbar', geo.g_Sbar),
        ('N', N),
        ('p', geo.p),
        ('q', geo.q),
        ('character_variety_dim', character_variety_dim(kind, m, g)),
        ('canonical_exponents', ' '.join(canonical_exponents_sp(m).labels())),
        ('canonical_w_exponents', ' '.join(canonical_w_exponents_sp(m).labels())),
        ('canonical_c1', canonical_c1_sp(m, g)),
        ('milnor_wood_bound', m * (g - 1)),
        ('hz_dim', hz_dim(m, g)),
        ('dirac_rank', (2 * g - 2) * 2 * m if dirac_rank_check(m, g) else 'mismatch'),
        ('lambda_rank_k1', lambda_rank(m, g, 1)),
        ('lambda_rank_middle', lambda_rank(m, g, N // 4)),
    ]
    return quantities


def cmd_invariants(args, settings: SettingsManager) -> Tuple[int, Document]:
    rank = _rank_param(args, args.group)
    kind = KIND_SL if args.group == 'sl' else KIND_SP
    quantities = _invariant_quantities(kind, rank, args.g)
    label = geometry(kind, rank, args.g).group_label
    key = 'n' if kind == KIND_SL else 'm'
    return EXIT_OK, invariants_document(args.group, label, {key: rank, 'g': args.g}, quantities)


def cmd_charpoly(args, settings: SettingsManager) -> Tuple[int, Document]:
    limit = settings.get_max_symbolic_rank()
    size = args.rank if args.group == 'sl' else 2 * args.rank
    if args.rank < (2 if args.group == 'sl' else 1) or size > limit:
        raise UsageError(f"行列の大きさ {size} は範囲外です（上限 {limit}）")
    if args.group == 'sp' and args.method != 'direct':
        raise UsageError("Sp の特性多項式は --method direct のみです")

    results = {}
    if args.group == 'sl':
        if args.method in ('direct', 'both'):
            results['direct'] = char_poly_direct(canonical_higgs_sl(args.rank))
        if args.method in ('bezout', 'both'):
            results['bezout'] = char_poly_bezout(args.rank)
        verdict = results['direct'] == results['bezout'] if args.method == 'both' else None
    else:
        results['direct'] = sp_char_poly(args.rank)
        verdict = None

    doc = charpoly_document(args.group, args.rank, results, verdict)
    if args.group == 'sp':
        doc.add_check('det(λ-Φ) == det(λ²-A)', verify_sp_factorization(args.rank))
    status = EXIT_OK if all(c['pass'] for c in doc.checks) else EXIT_FAILED
    return status, doc


def cmd_verify(args, settings: SettingsManager) -> Tuple[int, Document]:
    defaults = settings.get_verify_defaults()
    defaults['symbolic_max_rank'] = settings.get_max_symbolic_rank()
    report = run_suite(args.suite, defaults, max_g=args.max_g, max_rank=args.max_rank,
                       seed=args.seed, samples=args.samples)
    return (EXIT_OK if report.overall_pass else EXIT_FAILED), verify_document(report)


def cmd_arf(args, settings: SettingsManager) -> Tuple[int, Document]:
    try:
        q = load_form_file(args.form_file)
    except OSError as e:
        raise UsageError(f"ファイルを読めません: {e}")
    classification = classify(q)
    zeros = count_zeros(q)
    limit = min(settings.get_arf_confirm_max_dim(), settings.get_brute_force_max_dim())
    brute = brute_force_zeros(q, max_dim=limit) if q.dim <= limit else None
    doc = arf_document(args.form_file, classification, zeros, brute)
    status = EXIT_OK if all(c['pass'] for c in doc.checks) else EXIT_FAILED
    return status, doc


COMMANDS = {
    'census': cmd_census,
    'invariants': cmd_invariants,
    'charpoly': cmd_charpoly,
    'verify': cmd_verify,
    'arf': cmd_arf,
}


def main(argv: Optional[List[str]] = None) -> int:
    """エントリポイント。終了コードを返す"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    settings = SettingsManager()
    configure_logging('WARNING' if args.quiet else settings.get_log_level())
    fmt = 'json' if args.json else 'csv' if args.csv else 'text'

    try:
        status, doc = COMMANDS[args.command](args, settings)
    except FormParseError as e:
        print(f"error: {args.form_file}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as e:
        logger.error(f"Consistency check failed: {e}")
        print(f"error: consistency check failed: {e}", file=sys.stderr)
        return EXIT_FAILED

    sys.stdout.write(render(doc, fmt))
    sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
