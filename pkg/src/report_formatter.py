#!/usr/bin/env python3
"""
Report Formatter - 計算結果の出力整形

このモジュールは以下の責務を持つ：
1. 各サブコマンドの結果を Document（表・検査・補足）に変換
2. text / json / csv への描画
3. 巨大な数を10進文字列として保持

同じ入力からは常に同じ文字列を生成する。
"""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from lib.utils import bit_length_label
from src.component_census import CrosscheckN2Report, SLCensus, SpCensus
from src.f2_forms import FormClassification
from src.higgs_symbolic import CharPoly
from src.verify_suite import VerifyReport

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json', 'csv')


@dataclass
class Document:
    """描画前の結果。fields と sections は JSON の最上位キーになる"""
    title: str
    fields: Dict[str, object] = field(default_factory=dict)
    summary: List[str] = field(default_factory=list)
    rows: List[Dict[str, object]] = field(default_factory=list)
    checks: List[Dict[str, object]] = field(default_factory=list)
    sections: Dict[str, object] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def add_check(self, name: str, passed: bool, details: str = ''):
        entry: Dict[str, object] = {'name': name, 'pass': bool(passed)}
        if details:
            entry['details'] = details
        self.checks.append(entry)

    def to_json_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = dict(self.fields)
        out['rows'] = self.rows
        out['checks'] = self.checks
        out.update(self.sections)
        if self.notes:
            out['notes'] = self.notes
        return out


# ----------------------------------------------------------------------------
# 描画
# ----------------------------------------------------------------------------

def _table(rows: Sequence[Dict[str, object]]) -> List[str]:
    if not rows:
        return []
    columns = list(rows[0].keys())
    cells = [[str(row.get(c, '')) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    lines = ['  '.join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append('  '.join('-' * w for w in widths))
    lines.extend('  '.join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells)
    return lines


def render_text(doc: Document) -> str:
    lines = [doc.title]
    lines.extend(doc.summary)
    table = _table(doc.rows)
    if table:
        lines.append('')
        lines.extend(table)
    if doc.checks:
        lines.append('')
        for check in doc.checks:
            status = 'pass' if check['pass'] else 'FAIL'
            details = f"  ({check['details']})" if check.get('details') else ''
            lines.append(f"{check['name']}: {status}{details}")
    for name, value in doc.sections.items():
        if isinstance(value, dict) and not any(isinstance(v, (list, dict)) for v in value.values()):
            lines.append('')
            lines.append(f"[{name}]")
            lines.extend(f"{k}: {v}" for k, v in value.items())
    if doc.notes:
        lines.append('')
        lines.extend(f"note: {n}" for n in doc.notes)
    return '\n'.join(lines) + '\n'


def render_json(doc: Document) -> str:
    return json.dumps(doc.to_json_dict(), ensure_ascii=False, indent=2) + '\n'


def render_csv(doc: Document) -> str:
    """表の行を CSV に。検査は check,pass の2列で続ける"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    if doc.rows:
        columns = list(doc.rows[0].keys())
        writer.writerow(columns)
        for row in doc.rows:
            writer.writerow([row.get(c, '') for c in columns])
    if doc.checks:
        if doc.rows:
            writer.writerow([])
        writer.writerow(['check', 'pass'])
        for check in doc.checks:
            writer.writerow([check['name'], 'true' if check['pass'] else 'false'])
    return buffer.getvalue()


def render(doc: Document, fmt: str = 'text') -> str:
    if fmt == 'json':
        return render_json(doc)
    if fmt == 'csv':
        return render_csv(doc)
    if fmt == 'text':
        return render_text(doc)
    raise ValueError(f"未知の出力形式: {fmt}（{', '.join(FORMATS)}）")


# ----------------------------------------------------------------------------
# 各コマンドの Document
# ----------------------------------------------------------------------------

def census_sl_document(census: SLCensus, w2_filter: Optional[int] = None,
                       crosscheck: Optional[CrosscheckN2Report] = None,
                       model_census: Optional[SLCensus] = None) -> Document:
    doc = Document(title=f"SL({census.n},R) census, g={census.g}")
    doc.fields = {'group': 'sl', 'params': {'n': census.n, 'g': census.g, 'p': census.p}}
    doc.summary.append(f"p={census.p}, total=2^{2 * census.p} ({bit_length_label(census.total)})")
    for w2 in (0, 1):
        if w2_filter is None or w2_filter == w2:
            doc.rows.append({'class': f"w2={w2}", 'count': str(census.count_for(w2))})
    doc.add_check('w2 counts sum to 2^(2p)', census.count_w2_0 + census.count_w2_1 == census.total)
    if model_census is not None:
        doc.add_check('closed form == quadratic form model', census == model_census)
    if crosscheck is not None:
        doc.add_check('crosscheck ℓ≡0 mod 4 matches census', crosscheck.adopted_matches)
        doc.sections['crosscheck'] = crosscheck_section(crosscheck)
        doc.notes.append('the w2=0 congruence is ℓ≡0 mod 4 (adopted); ℓ≡2g-2 mod 4 is shown '
                         'for comparison and agrees only for odd g')
    return doc


def crosscheck_section(report: CrosscheckN2Report) -> Dict[str, object]:
    return {
        'g': report.g,
        'census_w2_0': str(report.census_w2_0),
        'census_w2_1': str(report.census_w2_1),
        'C(0)': str(report.by_residue[0]),
        'C(2)': str(report.by_residue[2]),
        'adopted_convention': 'ℓ≡0 mod 4',
        'adopted_value': str(report.adopted_value),
        'adopted_matches': report.adopted_matches,
        'literal_convention': f"ℓ≡{report.literal_residue} mod 4 (2g-2)",
        'literal_value': str(report.literal_value),
        'literal_matches': report.literal_matches,
        'closed_form_plus': str(report.closed_form_plus),
        'closed_form_minus': str(report.closed_form_minus),
        'matching_closed_form': report.matching_closed_form or 'none',
    }


def census_sp_document(census: SpCensus, c1_filter: Optional[int] = None) -> Document:
    doc = Document(title=f"Sp({2 * census.m},R) census, g={census.g}")
    doc.fields = {'group': 'sp', 'params': {'m': census.m, 'g': census.g}}
    bound = census.m * (census.g - 1)
    doc.summary.append(f"Milnor-Wood bound |c1| <= {bound}, rows={len(census.rows)}")
    rows = [census.row_for(c1_filter)] if c1_filter is not None else census.rows
    for row in rows:
        doc.rows.append({'class': f"c1={row.c1}", 'ell': row.ell, 'count': str(row.count)})
    doc.add_check('rows symmetric in c1', census.is_symmetric())
    doc.add_check('maximal rows c1=±bound agree',
                  census.rows[0].count == census.rows[-1].count == census.row_for(bound).count)
    doc.summary.append(f"total={census.total} ({bit_length_label(census.total)})")
    return doc


def invariants_document(group: str, label: str, params: Dict[str, int],
                        quantities: Sequence[Tuple[str, object]]) -> Document:
    doc = Document(title=f"{label} invariants, g={params['g']}")
    doc.fields = {'group': group, 'params': dict(params)}
    for name, value in quantities:
        doc.rows.append({'quantity': name, 'value': str(value)})
    return doc


def charpoly_document(group: str, rank: int, results: Dict[str, CharPoly],
                      verdict: Optional[bool]) -> Document:
    doc = Document(title=f"characteristic polynomial, group={group}, rank={rank}")
    doc.fields = {'group': group, 'params': {'rank': rank}}
    for method, poly in results.items():
        doc.rows.append({'method': method, 'polynomial': poly.to_text()})
        doc.add_check(f"{method} weight-homogeneous", poly.is_weight_homogeneous())
    if group == 'sp':
        first = next(iter(results.values()))
        doc.add_check('even in λ', first.is_even_in_lambda())
    if verdict is not None:
        doc.summary.append(f"verdict: {'EQUAL' if verdict else 'DIFFERENT'}")
        doc.add_check('bezout==direct', verdict)
    doc.sections['terms'] = {method: poly.to_json() for method, poly in results.items()}
    return doc


def verify_document(report: VerifyReport) -> Document:
    doc = Document(title=f"verify suites: {', '.join(report.suites)}")
    doc.fields = {
        'suites': list(report.suites),
        'overall_pass': report.overall_pass,
    }
    for check in report.checks:
        doc.add_check(check.name, check.passed, f"{check.params}; {check.details}")
    doc.summary.append(f"overall_pass: {str(report.overall_pass).lower()}, "
                       f"checks={len(report.checks)}, failed={len(report.failures)}")
    return doc


def arf_document(path: str, classification: FormClassification, zeros: int,
                 brute_force: Optional[int]) -> Document:
    c = classification
    arf_text = 'undefined' if c.arf is None else str(c.arf)
    doc = Document(title=f"quadratic form {path}")
    doc.fields = {
        'dim': c.dim,
        'radical_dim': c.radical_dim,
        'q_on_radical_zero': c.q_on_radical_zero,
        'hyperbolic_rank': c.hyperbolic_rank,
        'arf': c.arf,
        'zeros': str(zeros),
    }
    doc.summary.append(f"dim={c.dim}, radical_dim={c.radical_dim}, hyperbolic_rank={c.hyperbolic_rank}")
    doc.summary.append(f"arf={arf_text}, zeros={zeros}")
    if not c.q_on_radical_zero:
        doc.notes.append('q is nonzero on the radical: the Arf invariant is undefined')
    if brute_force is not None:
        doc.fields['brute_force_zeros'] = str(brute_force)
        doc.add_check('brute force confirms zero count', brute_force == zeros)
    return doc
