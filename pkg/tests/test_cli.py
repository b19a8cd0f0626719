#!/usr/bin/env python3
"""
cli の統合テスト
"""

import json
import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli import EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    """main を実行して (終了コード, stdout, stderr) を返す"""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCensusCommand:
    """census サブコマンドのテストクラス"""

    def test_sl_json(self, capsys):
        """SL(3,R), g=2 の w2=0 は 32896"""
        code, out, _ = run(capsys, 'census', 'sl', '--n', '3', '--g', '2', '--json')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['group'] == 'sl'
        assert data['rows'][0] == {'class': 'w2=0', 'count': '32896'}
        assert all(check['pass'] for check in data['checks'])
        assert 'explicit form brute force == w2=0' in [check['name'] for check in data['checks']]

    def test_sl_n2_crosscheck_section(self, capsys):
        """n=2 では照合の節が付く"""
        code, out, _ = run(capsys, 'census', 'sl', '--n', '2', '--g', '2', '--json')
        assert code == EXIT_OK
        crosscheck = json.loads(out)['crosscheck']
        assert crosscheck['C(0)'] == '16'
        assert crosscheck['C(2)'] == '48'
        assert crosscheck['adopted_matches'] is True
        assert crosscheck['literal_matches'] is False

    def test_sl_class_filter(self, capsys):
        """--class w2=1 で1行だけ"""
        code, out, _ = run(capsys, 'census', 'sl', '--rank', '2', '--g', '3', '--class', 'w2=1', '--json')
        assert code == EXIT_OK
        assert json.loads(out)['rows'] == [{'class': 'w2=1', 'count': '1792'}]

    def test_sp_csv(self, capsys):
        """Sp(2,R), g=2 の行を CSV で"""
        code, out, _ = run(capsys, 'census', 'sp', '--m', '1', '--g', '2', '--csv')
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == 'class,ell,count'
        assert lines[1:4] == ['c1=1,0,16', 'c1=0,2,96', 'c1=-1,4,16']
        assert 'total equals 2|P[2]|,true' in lines

    def test_sp_text(self, capsys):
        """テキスト出力には検査結果が並ぶ"""
        code, out, _ = run(capsys, 'census', 'sp', '--m', '1', '--g', '2')
        assert code == EXIT_OK
        assert 'Sp(2,R) census, g=2' in out
        assert 'maximal row equals 2^(2q): pass' in out

    @pytest.mark.parametrize("argv", [
        ['census', 'sl', '--n', '1', '--g', '2'],
        ['census', 'sl', '--n', '3', '--g', '1'],
        ['census', 'sl', '--g', '2'],
        ['census', 'sl', '--n', '3', '--g', '2', '--class', 'w2=2'],
        ['census', 'sp', '--m', '1', '--g', '2', '--class', 'c1=5'],
        ['census', 'sp', '--m', '1', '--g', '2', '--class', 'abc'],
    ])
    def test_usage_errors(self, capsys, argv):
        """不正な引数は終了コード2"""
        code, out, err = run(capsys, *argv)
        assert code == EXIT_USAGE
        assert out == ''
        assert 'error:' in err

    def test_json_and_csv_exclusive(self, capsys):
        """--json と --csv は同時に指定できない"""
        code, _, _ = run(capsys, 'census', 'sl', '--n', '3', '--g', '2', '--json', '--csv')
        assert code == EXIT_USAGE


class TestCharpolyCommand:
    """charpoly サブコマンドのテストクラス"""

    def test_sl_direct(self, capsys):
        """n=3 の特性多項式"""
        code, out, _ = run(capsys, 'charpoly', '--group', 'sl', '--rank', '3')
        assert code == EXIT_OK
        assert 'λ^3 - 2*a2*λ - a3' in out

    def test_sl_both_equal(self, capsys):
        """2経路の比較は EQUAL"""
        code, out, _ = run(capsys, 'charpoly', '--group', 'sl', '--rank', '4', '--method', 'both')
        assert code == EXIT_OK
        assert 'verdict: EQUAL' in out
        assert 'bezout==direct: pass' in out

    def test_sp_json_terms(self, capsys):
        """Sp(2): λ² - a2、項の JSON"""
        code, out, _ = run(capsys, 'charpoly', '--group', 'sp', '--rank', '1', '--json')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['rows'] == [{'method': 'direct', 'polynomial': 'λ^2 - a2'}]
        assert data['terms']['direct'][0] == {'coeff': 1, 'exponents': {'lambda': 2}}
        assert all(check['pass'] for check in data['checks'])

    @pytest.mark.parametrize("argv", [
        ['charpoly', '--group', 'sl', '--rank', '12'],
        ['charpoly', '--group', 'sl', '--rank', '1'],
        ['charpoly', '--group', 'sp', '--rank', '5'],
        ['charpoly', '--group', 'sp', '--rank', '2', '--method', 'bezout'],
    ])
    def test_guards(self, capsys, argv):
        """上限を超える大きさや Sp の bezout は終了コード2"""
        code, _, err = run(capsys, *argv)
        assert code == EXIT_USAGE
        assert 'error:' in err


class TestInvariantsCommand:
    """invariants サブコマンドのテストクラス"""

    def _values(self, out):
        return {row['quantity']: row['value'] for row in json.loads(out)['rows']}

    def test_sp(self, capsys):
        """Sp(2,R), g=2 の数値データ"""
        code, out, _ = run(capsys, 'invariants', '--group', 'sp', '--m', '1', '--g', '2', '--json')
        assert code == EXIT_OK
        values = self._values(out)
        assert values['N'] == '4'
        assert values['g_Sbar'] == '2'
        assert values['p'] == '3'
        assert values['hz_dim'] == '2'
        assert values['canonical_c1'] == '1'

    def test_sl(self, capsys):
        """SL(2,R), g=2 の数値データ"""
        code, out, _ = run(capsys, 'invariants', '--group', 'sl', '--n', '2', '--g', '2', '--json')
        assert code == EXIT_OK
        values = self._values(out)
        assert values['g_S'] == '5'
        assert values['canonical_w2'] == '1'
        assert values['direct_image_degree_sl'] == '0'
        assert values['milnor_wood_bound'] == '2'
        assert values['phi_S_1'] == '1'
        assert values['theorem_w2'] == values['canonical_w2']

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    @pytest.mark.parametrize("g", [2, 3, 4, 5])
    def test_theorem_w2_matches_canonical(self, capsys, n, g):
        """偶数 n で φ_S(1) から読んだ w2 が標準切断の w2 と一致"""
        code, out, _ = run(capsys, 'invariants', '--group', 'sl', '--n', str(n), '--g', str(g), '--json')
        assert code == EXIT_OK
        values = self._values(out)
        assert values['theorem_w2'] == values['canonical_w2']
        if g % 2 == 0:
            assert values['theorem_w2'] == str((n // 2) % 2)

    def test_odd_n_has_no_theorem_row(self, capsys):
        """奇数 n では theorem_w2 の行はない"""
        code, out, _ = run(capsys, 'invariants', '--group', 'sl', '--n', '3', '--g', '2', '--json')
        assert code == EXIT_OK
        assert 'theorem_w2' not in self._values(out)


class TestVerifyCommand:
    """verify サブコマンドのテストクラス"""

    def test_geometry_suite(self, capsys):
        """小さいバウンドの geometry スイート"""
        code, out, _ = run(capsys, 'verify', '--suite', 'geometry', '--max-g', '3', '--max-rank', '2', '--json')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['suites'] == ['geometry']
        assert data['overall_pass'] is True

    def test_all_suites_pass(self, capsys):
        """--suite all が終了コード0"""
        code, out, _ = run(capsys, 'verify', '--suite', 'all', '--max-g', '3', '--max-rank', '3',
                           '--samples', '12', '--json')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['suites'] == ['f2', 'ko', 'symbolic', 'geometry', 'census']
        assert data['overall_pass'] is True
        names = [check['name'] for check in data['checks']]
        assert 'arf basis independence' in names
        assert 'polynomial ring axioms' in names
        assert 'canonical higgs persymmetric and trace zero' in names

    @pytest.mark.parametrize("fmt", [[], ['--json'], ['--csv']])
    def test_output_is_deterministic(self, capsys, fmt):
        """同じ呼び出しは同じバイト列を出力"""
        argv = ['verify', '--suite', 'symbolic', '--samples', '8', *fmt]
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first[0] == second[0] == EXIT_OK
        assert first[1] == second[1]
        assert 'elapsed' not in first[1]
        assert 'memory' not in first[1]

    def test_census_is_deterministic(self, capsys):
        """census も繰り返しで同じ出力"""
        argv = ['census', 'sp', '--m', '2', '--g', '3', '--json']
        assert run(capsys, *argv)[1] == run(capsys, *argv)[1]

    def test_invalid_bound(self, capsys):
        """--max-g 1 は入力エラー"""
        code, _, _ = run(capsys, 'verify', '--suite', 'geometry', '--max-g', '1')
        assert code == EXIT_USAGE


class TestArfCommand:
    """arf サブコマンドのテストクラス"""

    def test_xy(self, capsys, tmp_path):
        """xy は Arf 0、零点3"""
        path = tmp_path / 'xy.txt'
        path.write_text("2\n0 0\n0 1\n1 0\n", encoding='utf-8')
        code, out, _ = run(capsys, 'arf', str(path))
        assert code == EXIT_OK
        assert 'arf=0, zeros=3' in out
        assert 'brute force confirms zero count: pass' in out

    def test_x2_xy_y2(self, capsys, tmp_path):
        """x²+xy+y² は Arf 1、零点1"""
        path = tmp_path / 'arf1.txt'
        path.write_text("# x^2 + xy + y^2\n2\n1 1\n0 1\n1 0\n", encoding='utf-8')
        code, out, _ = run(capsys, 'arf', str(path), '--json')
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['arf'] == 1
        assert data['zeros'] == '1'

    def test_undefined_arf(self, capsys, tmp_path):
        """根基上で消えない形式は undefined"""
        path = tmp_path / 'linear.txt'
        path.write_text("1\n1\n0\n", encoding='utf-8')
        code, out, _ = run(capsys, 'arf', str(path))
        assert code == EXIT_OK
        assert 'arf=undefined, zeros=1' in out

    def test_asymmetric_matrix(self, capsys, tmp_path):
        """非対称行列は行番号つきのエラーで終了コード2"""
        path = tmp_path / 'bad.txt'
        path.write_text("2\n0 0\n0 1\n0 0\n", encoding='utf-8')
        code, out, err = run(capsys, 'arf', str(path))
        assert code == EXIT_USAGE
        assert out == ''
        assert 'line 4' in err

    def test_missing_file(self, capsys, tmp_path):
        """存在しないファイル"""
        code, _, err = run(capsys, 'arf', str(tmp_path / 'missing.txt'))
        assert code == EXIT_USAGE
        assert 'error:' in err


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
