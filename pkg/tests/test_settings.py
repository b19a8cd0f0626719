#!/usr/bin/env python3
"""
settings.py の単体テスト
"""

import os
import stat
import unittest
import tempfile
import shutil
from pathlib import Path
from unittest import mock
import sys

# テスト対象のモジュールをインポート
sys.path.insert(0, str(Path(__file__).parent.parent))
from config.settings import SettingsManager


class TestSettingsManager(unittest.TestCase):
    """SettingsManagerのテストクラス"""

    def setUp(self):
        """各テストの前に実行される"""
        # 一時ディレクトリを作成
        self.temp_dir = tempfile.mkdtemp()

        # プロセス環境の CENSUS_* を退避して空にする
        self.env_patch = mock.patch.dict(os.environ, {}, clear=False)
        self.env_patch.start()
        for key in list(os.environ):
            if key.startswith('CENSUS_'):
                del os.environ[key]

        # テスト用のSettingsManagerインスタンスを作成
        self.settings = SettingsManager(config_dir=Path(self.temp_dir))

    def tearDown(self):
        """各テストの後に実行される"""
        self.env_patch.stop()

        # 一時ディレクトリを削除
        shutil.rmtree(self.temp_dir)

    def test_defaults_without_env_file(self):
        """.env がなければ既定値"""
        self.assertEqual(self.settings.get_max_symbolic_rank(), 8)
        self.assertEqual(self.settings.get_brute_force_max_dim(), 24)
        self.assertEqual(self.settings.get_explicit_form_max_dim(), 20)
        self.assertEqual(self.settings.get_arf_confirm_max_dim(), 16)
        self.assertEqual(self.settings.get_log_level(), 'INFO')

    def test_verify_defaults(self):
        """verify の既定バウンド"""
        self.assertEqual(self.settings.get_verify_defaults(), {
            'max_g': 8,
            'max_rank': 8,
            'seed': 20240,
            'samples': 200,
        })

    def test_save_and_load_env(self):
        """保存した値を読み戻せる"""
        self.settings.save_env({'CENSUS_MAX_SYMBOLIC_RANK': '6', 'CENSUS_LOG_LEVEL': 'debug'})

        self.assertEqual(self.settings.get_max_symbolic_rank(), 6)
        self.assertEqual(self.settings.get_log_level(), 'DEBUG')

    def test_env_file_permissions(self):
        """.env のパーミッションは 600"""
        self.settings.save_env({'CENSUS_VERIFY_SEED': '1'})

        mode = stat.S_IMODE(self.settings.env_file.stat().st_mode)
        self.assertEqual(mode, 0o600)

    def test_process_env_overrides_file(self):
        """プロセス環境が .env より優先される"""
        self.settings.save_env({'CENSUS_VERIFY_MAX_G': '5'})
        os.environ['CENSUS_VERIFY_MAX_G'] = '4'

        self.assertEqual(self.settings.get_verify_defaults()['max_g'], 4)

    def test_invalid_integer_falls_back(self):
        """整数でない値は既定値に戻る"""
        self.settings.save_env({'CENSUS_VERIFY_SAMPLES': 'many', 'CENSUS_ARF_CONFIRM_MAX_DIM': ''})

        self.assertEqual(self.settings.get_int('CENSUS_VERIFY_SAMPLES'), 200)
        self.assertEqual(self.settings.get_arf_confirm_max_dim(), 16)

    def test_invalid_log_level_falls_back(self):
        """未知のログレベルは INFO"""
        os.environ['CENSUS_LOG_LEVEL'] = 'chatty'

        self.assertEqual(self.settings.get_log_level(), 'INFO')

    def test_unknown_key(self):
        """未知のキーは KeyError"""
        with self.assertRaises(KeyError):
            self.settings.get_int('CENSUS_UNKNOWN')

    def test_unrelated_keys_ignored(self):
        """.env の他のキーは読み込まれても整数設定に影響しない"""
        self.settings.save_env({'OTHER_KEY': 'x', 'CENSUS_MAX_SYMBOLIC_RANK': '7'})

        env = self.settings.load_env()
        self.assertEqual(env['OTHER_KEY'], 'x')
        self.assertEqual(self.settings.get_max_symbolic_rank(), 7)


if __name__ == '__main__':
    unittest.main()
