#!/usr/bin/env python3
"""
設定管理モジュール
spectral-censusの計算ガードと検証スイートの既定値を管理する
"""

import os
import logging
from pathlib import Path
from typing import Dict, Optional

from dotenv import dotenv_values

from lib.utils import get_toolkit_root

logger = logging.getLogger(__name__)


class SettingsManager:
    """設定の読み込み、保存、管理を行うクラス"""

    # キー -> 既定値
    DEFAULTS: Dict[str, int] = {
        'CENSUS_MAX_SYMBOLIC_RANK': 8,
        'CENSUS_BRUTE_FORCE_MAX_DIM': 24,
        'CENSUS_EXPLICIT_FORM_MAX_DIM': 20,
        'CENSUS_ARF_CONFIRM_MAX_DIM': 16,
        'CENSUS_VERIFY_MAX_G': 8,
        'CENSUS_VERIFY_MAX_RANK': 8,
        'CENSUS_VERIFY_SEED': 20240,
        'CENSUS_VERIFY_SAMPLES': 200,
    }
    DEFAULT_LOG_LEVEL = 'INFO'

    def __init__(self, config_dir: Optional[Path] = None):
        # プロジェクトルートディレクトリを基準に設定
        self.toolkit_root = get_toolkit_root()
        self.config_dir = Path(config_dir) if config_dir else self.toolkit_root
        self.env_file = self.config_dir / '.env'

    def load_env(self) -> Dict[str, str]:
        """環境変数を読み込み（.envの値をプロセス環境で上書き）"""
        env_vars: Dict[str, str] = {}
        if self.env_file.exists():
            for key, value in dotenv_values(self.env_file).items():
                if value is not None:
                    env_vars[key] = value
        for key in list(self.DEFAULTS) + ['CENSUS_LOG_LEVEL']:
            if key in os.environ:
                env_vars[key] = os.environ[key]
        return env_vars

    def save_env(self, env_vars: Dict[str, str]):
        """環境変数を保存"""
        self.config_dir.mkdir(parents=True, exist_ok=True)
        with open(self.env_file, 'w') as f:
            f.write("# spectral-census configuration\n\n")
            for key, value in env_vars.items():
                f.write(f"{key}={value}\n")

        # Set permissions to 600 (owner read/write only)
        os.chmod(self.env_file, 0o600)

    def get_int(self, key: str) -> int:
        """整数設定を取得（不正値は既定値にフォールバック）"""
        if key not in self.DEFAULTS:
            raise KeyError(f"未知の設定キー: {key}")
        default = self.DEFAULTS[key]
        raw = self.load_env().get(key)
        if raw is None or raw.strip() == '':
            return default
        try:
            return int(raw.strip())
        except ValueError:
            logger.warning(f"Invalid integer for {key}: {raw!r}, using default {default}")
            return default

    def get_log_level(self) -> str:
        """ログレベルを取得"""
        level = self.load_env().get('CENSUS_LOG_LEVEL', self.DEFAULT_LOG_LEVEL).strip().upper()
        if level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            logger.warning(f"Invalid CENSUS_LOG_LEVEL {level!r}, using {self.DEFAULT_LOG_LEVEL}")
            return self.DEFAULT_LOG_LEVEL
        return level

    def get_max_symbolic_rank(self) -> int:
        return self.get_int('CENSUS_MAX_SYMBOLIC_RANK')

    def get_brute_force_max_dim(self) -> int:
        return self.get_int('CENSUS_BRUTE_FORCE_MAX_DIM')

    def get_explicit_form_max_dim(self) -> int:
        return self.get_int('CENSUS_EXPLICIT_FORM_MAX_DIM')

    def get_arf_confirm_max_dim(self) -> int:
        return self.get_int('CENSUS_ARF_CONFIRM_MAX_DIM')

    def get_verify_defaults(self) -> Dict[str, int]:
        """verifyサブコマンドの既定バウンド"""
        return {
            'max_g': self.get_int('CENSUS_VERIFY_MAX_G'),
            'max_rank': self.get_int('CENSUS_VERIFY_MAX_RANK'),
            'seed': self.get_int('CENSUS_VERIFY_SEED'),
            'samples': self.get_int('CENSUS_VERIFY_SAMPLES'),
        }


if __name__ == "__main__":
    # Test settings manager
    manager = SettingsManager()
    print(f"Config directory: {manager.config_dir}")
    print(f"Verify defaults: {manager.get_verify_defaults()}")
