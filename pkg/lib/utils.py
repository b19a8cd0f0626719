#!/usr/bin/env python3
"""
共通ユーティリティ
spectral-census全体で使用する共通関数
"""

import os
from pathlib import Path
from typing import Optional

import psutil


def get_toolkit_root() -> Path:
    """ツールキットのルートディレクトリを取得"""
    return Path(__file__).parent.parent


def get_memory_usage_mb(pid: Optional[int] = None) -> float:
    """プロセスの常駐メモリ(RSS)をMB単位で取得"""
    try:
        proc = psutil.Process(pid if pid is not None else os.getpid())
        return proc.memory_info().rss / (1024 * 1024)
    except (psutil.NoSuchProcess, psutil.AccessDenied):
        return 0.0


def bit_length_label(value: int) -> str:
    """巨大整数の概要ラベル（例: '~2^96, 29 digits'）"""
    if value <= 0:
        return str(value)
    return f"~2^{value.bit_length() - 1}, {len(str(value))} digits"


if __name__ == "__main__":
    # Test utilities
    print(f"Toolkit root: {get_toolkit_root()}")
    print(f"Memory: {get_memory_usage_mb():.1f} MB")
