"""コンソール出力のラッパー
"""
from typing import Any, Dict, List
import sys

_verbose = False


def set_verbose(verbose: bool) -> None:
    """進捗表示の有効化フラグを設定する。

    Args:
        verbose (bool): 進捗表示を出力する場合はTrue。
    """
    global _verbose # pylint: disable=W0603
    _verbose = verbose


def print_out(message: Any) -> None:
    """メッセージを標準出力に出力する。

    Args:
        message (str): 表示するメッセージ。
    """
    print(message)


def print_err(message: Any) -> None:
    """メッセージを標準エラー出力に出力する。

    Args:
        message (str): 表示するメッセージ。
    """
    print(message, file=sys.stderr)


def print_progress(message: Any) -> None:
    """進捗情報を標準エラー出力に出力する。--verbose指定時のみ表示する。

    Args:
        message (str): 表示するメッセージ。
    """
    if _verbose:
        print(message, file=sys.stderr)


def print_phase_times(label: str, phase_times: Dict[str, float]) -> None:
    """フェーズごとの処理時間を表示する。

    Args:
        label (str): 処理の名前。
        phase_times (Dict[str, float]): フェーズ名をキー、秒数をバリューに持つ辞書。
    """
    total = sum(phase_times.values())
    print_progress(f"{label} : {total:.3f} seconds")
    for phase, seconds in phase_times.items():
        print_progress(f"\t{phase:<12} : {seconds:.3f} seconds")


def format_table(header: List[str], rows: List[List[Any]]) -> str:
    """列幅を揃えた表の文字列を生成する。

    Args:
        header (List[str]): 見出し行。
        rows (List[List[Any]]): 表の各行。

    Returns:
        str: 整形済みの表。
    """
    cells = [header] + [[str(value) for value in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(value.ljust(width) for value, width in zip(row, widths)).rstrip() \
        for row in cells]
    return "\n".join(lines)
