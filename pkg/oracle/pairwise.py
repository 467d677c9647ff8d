"""2配列のLCS、SCSの動的計画法による厳密解。
"""
import numpy as np

from sequence.dataset import SequenceLike, symbols_of


def _suffix_lcs_table(a: str, b: str) -> np.ndarray:
    """a[i:]とb[j:]のLCS長を格納した表を作る。
    """
    table = np.zeros((len(a) + 1, len(b) + 1), dtype=np.int32)
    if len(a) == 0 or len(b) == 0:
        return table
    matches = np.array(list(a))[:, None] == np.array(list(b))[None, :]
    for i in range(len(a) - 1, -1, -1):
        row = table[i]
        below = table[i + 1]
        for j in range(len(b) - 1, -1, -1):
            if matches[i, j]:
                row[j] = below[j + 1] + 1
            else:
                row[j] = max(below[j], row[j + 1])
    return table


def exact_lcs_pair(a: SequenceLike, b: SequenceLike) -> str:
    """2配列の最長共通部分列を求める。

    文字が一致する場合は一致を優先し、一致しない場合はaを進める方を優先する。

    Args:
        a (SequenceLike): 配列a。
        b (SequenceLike): 配列b。

    Returns:
        str: 最長共通部分列の1つ。
    """
    a, b = symbols_of(a), symbols_of(b)
    table = _suffix_lcs_table(a, b)
    result = []
    i, j = 0, 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            result.append(a[i])
            i += 1
            j += 1
        elif table[i + 1, j] >= table[i, j + 1]:
            i += 1
        else:
            j += 1
    return "".join(result)


def exact_scs_pair(a: SequenceLike, b: SequenceLike) -> str:
    """2配列の最短共通超配列を求める。長さは|a|+|b|-|LCS(a, b)|になる。

    Args:
        a (SequenceLike): 配列a。
        b (SequenceLike): 配列b。

    Returns:
        str: 最短共通超配列の1つ。
    """
    a, b = symbols_of(a), symbols_of(b)
    table = _suffix_lcs_table(a, b)
    result = []
    i, j = 0, 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            result.append(a[i])
            i += 1
            j += 1
        elif table[i + 1, j] >= table[i, j + 1]:
            result.append(a[i])
            i += 1
        else:
            result.append(b[j])
            j += 1
    return "".join(result) + a[i:] + b[j:]
