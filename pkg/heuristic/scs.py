"""Alphabet, Sum Height, Min Height, Deposition and Reductionによる複数配列のSCSヒューリスティック。
"""
from typing import List, Optional, Tuple
import time

import numpy as np

from common.exception import InvalidInputError
from heuristic.algorithm import Algorithm
from heuristic.constant import POOL_SIZE
from heuristic.occurrence import OccurrenceTable
from heuristic.result import HeuristicResult
from sequence.dataset import Dataset, SequenceLike, symbols_of


def _fronts(table: OccurrenceTable, cursors: np.ndarray) -> np.ndarray:
    """各配列のカーソル位置の記号を取得する。読み終えた配列は-1。
    """
    if table.max_length == 0:
        return np.full(table.num_strings, -1, dtype=np.int32)
    active = cursors < table.lengths
    return np.where(active, table.codes[table.rows, np.minimum(cursors, table.max_length - 1)], -1)


def sum_height(table: OccurrenceTable, rng: Optional[np.random.Generator]=None) -> str:
    """先頭の記号が最も多く一致する記号を出力して、一致した配列のカーソルを進める。

    Args:
        table (OccurrenceTable): 出現位置の表。
        rng (Optional[np.random.Generator], optional): 同点時に記号を選ぶ乱数生成器。
            Noneの場合はアルファベット順で選ぶ。

    Returns:
        str: 共通超配列。
    """
    cursors = np.zeros(table.num_strings, dtype=np.int32)
    result = []
    while (cursors < table.lengths).any():
        fronts = _fronts(table, cursors)
        counts = np.bincount(fronts[fronts >= 0], minlength=table.num_symbols)
        best = np.flatnonzero(counts == counts.max())
        code = best[0] if rng is None else rng.choice(best)
        result.append(table.symbols[code])
        cursors = cursors + (fronts == code)
    return "".join(result)


def min_height(table: OccurrenceTable) -> str:
    """残りが最も長い配列の先頭の記号を出力して、一致した配列のカーソルを進める。

    残りが最も長い配列が複数ある場合は、先頭の記号が最も多く一致する記号、
    さらに同点ならアルファベット順で選ぶ。

    Args:
        table (OccurrenceTable): 出現位置の表。

    Returns:
        str: 共通超配列。
    """
    cursors = np.zeros(table.num_strings, dtype=np.int32)
    result = []
    while (cursors < table.lengths).any():
        fronts = _fronts(table, cursors)
        remaining = table.lengths - cursors
        leaders = np.unique(fronts[remaining == remaining.max()])
        counts = np.bincount(fronts[fronts >= 0], minlength=table.num_symbols)
        code = leaders[int(np.argmax(counts[leaders]))]
        result.append(table.symbols[code])
        cursors = cursors + (fronts == code)
    return "".join(result)


def reduce(table: OccurrenceTable, template: str) -> str:
    """共通超配列の性質を保つ限り1文字ずつ削除する。削除できなくなるまで左から走査する。

    位置jの文字は、t[:j]に貪欲に埋め込める接頭辞の長さと、t[j+1:]に貪欲に埋め込める
    接尾辞の長さの和が全配列で配列長以上なら削除できる。

    Args:
        table (OccurrenceTable): 出現位置の表。
        template (str): 共通超配列。

    Returns:
        str: 1文字も削除できない共通超配列。
    """
    if table.max_length == 0:
        return ""
    last = table.max_length - 1
    value = template
    while True:
        codes = table.encode(value)
        suffix = np.zeros((len(value) + 1, table.num_strings), dtype=np.int32)
        for j in range(len(value) - 1, -1, -1):
            position = table.lengths - 1 - suffix[j + 1]
            matched = (position >= 0) & \
                (table.codes[table.rows, np.clip(position, 0, last)] == codes[j])
            suffix[j] = suffix[j + 1] + matched
        if (suffix[0] < table.lengths).any():
            raise InvalidInputError(f"{value} is not a common supersequence")

        prefix = np.zeros(table.num_strings, dtype=np.int32)
        kept = []
        for j in range(len(value)):
            if (prefix + suffix[j + 1] >= table.lengths).all():
                continue
            kept.append(j)
            matched = (prefix < table.lengths) & \
                (table.codes[table.rows, np.minimum(prefix, last)] == codes[j])
            prefix = prefix + matched

        if len(kept) == len(value):
            return value
        value = "".join(value[j] for j in kept)


def build_template_pool(table: OccurrenceTable, pool_size: int, seed: int) \
    -> List[Tuple[str, str]]:
    """共通超配列のテンプレートプールを生成する。

    Args:
        table (OccurrenceTable): 出現位置の表。
        pool_size (int): テンプレート数。
        seed (int): 乱数シード。

    Returns:
        List[Tuple[str, str]]: (生成方法, テンプレート)のリスト。重複は除く。
    """
    if pool_size < 1:
        raise InvalidInputError(f"pool_size must be positive : {pool_size}")
    pool = [
        (Algorithm.ALPHABET.value, table.symbols * table.max_length),
        (Algorithm.SUM_HEIGHT.value, sum_height(table)),
        (Algorithm.MIN_HEIGHT.value, min_height(table)),
    ][:pool_size]
    for index in range(pool_size - len(pool)):
        rng = np.random.default_rng((seed, index))
        pool.append((f"{Algorithm.SUM_HEIGHT.value}-{index + 1}", sum_height(table, rng)))

    unique_pool = []
    seen = set()
    for name, template in pool:
        if template not in seen:
            seen.add(template)
            unique_pool.append((name, template))
    return unique_pool


def scs_of_strings(strings: List[str], symbols: str, pool_size: int=POOL_SIZE, \
    seed: int=0) -> Tuple[str, str]:
    """文字列集合に対してDeposition and Reductionを実行する。

    Args:
        strings (List[str]): 文字列のリスト。
        symbols (str): 使用する記号の並び。
        pool_size (int, optional): テンプレート数。
        seed (int, optional): 乱数シード。

    Returns:
        Tuple[str, str]: 最短の共通超配列と、その元になったテンプレートの生成方法。
    """
    table = OccurrenceTable(strings, symbols)
    reduced = [(reduce(table, template), name) \
        for name, template in build_template_pool(table, pool_size, seed)]
    value, name = min(reduced, key=lambda item: (len(item[0]), item[0]))
    return value, name


def alphabet_supersequence(d: Dataset) -> str:
    """アルファベットを最大配列長だけ繰り返した周期的超配列を生成する。

    Args:
        d (Dataset): データセット。

    Returns:
        str: 共通超配列。
    """
    return d.alphabet.symbols * d.max_length


def sum_height_merge(d: Dataset) -> str:
    """Sum Heightで共通超配列を求める。

    Args:
        d (Dataset): データセット。

    Returns:
        str: 共通超配列。
    """
    return sum_height(OccurrenceTable(d.strings, d.alphabet.symbols))


def min_height_merge(d: Dataset) -> str:
    """Min Heightで共通超配列を求める。

    Args:
        d (Dataset): データセット。

    Returns:
        str: 共通超配列。
    """
    return min_height(OccurrenceTable(d.strings, d.alphabet.symbols))


def reduce_template(d: Dataset, t: SequenceLike) -> str:
    """テンプレートを1-minimalになるまで短縮する。

    Args:
        d (Dataset): データセット。
        t (SequenceLike): 共通超配列。

    Returns:
        str: 短縮した共通超配列。
    """
    return reduce(OccurrenceTable(d.strings, d.alphabet.symbols), symbols_of(t))


def heuristic_scs(d: Dataset, pool_size: int=POOL_SIZE, seed: int=0) -> HeuristicResult:
    """Deposition and ReductionでSCS_DepRedn(S)を求める。

    Args:
        d (Dataset): データセット。
        pool_size (int, optional): テンプレート数。デフォルトはPOOL_SIZE。
        seed (int, optional): 乱数シード。

    Returns:
        HeuristicResult: 共通超配列。
    """
    start_time = time.perf_counter()
    value, template = scs_of_strings(d.strings, d.alphabet.symbols, pool_size, seed)
    params = {"pool_size": pool_size, "seed": seed, "template": template}
    return HeuristicResult(value, Algorithm.DEPOSITION_REDUCTION, params, \
        time.perf_counter() - start_time)


def heuristic_scs_candidates(d: Dataset, count: int, pool_size: int=POOL_SIZE, \
    seed: int=0) -> List[HeuristicResult]:
    """シードを変えてheuristic_scsを実行し、異なる解を列挙する。

    Args:
        d (Dataset): データセット。
        count (int): 試行するシードの数。
        pool_size (int, optional): テンプレート数。
        seed (int, optional): 最初の乱数シード。

    Returns:
        List[HeuristicResult]: シード順に並べた異なる解のリスト。
    """
    results = []
    seen = set()
    for candidate_seed in range(seed, seed + count):
        result = heuristic_scs(d, pool_size, candidate_seed)
        if result.value not in seen:
            seen.add(result.value)
            results.append(result)
    return results


def run_scs_algorithm(d: Dataset, algorithm: Algorithm, pool_size: int=POOL_SIZE, \
    seed: int=0) -> HeuristicResult:
    """指定したアルゴリズムでSCSを求める。

    Args:
        d (Dataset): データセット。
        algorithm (Algorithm): アルゴリズム。
        pool_size (int, optional): Deposition and Reductionのテンプレート数。
        seed (int, optional): 乱数シード。

    Returns:
        HeuristicResult: 共通超配列。
    """
    if algorithm == Algorithm.DEPOSITION_REDUCTION:
        return heuristic_scs(d, pool_size, seed)

    start_time = time.perf_counter()
    if algorithm == Algorithm.ALPHABET:
        value = alphabet_supersequence(d)
    elif algorithm == Algorithm.SUM_HEIGHT:
        value = sum_height_merge(d)
    elif algorithm == Algorithm.MIN_HEIGHT:
        value = min_height_merge(d)
    else:
        raise InvalidInputError(f"{algorithm.value} is not an SCS algorithm")
    return HeuristicResult(value, algorithm, {}, time.perf_counter() - start_time)
