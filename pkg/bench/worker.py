"""ベンチマーク実行ワーカの実装。
"""
from dataclasses import dataclass
from typing import List
import math
import time

from heuristic.algorithm import Base
from heuristic.result import DepositionParams
from metrics.score import PatternReport
from pals.pipeline import run_pals
from pals.star import StarParams, pals_star, pals_star_floors
from sequence.dataset import Dataset


@dataclass(frozen=True)
class BenchSample: # pylint: disable=R0902
    """1つのデータセットに対するPALSとPALS*の評価値。
    """
    setting: float
    replicate: int
    pals_ls: float
    pals_sensitivity: float
    pals_log10_size: float
    star_ls: float
    star_sensitivity: float
    elapsed: float


def log10_language_size(report: PatternReport) -> float:
    """LSにカバーした配列数の対数を足し戻し、パターンの言語サイズの推定値の対数を求める。

    Args:
        report (PatternReport): パターン探索のレポート。

    Returns:
        float: 言語サイズの対数。どの配列もカバーしない場合はinf。
    """
    if report.support == 0:
        return float("inf")
    return report.ls + math.log10(report.support)


# pylint: disable=R0913
def bench_worker(base_value: str, d: Dataset, setting: float, replicate: int, \
    min_sensitivity: float, seed: int) -> BenchSample:
    """ベンチマーク実行ワーカ。PALSとPALS*を順に実行する。

    Args:
        base_value (str): 元にするヒューリスティック解の種類(lcs、scs)。
        d (Dataset): データセット。
        setting (float): 計測点の設定値。
        replicate (int): データセットの番号。
        min_sensitivity (float): PALS*の感度の下限。
        seed (int): ヒューリスティックの乱数シード。

    Returns:
        BenchSample: 評価値。
    """
    base = Base(base_value)
    params = DepositionParams(seed=seed)
    start_time = time.perf_counter()
    report = run_pals(d, base, params)
    star_report = pals_star(d, base, StarParams(min_sensitivity=min_sensitivity), params)
    return BenchSample(setting, replicate, report.ls, report.sensitivity, \
        log10_language_size(report), star_report.ls, star_report.sensitivity, \
        time.perf_counter() - start_time)


def bench_floor_worker(base_value: str, d: Dataset, floors: List[float], replicate: int, \
    seed: int) -> List[BenchSample]:
    """感度の下限を変える場合のベンチマーク実行ワーカ。1つのデータセットで全ての下限を処理する。

    Args:
        base_value (str): 元にするヒューリスティック解の種類(lcs、scs)。
        d (Dataset): データセット。
        floors (List[float]): 感度の下限のリスト。計測点の設定値を兼ねる。
        replicate (int): データセットの番号。
        seed (int): ヒューリスティックの乱数シード。

    Returns:
        List[BenchSample]: 下限の昇順に並んだ評価値。
    """
    base = Base(base_value)
    params = DepositionParams(seed=seed)
    start_time = time.perf_counter()
    report = run_pals(d, base, params)
    star_reports = pals_star_floors(d, base, floors, params, report=report)
    # 下限ごとの時間は等分する
    elapsed = (time.perf_counter() - start_time) / len(star_reports)
    return [BenchSample(floor, replicate, report.ls, report.sensitivity, \
        log10_language_size(report), star_reports[floor].ls, star_reports[floor].sensitivity, \
        elapsed) for floor in sorted(star_reports)]
