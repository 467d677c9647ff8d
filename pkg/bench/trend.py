"""配列数、配列長、感度の下限を変えたときのLSの傾向を調べるベンチマーク。
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List
import json
import math

from bench.worker import BenchSample, bench_floor_worker, bench_worker
from common.exception import InvalidInputError
from common.print_console import print_progress
from fasta.generator import GeneratorSpec, generate
from heuristic.algorithm import Base
from oracle.verdict import CheckVerdict
from pals_param import BENCH_MAX_LENGTH, BENCH_MAX_SEQUENCES, MIN_SENSITIVITY, NUM_BENCH_WORKERS

AXIS_N = "n"
AXIS_K = "k"
AXIS_MIN_SENSITIVITY = "min_sensitivity"
AXES = (AXIS_N, AXIS_K, AXIS_MIN_SENSITIVITY)

VERDICT_SENSITIVITY = "full-sensitivity"
VERDICT_LS_BY_N = "ls-nondecreasing-in-n"
VERDICT_SIZE_BY_N = "language-size-nondecreasing-in-n"
VERDICT_LS_BY_FLOOR = "ls-nonincreasing-as-floor-drops"
VERDICT_STAR_BOUND = "star-ls-not-above-pals-ls"

# 浮動小数点の比較の許容誤差
TOLERANCE = 1e-9

TSV_HEADER = ["base", "axis", "setting", "n", "k", "pals_ls", "pals_sensitivity", \
    "pals_log10_size", "star_ls", "star_sensitivity", "time"]


def _mean(values: List[float]) -> float:
    return math.fsum(values) / len(values)


def _encode(value: float) -> Any:
    return "inf" if value == float("inf") else value


@dataclass(frozen=True)
class TrendPoint: # pylint: disable=R0902
    """1つの設定値での複製データセット全体の平均値。
    """
    setting: float
    n: int
    k: int
    min_sensitivity: float
    pals_ls: float
    pals_sensitivity: float
    pals_log10_size: float
    star_ls: float
    star_sensitivity: float
    mean_time: float
    samples: List[BenchSample] = field(default_factory=list)

    def to_dict(self, timings: bool=False) -> Dict[str, Any]:
        """辞書形式に変換する。

        Args:
            timings (bool, optional): 実行時間を含める場合はTrue。

        Returns:
            Dict[str, Any]: 計測点の辞書。
        """
        data = {
            "setting": self.setting,
            "n": self.n,
            "k": self.k,
            "min_sensitivity": self.min_sensitivity,
            "pals_ls": _encode(self.pals_ls),
            "pals_sensitivity": self.pals_sensitivity,
            "pals_log10_size": _encode(self.pals_log10_size),
            "star_ls": _encode(self.star_ls),
            "star_sensitivity": self.star_sensitivity,
            "replicates": len(self.samples),
        }
        if timings:
            data["mean_time"] = self.mean_time
        return data


@dataclass
class TrendResult:
    """傾向を調べた結果と判定。
    """
    base: Base
    axis: str
    points: List[TrendPoint]
    verdicts: Dict[str, CheckVerdict] = field(default_factory=dict)

    def to_dict(self, timings: bool=False) -> Dict[str, Any]:
        """辞書形式に変換する。

        Args:
            timings (bool, optional): 実行時間を含める場合はTrue。

        Returns:
            Dict[str, Any]: 結果の辞書。
        """
        return {
            "base": self.base.value,
            "axis": self.axis,
            "points": [point.to_dict(timings) for point in self.points],
            "verdicts": {name: CheckVerdict.get_string(verdict) \
                for name, verdict in self.verdicts.items()},
        }

    def to_json(self, timings: bool=False) -> str:
        """JSON形式の文字列に変換する。

        Args:
            timings (bool, optional): 実行時間を含める場合はTrue。

        Returns:
            str: JSON形式の文字列。
        """
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2) + "\n"

    def to_tsv(self, timings: bool=False) -> str:
        """TSV形式の文字列に変換する。計測点の表の後に判定を出力する。

        Args:
            timings (bool, optional): 実行時間を含める場合はTrue。

        Returns:
            str: TSV形式の文字列。
        """
        lines = ["\t".join(TSV_HEADER)]
        for point in self.points:
            lines.append("\t".join([self.base.value, self.axis, f"{point.setting:g}", \
                str(point.n), str(point.k), f"{point.pals_ls:.2f}", \
                f"{100.0 * point.pals_sensitivity:g}", f"{point.pals_log10_size:.2f}", \
                f"{point.star_ls:.2f}", \
                f"{100.0 * point.star_sensitivity:g}", \
                f"{point.mean_time:.3f}" if timings else "-"]))
        for name, verdict in self.verdicts.items():
            lines.append(f"{name}\t{CheckVerdict.get_string(verdict)}")
        return "\n".join(lines) + "\n"

    def render(self, output_format: str, timings: bool=False) -> str:
        """指定した形式の文字列に変換する。

        Args:
            output_format (str): json、またはtsv。
            timings (bool, optional): 実行時間を含める場合はTrue。

        Returns:
            str: 変換した文字列。
        """
        if output_format == "tsv":
            return self.to_tsv(timings)
        return self.to_json(timings)


def _check_settings(axis: str, settings: List[float], spec: GeneratorSpec) -> None:
    if axis not in AXES:
        raise InvalidInputError(f"unknown axis : {axis}")
    if not settings:
        raise InvalidInputError("settings must not be empty")
    if axis == AXIS_MIN_SENSITIVITY:
        if any(not 0.0 < value <= 1.0 for value in settings):
            raise InvalidInputError(f"min_sensitivity settings must be in (0, 1] : {settings}")
    elif any(value < 1 or value != int(value) for value in settings):
        raise InvalidInputError(f"{axis} settings must be positive integers : {settings}")

    max_n = max(settings) if axis == AXIS_N else spec.n
    max_k = max(settings) if axis == AXIS_K else spec.k
    if max_n > BENCH_MAX_SEQUENCES:
        raise InvalidInputError(f"n {max_n:g} exceeds the benchmark cap {BENCH_MAX_SEQUENCES}")
    if max_k > BENCH_MAX_LENGTH:
        raise InvalidInputError(f"k {max_k:g} exceeds the benchmark cap {BENCH_MAX_LENGTH}")


def _setting_spec(axis: str, setting: float, spec: GeneratorSpec) -> GeneratorSpec:
    if axis == AXIS_N:
        return replace(spec, n=int(setting))
    if axis == AXIS_K:
        return replace(spec, k=int(setting))
    return spec


def _non_decreasing(values: List[float]) -> bool:
    return all(later >= earlier - TOLERANCE for earlier, later in zip(values, values[1:]))


def judge_trend(axis: str, points: List[TrendPoint]) -> Dict[str, CheckVerdict]:
    """計測点から傾向の判定を行う。対象外の判定はSKIPとする。

    Args:
        axis (str): 変化させたパラメータ。
        points (List[TrendPoint]): 設定値の昇順に並んだ計測点。

    Returns:
        Dict[str, CheckVerdict]: 判定名をキーに持つ判定結果。
    """
    full = [point for point in points if point.min_sensitivity >= 1.0]
    sensitivity_ok = all(point.pals_sensitivity == 1.0 and point.star_sensitivity == 1.0 \
        for point in full)
    verdicts = {
        VERDICT_SENSITIVITY: CheckVerdict.SKIP if not full else \
            CheckVerdict.from_violations(len(full), 0 if sensitivity_ok else 1),
    }

    if axis == AXIS_N:
        verdicts[VERDICT_LS_BY_N] = CheckVerdict.PASS \
            if _non_decreasing([point.pals_ls for point in points]) else CheckVerdict.FAIL
        verdicts[VERDICT_SIZE_BY_N] = CheckVerdict.PASS \
            if _non_decreasing([point.pals_log10_size for point in points]) else CheckVerdict.FAIL
    else:
        verdicts[VERDICT_LS_BY_N] = CheckVerdict.SKIP
        verdicts[VERDICT_SIZE_BY_N] = CheckVerdict.SKIP

    # 昇順に並んだ下限に対してLSが非減少であれば、下限を下げたときにLSは増えない
    if axis == AXIS_MIN_SENSITIVITY:
        verdicts[VERDICT_LS_BY_FLOOR] = CheckVerdict.PASS \
            if _non_decreasing([point.star_ls for point in points]) else CheckVerdict.FAIL
    else:
        verdicts[VERDICT_LS_BY_FLOOR] = CheckVerdict.SKIP

    samples = [sample for point in full for sample in point.samples]
    violations = sum(1 for sample in samples if sample.star_ls > sample.pals_ls + TOLERANCE)
    verdicts[VERDICT_STAR_BOUND] = CheckVerdict.from_violations(len(samples), violations)
    return verdicts


# pylint: disable=R0913,R0914
def run_trend(base: Base, axis: str, settings: List[float], spec: GeneratorSpec, \
    min_sensitivity: float=MIN_SENSITIVITY, process: int=NUM_BENCH_WORKERS) -> TrendResult:
    """設定値ごとに複製データセットを生成し、PALSとPALS*の平均LSと平均感度を求める。

    感度の下限を変える場合は、複製データセットごとに全ての下限をまとめて処理し、
    高い下限の結果を低い下限の候補に加える。

    Args:
        base (Base): 元にするヒューリスティック解の種類。
        axis (str): 変化させるパラメータ(n、k、min_sensitivity)。
        settings (List[float]): パラメータの設定値のリスト。
        spec (GeneratorSpec): データセット生成の設定。axisで指定したパラメータは上書きされる。
        min_sensitivity (float, optional): axisがmin_sensitivityでない場合のPALS*の感度の下限。
        process (int, optional): 実行ワーカ数。1の場合は同じプロセスで実行する。

    Returns:
        TrendResult: 設定値の昇順に並んだ計測点と判定。
    """
    _check_settings(axis, settings, spec)
    ordered = sorted(set(settings))

    if axis == AXIS_MIN_SENSITIVITY:
        worker = bench_floor_worker
        jobs = [(base.value, d, ordered, replicate, spec.seed) \
            for replicate, d in enumerate(generate(spec), start=1)]
    else:
        worker = bench_worker
        jobs = []
        for setting in ordered:
            for replicate, d in enumerate(generate(_setting_spec(axis, setting, spec)), start=1):
                jobs.append((base.value, d, setting, replicate, min_sensitivity, spec.seed))

    if process == 1:
        results = [worker(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=process) as executor:
            futures = [executor.submit(worker, *job) for job in jobs]
            results = [future.result() for future in futures]
    samples: List[BenchSample] = []
    for result in results:
        samples.extend(result if isinstance(result, list) else [result])

    points = []
    for setting in ordered:
        group = [sample for sample in samples if sample.setting == setting]
        setting_spec = _setting_spec(axis, setting, spec)
        floor = setting if axis == AXIS_MIN_SENSITIVITY else min_sensitivity
        point = TrendPoint(setting=setting, n=setting_spec.n, k=setting_spec.k, \
            min_sensitivity=floor, \
            pals_ls=_mean([sample.pals_ls for sample in group]), \
            pals_sensitivity=_mean([sample.pals_sensitivity for sample in group]), \
            pals_log10_size=_mean([sample.pals_log10_size for sample in group]), \
            star_ls=_mean([sample.star_ls for sample in group]), \
            star_sensitivity=_mean([sample.star_sensitivity for sample in group]), \
            mean_time=_mean([sample.elapsed for sample in group]), samples=group)
        print_progress(f"{axis}={setting:g} : PALS LS {point.pals_ls:.3f}, " \
            f"PALS* LS {point.star_ls:.3f}, {point.mean_time:.3f} seconds")
        points.append(point)

    return TrendResult(base, axis, points, judge_trend(axis, points))
