"""PALS*の後処理。感度の下限を保ちながらワイルドカードを減らし、パターンを特殊化する。
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
import math

from common.exception import InvalidInputError
from common.print_console import print_phase_times
from common.stopwatch import Stopwatch
from heuristic.algorithm import Base
from heuristic.constant import POOL_SIZE
from heuristic.result import DepositionParams
from metrics.language_model import LanguageModel
from metrics.maximality import specializations
from metrics.score import PatternReport, build_pattern_report
from pals.pipeline import run_pals
from pals_param import MIN_SENSITIVITY, STAR_MAX_ROUNDS
from sequence.constant import WILDCARD
from sequence.dataset import Dataset
from sequence.pattern import Pattern, PatternLike, as_pattern, pattern_matches


@dataclass(frozen=True)
class StarParams:
    """PALS*の後処理のパラメータ。
    """
    min_sensitivity: float = MIN_SENSITIVITY
    max_rounds: int = STAR_MAX_ROUNDS

    def __post_init__(self):
        if not 0.0 < self.min_sensitivity <= 1.0:
            raise InvalidInputError(f"min_sensitivity must be in (0, 1] : {self.min_sensitivity}")
        if self.max_rounds < 0:
            raise InvalidInputError(f"max_rounds must not be negative : {self.max_rounds}")

    def support(self, num_sequences: int) -> int:
        """パターンがマッチすべき配列数m = ceil(min_sensitivity * n)を計算する。

        Args:
            num_sequences (int): 配列数n。

        Returns:
            int: サポートm。
        """
        return max(1, math.ceil(round(self.min_sensitivity * num_sequences, 9)))


def meets_support(d: Dataset, p: Pattern, m: int) -> bool:
    """パターンがm個以上の配列にマッチするか判定する。

    Args:
        d (Dataset): データセット。
        p (Pattern): パターン。
        m (int): サポート。

    Returns:
        bool: m個以上の配列にマッチする場合はTrue。
    """
    allowed_failures = d.size - m
    failures = 0
    for sequence in d.sequences:
        if not pattern_matches(p, sequence):
            failures += 1
            if failures > allowed_failures:
                return False
    return True


def remove_redundant_stars(d: Dataset, p: PatternLike, sp: StarParams=StarParams()) -> Pattern:
    """サポートを保つ限り、左から順にワイルドカードを削除する。

    Args:
        d (Dataset): データセット。
        p (PatternLike): パターン。
        sp (StarParams, optional): 後処理のパラメータ。

    Returns:
        Pattern: ワイルドカードを削除したパターン。
    """
    pattern = as_pattern(p)
    m = sp.support(d.size)
    changed = True
    while changed:
        changed = False
        tokens = pattern.tokens
        for i, token in enumerate(tokens):
            if token != WILDCARD:
                continue
            candidate = Pattern(tokens[:i] + tokens[i + 1:]).normalize()
            if meets_support(d, candidate, m):
                pattern = candidate
                changed = True
                break
    return pattern


def _swap_order(p: Pattern) -> Tuple[int, int]:
    return (p.star_count, p.interior_star_count)


def _swapped(p: Pattern) -> List[Pattern]:
    chars = list(p.render())
    swapped = []
    for i, char in enumerate(chars):
        if char != WILDCARD:
            continue
        if i + 1 < len(chars) and chars[i + 1] != WILDCARD:
            moved = chars[:i] + [chars[i + 1], WILDCARD] + chars[i + 2:]
            swapped.append(Pattern.parse("".join(moved)).normalize())
        if i > 0 and chars[i - 1] != WILDCARD:
            moved = chars[:i - 1] + [WILDCARD, chars[i - 1]] + chars[i + 1:]
            swapped.append(Pattern.parse("".join(moved)).normalize())
    return swapped


def swap_merge_stars(d: Dataset, p: PatternLike, sp: StarParams=StarParams()) -> Pattern:
    """ワイルドカードと隣接する1文字のリテラルを入れ替え、ワイルドカードをまとめる。

    *a*はa**を経てa*になり、ワイルドカードが1つ減る。A*TはAT*になり、内部の
    ワイルドカードがパターンの端に移る。(ワイルドカード数, 内部のワイルドカード数)が
    減少し、サポートを保つ最初の入れ替えを採用する。

    Args:
        d (Dataset): データセット。
        p (PatternLike): パターン。
        sp (StarParams, optional): 後処理のパラメータ。

    Returns:
        Pattern: ワイルドカードをまとめたパターン。
    """
    pattern = as_pattern(p).normalize()
    m = sp.support(d.size)
    changed = True
    while changed:
        changed = False
        current = _swap_order(pattern)
        for candidate in _swapped(pattern):
            if _swap_order(candidate) < current and meets_support(d, candidate, m):
                pattern = candidate
                changed = True
                break
    return pattern


def refine_objective(p: Pattern, model: LanguageModel) -> Tuple[float, int, int, str]:
    """pd_refineで最小化する目的関数。

    Args:
        p (Pattern): パターン。
        model (LanguageModel): 言語サイズの推定モデル。

    Returns:
        Tuple[float, int, int, str]: (言語サイズの対数, 内部のワイルドカード数,
            ワイルドカード数, テキスト表記)。
    """
    return (round(model.for_pattern(p).log10_size, 9), p.interior_star_count, p.star_count, \
        p.render())


def pd_refine(d: Dataset, p: PatternLike, sp: StarParams=StarParams()) -> Pattern:
    """パターン駆動(PD)でパターンを特殊化する。

    1ステップの変更で得られる候補を目的関数の順に調べ、サポートを保ち目的関数が
    改善する最初の候補を採用する。改善が無くなるか、max_roundsに達したら終了する。

    Args:
        d (Dataset): データセット。
        p (PatternLike): パターン。
        sp (StarParams, optional): 後処理のパラメータ。

    Returns:
        Pattern: 特殊化したパターン。
    """
    pattern = as_pattern(p)
    model = LanguageModel.from_dataset(d)
    m = sp.support(d.size)
    for _ in range(sp.max_rounds):
        current = refine_objective(pattern, model)
        candidates = sorted(((refine_objective(candidate, model), candidate) for candidate \
            in specializations(pattern, d.alphabet.symbols, replace_boundary=False)), \
            key=lambda item: item[0])
        accepted = None
        for objective, candidate in candidates:
            if objective >= current:
                break
            if meets_support(d, candidate, m):
                accepted = candidate
                break
        if accepted is None:
            break
        pattern = accepted
    return pattern


def post_process(d: Dataset, p: PatternLike, sp: StarParams=StarParams()) -> Pattern:
    """ワイルドカードの削除と入れ替えを変化が無くなるまで繰り返し、PDで特殊化する。

    Args:
        d (Dataset): データセット。
        p (PatternLike): パターン。
        sp (StarParams, optional): 後処理のパラメータ。

    Returns:
        Pattern: 後処理したパターン。
    """
    pattern = as_pattern(p)
    while True:
        reduced = swap_merge_stars(d, remove_redundant_stars(d, pattern, sp), sp)
        if reduced == pattern:
            break
        pattern = reduced
    return pd_refine(d, pattern, sp)


def _post_process_report(d: Dataset, base: Base, report: PatternReport, sp: StarParams, \
    incumbent: Optional[PatternReport]=None) -> PatternReport:
    stopwatch = Stopwatch()
    stopwatch.start_timer()
    stopwatch.start_phase("post-process")
    patterns: List[Pattern] = []
    for pattern in report.patterns:
        processed = post_process(d, pattern, sp)
        if processed not in patterns:
            patterns.append(processed)
    patterns.sort(key=lambda pattern: pattern.render())
    timings = dict(report.timings)
    timings.update(stopwatch.get_phase_times())

    algorithm = f"PALS*-{base.value.upper()}"
    # 高い下限を満たすパターン集合は低い下限も満たす
    if incumbent is not None and incumbent.support >= sp.support(d.size):
        candidate = build_pattern_report(d, patterns, algorithm, base.value, report.source)
        if incumbent.ls < candidate.ls:
            patterns = list(incumbent.patterns)
    print_phase_times(algorithm, timings)
    return build_pattern_report(d, patterns, algorithm, base.value, report.source, timings)


# pylint: disable=R0913
def pals_star(d: Dataset, base: Base, sp: StarParams=StarParams(), \
    params: Optional[DepositionParams]=None, pool_size: int=POOL_SIZE, \
    incumbent: Optional[PatternReport]=None) -> PatternReport:
    """PALS*-LCS、またはPALS*-SCSでパターンを求める。

    Args:
        d (Dataset): データセット。
        base (Base): 元にするヒューリスティック解の種類。
        sp (StarParams, optional): 後処理のパラメータ。
        params (Optional[DepositionParams], optional): LCSヒューリスティックのパラメータ。
        pool_size (int, optional): SCSヒューリスティックのテンプレート数。
        incumbent (Optional[PatternReport], optional): より高い感度の下限で求めたレポート。
            サポートを満たし、LSが小さい場合はこちらのパターンを採用する。

    Returns:
        PatternReport: 後処理したパターンのレポート。
    """
    report = run_pals(d, base, params, pool_size)
    return _post_process_report(d, base, report, sp, incumbent)


# pylint: disable=R0913
def pals_star_floors(d: Dataset, base: Base, floors: List[float], \
    params: Optional[DepositionParams]=None, pool_size: int=POOL_SIZE, \
    max_rounds: int=STAR_MAX_ROUNDS, report: Optional[PatternReport]=None) \
    -> Dict[float, PatternReport]:
    """複数の感度の下限でPALS*を実行する。PALSは1回だけ実行する。

    下限の降順に処理し、1つ上の下限の結果を候補に加えるため、下限を下げてもLSは
    増えない。

    Args:
        d (Dataset): データセット。
        base (Base): 元にするヒューリスティック解の種類。
        floors (List[float]): 感度の下限のリスト。
        params (Optional[DepositionParams], optional): LCSヒューリスティックのパラメータ。
        pool_size (int, optional): SCSヒューリスティックのテンプレート数。
        max_rounds (int, optional): PDによる特殊化の最大ラウンド数。
        report (Optional[PatternReport], optional): 実行済みのPALSのレポート。

    Returns:
        Dict[float, PatternReport]: 感度の下限をキーに持つレポート。
    """
    if report is None:
        report = run_pals(d, base, params, pool_size)
    reports: Dict[float, PatternReport] = {}
    incumbent = None
    for floor in sorted(set(floors), reverse=True):
        incumbent = _post_process_report(d, base, report, StarParams(floor, max_rounds), \
            incumbent)
        reports[floor] = incumbent
    return reports
