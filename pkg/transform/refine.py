"""LCSとSCSを相互に変換しながら解とパターンを改善する反復処理。
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List

from common.exception import InvalidInputError
from common.print_console import print_progress
from heuristic.constant import POOL_SIZE
from heuristic.lcs import heuristic_lcs_candidates
from heuristic.result import DepositionParams, HeuristicResult
from heuristic.scs import heuristic_scs_candidates
from metrics.score import PatternReport
from pals.pipeline import pals_lcs, pals_scs
from pals_param import REFINE_CANDIDATES, REFINE_ROUNDS
from sequence.dataset import Dataset
from transform.transform import lcs_to_scs, scs_to_lcs


@dataclass
class RefinementState:
    """反復改善の状態。
    """
    best_lcs: HeuristicResult
    best_scs: HeuristicResult
    best_patterns: PatternReport
    round: int = 0
    history: List[Dict[str, Any]] = field(default_factory=list)
    lcs_candidates: List[HeuristicResult] = field(default_factory=list)
    scs_candidates: List[HeuristicResult] = field(default_factory=list)

    def to_dict(self, timings: bool=False) -> Dict[str, Any]:
        """辞書形式に変換する。

        Args:
            timings (bool, optional): 実行時間を含める場合はTrue。

        Returns:
            Dict[str, Any]: 状態の辞書。
        """
        return {
            "round": self.round,
            "best_lcs": self.best_lcs.to_dict(timings),
            "best_scs": self.best_scs.to_dict(timings),
            "best_patterns": self.best_patterns.to_dict(timings),
            "history": [dict(entry) for entry in self.history],
            "lcs_candidates": [candidate.value for candidate in self.lcs_candidates],
            "scs_candidates": [candidate.value for candidate in self.scs_candidates],
        }


def _is_better_report(report: PatternReport, best: PatternReport) -> bool:
    return report.sensitivity >= best.sensitivity and report.ls < best.ls


def refine(d: Dataset, max_rounds: int=REFINE_ROUNDS, candidates: int=REFINE_CANDIDATES, \
    seed: int=0, pool_size: int=POOL_SIZE) -> RefinementState:
    """LCSとSCSをパターンを介して相互に変換し、改善が無くなるまで繰り返す。

    初期のパターンは全ての候補から求めたパターンのうち最良のものとする。
    LCSは真に長くなった場合、SCSは真に短くなった場合、パターンは感度を下げずにLSが
    真に小さくなった場合にだけ更新する。

    Args:
        d (Dataset): データセット。
        max_rounds (int, optional): 最大ラウンド数。
        candidates (int, optional): 初期解の候補数。seed, seed+1, ...のシードで生成する。
        seed (int, optional): 乱数シード。
        pool_size (int, optional): SCSヒューリスティックのテンプレート数。

    Returns:
        RefinementState: 最終的な状態。
    """
    if max_rounds < 1:
        raise InvalidInputError(f"max_rounds must be positive : {max_rounds}")
    if candidates < 1:
        raise InvalidInputError(f"candidates must be positive : {candidates}")

    params = DepositionParams(seed=seed)
    lcs_candidates = heuristic_lcs_candidates(d, candidates, params)
    scs_candidates = heuristic_scs_candidates(d, candidates, pool_size, seed)
    best_lcs = max(lcs_candidates, key=lambda result: result.length)
    best_scs = min(scs_candidates, key=lambda result: result.length)
    # 最長でない候補からより良いパターンが得られることがある
    reports = [pals_lcs(d, lcs=candidate.value) for candidate in lcs_candidates] + \
        [pals_scs(d, scs=candidate.value) for candidate in scs_candidates]
    best_patterns = reports[0]
    for report in reports[1:]:
        if _is_better_report(report, best_patterns):
            best_patterns = report

    state = RefinementState(best_lcs, best_scs, best_patterns, 0, [], lcs_candidates, \
        scs_candidates)

    for round_index in range(1, max_rounds + 1):
        improved = False
        new_lcs = scs_to_lcs(d, state.best_scs, params)
        new_scs = lcs_to_scs(d, state.best_lcs, pool_size, seed)
        if new_lcs.length > state.best_lcs.length:
            state.best_lcs = new_lcs
            improved = True
        if new_scs.length < state.best_scs.length:
            state.best_scs = new_scs
            improved = True
        for report in (pals_lcs(d, lcs=state.best_lcs.value), \
            pals_scs(d, scs=state.best_scs.value)):
            if _is_better_report(report, state.best_patterns):
                state.best_patterns = report
                improved = True

        state.round = round_index
        state.history.append({
            "round": round_index,
            "lcs_length": state.best_lcs.length,
            "scs_length": state.best_scs.length,
            "ls": state.best_patterns.to_dict()["ls"],
            "improved": improved,
        })
        print_progress(f"round {round_index} : LCS {state.best_lcs.length}, " \
            f"SCS {state.best_scs.length}, LS {state.best_patterns.ls:.3f}")
        if not improved:
            break

    return state
