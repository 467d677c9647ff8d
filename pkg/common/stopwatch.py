"""処理時間の計測。
"""
from typing import Dict
import time


class Stopwatch:
    """フェーズごとの経過時間を計測するクラス。
    """
    def __init__(self):
        """Stopwatchクラスのコンストラクタ。
        """
        self.phase_times = {}
        self.start_time = 0.0
        self.phase_start_time = 0.0
        self.current_phase = None

    def start_timer(self) -> None:
        """計測を開始する。
        """
        self.start_time = time.perf_counter()
        self.phase_start_time = self.start_time

    def start_phase(self, phase: str) -> None:
        """新しいフェーズの計測を開始する。実行中のフェーズは終了する。

        Args:
            phase (str): フェーズ名。
        """
        self.stop_phase()
        self.current_phase = phase
        self.phase_start_time = time.perf_counter()

    def stop_phase(self) -> None:
        """実行中のフェーズの計測を終了する。
        """
        if self.current_phase is None:
            return
        elapsed = time.perf_counter() - self.phase_start_time
        self.phase_times[self.current_phase] = \
            self.phase_times.get(self.current_phase, 0.0) + elapsed
        self.current_phase = None

    def get_phase_times(self) -> Dict[str, float]:
        """フェーズごとの経過時間を取得する。

        Returns:
            Dict[str, float]: フェーズ名をキー、経過時間(秒)をバリューに持つ辞書。
        """
        self.stop_phase()
        return dict(self.phase_times)
