"""実行結果のレポートのJSON、TSV形式での入出力。
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import json

from heuristic.result import HeuristicResult
from metrics.score import PatternReport
from program import PROGRAM_NAME, VERSION
from sequence.dataset import Dataset

TSV_PATTERN_HEADER = ["base", "n", "k", "patterns", "LS", "sensitivity", "time"]
TSV_RESULT_HEADER = ["algorithm", "length", "value", "time"]


@dataclass
class RunReport: # pylint: disable=R0902
    """1回の実行で得られた全ての結果をまとめたレポート。
    """
    dataset_digest: str
    num_sequences: int
    avg_length: float
    seed: int
    pattern_reports: List[PatternReport] = field(default_factory=list)
    heuristic_results: List[HeuristicResult] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)
    timings: bool = False
    program: str = PROGRAM_NAME
    version: str = VERSION

    @classmethod
    def for_dataset(cls, d: Dataset, seed: int, timings: bool=False) -> "RunReport":
        """データセットの情報を設定した空のレポートを生成する。

        Args:
            d (Dataset): データセット。
            seed (int): 乱数シード。
            timings (bool, optional): 実行時間を出力する場合はTrue。

        Returns:
            RunReport: 生成したレポート。
        """
        return cls(d.digest(), d.size, d.average_length, seed, timings=timings)

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式に変換する。

        Returns:
            Dict[str, Any]: レポートの辞書。
        """
        return {
            "program": self.program,
            "version": self.version,
            "dataset_digest": self.dataset_digest,
            "n": self.num_sequences,
            "avg_length": self.avg_length,
            "seed": self.seed,
            "timings": self.timings,
            "pattern_reports": [report.to_dict(self.timings) for report in self.pattern_reports],
            "heuristic_results": [result.to_dict(self.timings) \
                for result in self.heuristic_results],
            "extra": self.extra,
        }

    def to_json(self) -> str:
        """JSON形式の文字列に変換する。キーはソートして出力する。

        Returns:
            str: JSON形式の文字列。
        """
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        """JSON形式の文字列からレポートを復元する。

        Args:
            text (str): to_jsonで生成した文字列。

        Returns:
            RunReport: 復元したレポート。
        """
        data = json.loads(text)
        return cls(dataset_digest=data["dataset_digest"], num_sequences=data["n"], \
            avg_length=data["avg_length"], seed=data["seed"], \
            pattern_reports=[PatternReport.from_dict(item) for item in data["pattern_reports"]], \
            heuristic_results=[HeuristicResult.from_dict(item) \
                for item in data["heuristic_results"]], \
            extra=data["extra"], timings=data["timings"], program=data["program"], \
            version=data["version"])

    def _format_time(self, seconds: float) -> str:
        return f"{seconds:.3f}" if self.timings else "-"

    def to_tsv(self) -> str:
        """TSV形式の文字列に変換する。パターンの表とヒューリスティック解の表を出力する。

        Returns:
            str: TSV形式の文字列。
        """
        lines = []
        if self.pattern_reports:
            lines.append("\t".join(TSV_PATTERN_HEADER))
            for report in self.pattern_reports:
                ls = "inf" if report.ls == float("inf") else f"{report.ls:.2f}"
                lines.append("\t".join([report.base or "-", str(self.num_sequences), \
                    f"{self.avg_length:g}", ",".join(report.pattern_strings), ls, \
                    f"{100.0 * report.sensitivity:g}", self._format_time(report.elapsed)]))
        if self.heuristic_results:
            lines.append("\t".join(TSV_RESULT_HEADER))
            for result in self.heuristic_results:
                lines.append("\t".join([result.algorithm.value, str(result.length), \
                    result.value, self._format_time(result.elapsed)]))
        return "\n".join(lines) + "\n"

    def render(self, output_format: str) -> str:
        """指定した形式の文字列に変換する。

        Args:
            output_format (str): json、またはtsv。

        Returns:
            str: 変換した文字列。
        """
        if output_format == "tsv":
            return self.to_tsv()
        return self.to_json()


def write_report(text: str, path: Optional[str]) -> None:
    """レポートをファイル、または標準出力に出力する。

    Args:
        text (str): レポートの文字列。
        path (Optional[str]): 出力先のファイルパス。Noneの場合は標準出力。
    """
    if path is None:
        from common.print_console import print_out # pylint: disable=C0415
        print_out(text.rstrip("\n"))
        return
    with open(path, mode="w", encoding="utf-8") as report_file:
        report_file.write(text)
