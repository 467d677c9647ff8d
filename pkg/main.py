#!/usr/bin/python3
"""パターン探索ツールのエントリーポイント。
"""
from functools import wraps
from typing import Callable, List, Optional, Tuple
import json
import sys
import click

from bench.trend import AXES, AXIS_N, run_trend
from common.exception import InvalidInputError, PalsError
from common.print_console import format_table, print_err, print_out, set_verbose
from fasta.generator import GeneratorSpec, generate
from fasta.reader import read_fasta
from fasta.writer import format_fasta, write_fasta, write_replicates
from heuristic.algorithm import Algorithm, Base
from heuristic.constant import POOL_SIZE
from heuristic.lcs import heuristic_lcs, heuristic_lcs_candidates
from heuristic.result import DepositionParams
from heuristic.scs import heuristic_scs, run_scs_algorithm
from metrics.consensus import compare_consensus
from oracle.limits import OracleLimits
from oracle.suite import run_oracle_suite
from oracle.verdict import CheckVerdict
from pals.pipeline import run_pals
from pals.star import StarParams, pals_star
from pals_param import DEFAULT_SEED, SEED_ENV_VAR, MIN_SENSITIVITY, REFINE_ROUNDS, \
    REFINE_CANDIDATES, GEN_SEQUENCES, GEN_LENGTH, GEN_REPLICATES, NUM_BENCH_WORKERS, \
    EVAL_INSTANCES, EVAL_MAX_LENGTH
from program import PROGRAM_NAME, VERSION
from report.run_report import RunReport, write_report
from sequence.alphabet import Alphabet
from sequence.dataset import Dataset
from transform.refine import refine
from transform.transform import lcs_to_scs, scs_to_lcs

# pylint: disable=R0913, R0914


def common_options(func: Callable) -> Callable:
    """全てのサブコマンドに共通のオプションを付与する。
    """
    options = [
        click.option('--seed', type=click.IntRange(min=0), default=DEFAULT_SEED, \
            envvar=SEED_ENV_VAR, show_envvar=True, \
            help=f"乱数シード。環境変数{SEED_ENV_VAR}でも指定できる。デフォルトは{DEFAULT_SEED}。"),
        click.option('--alphabet', type=click.STRING, default=None, \
            help="アルファベット。dna、protein、または記号の列挙。デフォルトは入力から推定する。"),
        click.option('--format', 'output_format', type=click.Choice(["json", "tsv"]), \
            default="json", help="レポートの出力形式。デフォルトはjson。"),
        click.option('--out', type=click.STRING, default=None, \
            help="出力先のファイルパス。デフォルトは標準出力。"),
        click.option('--timings', is_flag=True, default=False, \
            help="レポートに実行時間を含めるフラグ。デフォルトは含めない。"),
        click.option('--verbose', is_flag=True, default=False, \
            help="進捗を標準エラー出力に表示するフラグ。"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def handle_errors(func: Callable) -> Callable:
    """ライブラリの例外と入出力エラーをメッセージに変換し、終了コード1で終了する。
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        set_verbose(kwargs.get("verbose", False))
        try:
            return func(*args, **kwargs)
        except (PalsError, OSError) as error:
            print_err(f"error: {error}")
            sys.exit(1)
    return wrapper


def _parse_alphabet(alphabet: Optional[str]) -> Optional[Alphabet]:
    return None if alphabet is None else Alphabet.from_name(alphabet)


def _load(fasta: str, alphabet: Optional[str]) -> Dataset:
    return read_fasta(fasta, _parse_alphabet(alphabet))


def _parse_settings(text: str) -> List[float]:
    try:
        return [float(value) for value in text.split(",") if value.strip()]
    except ValueError as error:
        raise InvalidInputError(f"settings must be comma separated numbers : {text}") from error


@click.group()
@click.version_option(version=VERSION, prog_name=PROGRAM_NAME)
def cli():
    """多数の配列からLCS、SCSとワイルドカードパターンを求めるツール。
    """


@cli.command()
@click.option('--n', 'num_sequences', type=click.IntRange(min=1), default=GEN_SEQUENCES, \
    help=f"生成する配列数。デフォルトは{GEN_SEQUENCES}。")
@click.option('--k', 'length', type=click.IntRange(min=1), default=GEN_LENGTH, \
    help=f"生成する配列長。デフォルトは{GEN_LENGTH}。")
@click.option('--replicates', type=click.IntRange(min=1), default=GEN_REPLICATES, \
    help=f"生成するデータセット数。2以上の場合は--outにディレクトリを指定する。デフォルトは{GEN_REPLICATES}。")
@common_options
@handle_errors
def gen(num_sequences: int, length: int, replicates: int, seed: int, alphabet: Optional[str], \
    output_format: str, out: Optional[str], timings: bool, verbose: bool):
    """一様乱数で配列を生成し、FASTA形式で出力する。
    """
    _ = (output_format, timings, verbose)
    spec = GeneratorSpec(num_sequences, length, Alphabet.from_name(alphabet or "dna"), seed, \
        replicates)
    datasets = generate(spec)
    if replicates > 1:
        if out is None:
            raise InvalidInputError("--out DIR is required when --replicates is more than 1")
        for path in write_replicates(datasets, out):
            print_err(f"wrote {path}")
    elif out is None:
        print_out(format_fasta(datasets[0]).rstrip("\n"))
    else:
        write_fasta(datasets[0], out)


@cli.command()
@click.argument('fasta', type=click.STRING)
@click.option('--candidates', type=click.IntRange(min=1), default=1, \
    help="シードを変えて試行する回数。デフォルトは1。")
@common_options
@handle_errors
def lcs(fasta: str, candidates: int, seed: int, alphabet: Optional[str], output_format: str, \
    out: Optional[str], timings: bool, verbose: bool):
    """Deposition and Extensionで共通部分列を求める。
    """
    _ = verbose
    d = _load(fasta, alphabet)
    report = RunReport.for_dataset(d, seed, timings)
    report.heuristic_results = heuristic_lcs_candidates(d, candidates, DepositionParams(seed=seed))
    write_report(report.render(output_format), out)


@cli.command()
@click.argument('fasta', type=click.STRING)
@click.option('--algo', type=click.Choice(Algorithm.get_scs_choices()), \
    default=Algorithm.DEPOSITION_REDUCTION.value, \
    help=f"SCSのアルゴリズム。デフォルトは{Algorithm.DEPOSITION_REDUCTION.value}。")
@click.option('--pool-size', type=click.IntRange(min=1), default=POOL_SIZE, \
    help=f"Deposition and Reductionのテンプレート数。デフォルトは{POOL_SIZE}。")
@common_options
@handle_errors
def scs(fasta: str, algo: str, pool_size: int, seed: int, alphabet: Optional[str], \
    output_format: str, out: Optional[str], timings: bool, verbose: bool):
    """指定したアルゴリズムで共通超配列を求める。
    """
    _ = verbose
    d = _load(fasta, alphabet)
    report = RunReport.for_dataset(d, seed, timings)
    report.heuristic_results = [run_scs_algorithm(d, Algorithm(algo), pool_size, seed)]
    write_report(report.render(output_format), out)


@cli.command()
@click.argument('fasta', type=click.STRING)
@click.option('--base', type=click.Choice(Base.get_choices()), default=Base.LCS.value, \
    help=f"パターン生成の元にする解。デフォルトは{Base.LCS.value}。")
@common_options
@handle_errors
def pals(fasta: str, base: str, seed: int, alphabet: Optional[str], output_format: str, \
    out: Optional[str], timings: bool, verbose: bool):
    """PALS-LCS、またはPALS-SCSでパターンを求める。
    """
    _ = verbose
    d = _load(fasta, alphabet)
    report = RunReport.for_dataset(d, seed, timings)
    report.pattern_reports = [run_pals(d, Base(base), DepositionParams(seed=seed))]
    write_report(report.render(output_format), out)


@cli.command(name="pals-star")
@click.argument('fasta', type=click.STRING)
@click.option('--base', type=click.Choice(Base.get_choices()), default=Base.LCS.value, \
    help=f"パターン生成の元にする解。デフォルトは{Base.LCS.value}。")
@click.option('--min-sensitivity', type=click.FloatRange(min=0.0, max=1.0, min_open=True), \
    default=MIN_SENSITIVITY, help=f"感度の下限。デフォルトは{MIN_SENSITIVITY}。")
@common_options
@handle_errors
def pals_star_command(fasta: str, base: str, min_sensitivity: float, seed: int, \
    alphabet: Optional[str], output_format: str, out: Optional[str], timings: bool, \
    verbose: bool):
    """PALS*でパターンを求める。
    """
    _ = verbose
    d = _load(fasta, alphabet)
    report = RunReport.for_dataset(d, seed, timings)
    report.pattern_reports = [pals_star(d, Base(base), StarParams(min_sensitivity), \
        DepositionParams(seed=seed))]
    write_report(report.render(output_format), out)


@cli.command()
@click.argument('fasta', type=click.STRING)
@click.option('--from', 'origin', type=click.Choice(Base.get_choices()), \
    default=Base.SCS.value, help=f"変換元の解。デフォルトは{Base.SCS.value}。")
@common_options
@handle_errors
def transform(fasta: str, origin: str, seed: int, alphabet: Optional[str], output_format: str, \
    out: Optional[str], timings: bool, verbose: bool):
    """パターンを介してSCSからLCS、またはLCSからSCSを求める。
    """
    _ = verbose
    d = _load(fasta, alphabet)
    params = DepositionParams(seed=seed)
    report = RunReport.for_dataset(d, seed, timings)
    if Base(origin) == Base.SCS:
        source = heuristic_scs(d, seed=seed)
        result = scs_to_lcs(d, source, params)
    else:
        source = heuristic_lcs(d, params)
        result = lcs_to_scs(d, source, seed=seed)
    report.heuristic_results = [source, result]
    write_report(report.render(output_format), out)


@cli.command(name="refine")
@click.argument('fasta', type=click.STRING)
@click.option('--rounds', type=click.IntRange(min=1), default=REFINE_ROUNDS, \
    help=f"最大ラウンド数。デフォルトは{REFINE_ROUNDS}。")
@click.option('--candidates', type=click.IntRange(min=1), default=REFINE_CANDIDATES, \
    help=f"初期解の候補数。デフォルトは{REFINE_CANDIDATES}。")
@common_options
@handle_errors
def refine_command(fasta: str, rounds: int, candidates: int, seed: int, \
    alphabet: Optional[str], output_format: str, out: Optional[str], timings: bool, \
    verbose: bool):
    """LCSとSCSの相互変換を改善が無くなるまで繰り返す。
    """
    _ = verbose
    d = _load(fasta, alphabet)
    state = refine(d, rounds, candidates, seed)
    report = RunReport.for_dataset(d, seed, timings)
    report.heuristic_results = [state.best_lcs, state.best_scs]
    report.pattern_reports = [state.best_patterns]
    report.extra["refine"] = state.to_dict(timings)
    write_report(report.render(output_format), out)


@cli.command(name="eval")
@click.option('--max-len', type=click.IntRange(min=1), default=EVAL_MAX_LENGTH, \
    help=f"検査に使用する配列の最大長。デフォルトは{EVAL_MAX_LENGTH}。")
@click.option('--instances', type=click.IntRange(min=1), default=EVAL_INSTANCES, \
    help=f"検査に使用するデータセット数。デフォルトは{EVAL_INSTANCES}。")
@common_options
@handle_errors
def eval_command(max_len: int, instances: int, seed: int, alphabet: Optional[str], \
    output_format: str, out: Optional[str], timings: bool, verbose: bool):
    """小規模なランダム入力でヒューリスティックを厳密解と照合する。
    """
    _ = (alphabet, timings, verbose)
    results = run_oracle_suite(max_len, instances, seed, OracleLimits())
    if output_format == "tsv":
        text = format_table(["check", "verdict", "checked", "violations", "detail"], \
            [[result.name, CheckVerdict.get_string(result.verdict), result.checked, \
                result.violations, result.detail] for result in results]) + "\n"
    else:
        text = json.dumps([result.to_dict() for result in results], sort_keys=True, \
            indent=2) + "\n"
    write_report(text, out)
    if any(result.verdict == CheckVerdict.FAIL for result in results):
        sys.exit(1)


@cli.command()
@click.argument('fasta', type=click.STRING)
@click.option('--known', type=click.STRING, multiple=True, required=True, \
    help="既知のコンセンサスパターン(例: *TATA*)。複数指定できる。")
@click.option('--base', type=click.Choice(Base.get_choices()), default=Base.LCS.value, \
    help=f"パターン生成の元にする解。デフォルトは{Base.LCS.value}。")
@click.option('--min-sensitivity', type=click.FloatRange(min=0.0, max=1.0, min_open=True), \
    default=MIN_SENSITIVITY, help=f"感度の下限。デフォルトは{MIN_SENSITIVITY}。")
@common_options
@handle_errors
def compare(fasta: str, known: Tuple[str, ...], base: str, min_sensitivity: float, seed: int, \
    alphabet: Optional[str], output_format: str, out: Optional[str], timings: bool, \
    verbose: bool):
    """PALS*で求めたパターンを既知のコンセンサスパターンと比較する。
    """
    _ = verbose
    d = _load(fasta, alphabet)
    discovered = pals_star(d, Base(base), StarParams(min_sensitivity), DepositionParams(seed=seed))
    report = RunReport.for_dataset(d, seed, timings)
    report.pattern_reports = [discovered]
    report.extra["compare"] = [comparison.to_dict() for comparison \
        in compare_consensus(d, discovered.patterns, [text.upper() for text in known])]
    write_report(report.render(output_format), out)


@cli.command()
@click.option('--base', type=click.Choice(Base.get_choices()), default=Base.LCS.value, \
    help=f"パターン生成の元にする解。デフォルトは{Base.LCS.value}。")
@click.option('--axis', type=click.Choice(list(AXES)), default=AXIS_N, \
    help=f"変化させるパラメータ。デフォルトは{AXIS_N}。")
@click.option('--settings', type=click.STRING, default="10,100", \
    help="パラメータの設定値をカンマ区切りで指定する。デフォルトは10,100。")
@click.option('--n', 'num_sequences', type=click.IntRange(min=1), default=GEN_SEQUENCES, \
    help=f"配列数。デフォルトは{GEN_SEQUENCES}。")
@click.option('--k', 'length', type=click.IntRange(min=1), default=GEN_LENGTH, \
    help=f"配列長。デフォルトは{GEN_LENGTH}。")
@click.option('--replicates', type=click.IntRange(min=1), default=10, \
    help="設定値ごとのデータセット数。デフォルトは10。")
@click.option('--min-sensitivity', type=click.FloatRange(min=0.0, max=1.0, min_open=True), \
    default=MIN_SENSITIVITY, help=f"PALS*の感度の下限。デフォルトは{MIN_SENSITIVITY}。")
@click.option('--process', type=click.IntRange(min=1), default=NUM_BENCH_WORKERS, \
    help=f"ベンチマーク実行ワーカ数。デフォルトは{NUM_BENCH_WORKERS}。")
@common_options
@handle_errors
def bench(base: str, axis: str, settings: str, num_sequences: int, length: int, replicates: int, \
    min_sensitivity: float, process: int, seed: int, alphabet: Optional[str], \
    output_format: str, out: Optional[str], timings: bool, verbose: bool):
    """生成したデータセットでPALSとPALS*のLSの傾向を調べる。
    """
    _ = verbose
    spec = GeneratorSpec(num_sequences, length, Alphabet.from_name(alphabet or "dna"), seed, \
        replicates)
    result = run_trend(Base(base), axis, _parse_settings(settings), spec, min_sensitivity, \
        process)
    write_report(result.render(output_format, timings), out)


if __name__ == "__main__":
    cli() # pylint: disable=E1120
