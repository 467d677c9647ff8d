import json
import math

import pytest

from bench.trend import AXIS_K, AXIS_MIN_SENSITIVITY, AXIS_N, VERDICT_LS_BY_FLOOR, \
    VERDICT_LS_BY_N, VERDICT_SENSITIVITY, VERDICT_SIZE_BY_N, VERDICT_STAR_BOUND, TrendPoint, \
    judge_trend, run_trend
from bench.worker import BenchSample, bench_floor_worker, bench_worker, log10_language_size
from common.exception import InvalidInputError
from fasta.generator import GeneratorSpec, generate
from heuristic.algorithm import Base
from oracle.verdict import CheckVerdict
from pals.pipeline import run_pals
from sequence.alphabet import Alphabet
from sequence.dataset import Dataset

DNA = Alphabet("ACGT")


def _point(setting, pals_ls, star_ls, floor=1.0, log_size=None):
    log_size = pals_ls + 1.0 if log_size is None else log_size
    sample = BenchSample(setting, 1, pals_ls, 1.0, log_size, star_ls, 1.0, 0.0)
    return TrendPoint(setting, 10, 10, floor, pals_ls, 1.0, log_size, star_ls, 1.0, 0.0, [sample])


def test_bench_worker():
    d = generate(GeneratorSpec(4, 20, DNA, 1))[0]
    sample = bench_worker("lcs", d, 4.0, 1, 1.0, 0)
    assert sample.pals_sensitivity == 1.0
    assert sample.star_sensitivity == 1.0
    assert sample.star_ls <= sample.pals_ls + 1e-9


def test_judge_trend_on_n():
    verdicts = judge_trend(AXIS_N, [_point(10, 1.0, 0.5), _point(100, 2.0, 1.5)])
    assert verdicts[VERDICT_SENSITIVITY] == CheckVerdict.PASS
    assert verdicts[VERDICT_LS_BY_N] == CheckVerdict.PASS
    assert verdicts[VERDICT_LS_BY_FLOOR] == CheckVerdict.SKIP
    assert verdicts[VERDICT_STAR_BOUND] == CheckVerdict.PASS

    verdicts = judge_trend(AXIS_N, [_point(10, 2.0, 2.5), _point(100, 1.0, 1.0)])
    assert verdicts[VERDICT_LS_BY_N] == CheckVerdict.FAIL
    assert verdicts[VERDICT_STAR_BOUND] == CheckVerdict.FAIL


def test_judge_trend_on_floor():
    points = [_point(0.8, 3.0, 1.0, 0.8), _point(0.9, 3.0, 1.2, 0.9), _point(1.0, 3.0, 1.5)]
    verdicts = judge_trend(AXIS_MIN_SENSITIVITY, points)
    assert verdicts[VERDICT_LS_BY_FLOOR] == CheckVerdict.PASS
    assert verdicts[VERDICT_LS_BY_N] == CheckVerdict.SKIP

    points = [_point(0.8, 3.0, 2.0, 0.8), _point(1.0, 3.0, 1.5)]
    assert judge_trend(AXIS_MIN_SENSITIVITY, points)[VERDICT_LS_BY_FLOOR] == CheckVerdict.FAIL

    verdicts = judge_trend(AXIS_MIN_SENSITIVITY, [_point(0.5, 3.0, 2.0, 0.5)])
    assert verdicts[VERDICT_SENSITIVITY] == CheckVerdict.SKIP
    assert verdicts[VERDICT_STAR_BOUND] == CheckVerdict.SKIP


def test_bench_floor_worker_keeps_floor_trend():
    d = generate(GeneratorSpec(10, 40, DNA, 3))[0]
    samples = bench_floor_worker("scs", d, [1.0, 0.7, 0.9], 1, 0)
    assert [sample.setting for sample in samples] == [0.7, 0.9, 1.0]
    assert len({sample.pals_ls for sample in samples}) == 1
    for lower, higher in zip(samples, samples[1:]):
        assert lower.star_ls <= higher.star_ls + 1e-9
        assert lower.star_sensitivity >= lower.setting


def test_log10_language_size():
    report = run_pals(Dataset.from_strings(["ACGT", "CGGT", "CGTC"], DNA), Base.LCS)
    assert log10_language_size(report) == pytest.approx(report.ls + math.log10(3))


def test_judge_trend_on_language_size():
    verdicts = judge_trend(AXIS_N, [_point(10, 2.0, 1.0, log_size=3.0), \
        _point(100, 1.5, 1.0, log_size=3.5)])
    assert verdicts[VERDICT_LS_BY_N] == CheckVerdict.FAIL
    assert verdicts[VERDICT_SIZE_BY_N] == CheckVerdict.PASS

    verdicts = judge_trend(AXIS_N, [_point(10, 2.0, 1.0, log_size=3.0), \
        _point(100, 2.0, 1.0, log_size=2.5)])
    assert verdicts[VERDICT_SIZE_BY_N] == CheckVerdict.FAIL
    assert judge_trend(AXIS_K, [_point(10, 2.0, 1.0)])[VERDICT_SIZE_BY_N] == CheckVerdict.SKIP


def test_run_trend_floor_axis_is_monotone():
    result = run_trend(Base.LCS, AXIS_MIN_SENSITIVITY, [1.0, 0.9, 0.8], \
        GeneratorSpec(10, 30, DNA, 5, 2), process=1)
    assert result.verdicts[VERDICT_LS_BY_FLOOR] == CheckVerdict.PASS
    for point in result.points:
        assert [sample.replicate for sample in point.samples] == [1, 2]


def test_single_setting_passes_trivially():
    result = run_trend(Base.LCS, AXIS_N, [5], GeneratorSpec(5, 30, DNA, 2, 2), process=1)
    assert len(result.points) == 1
    assert result.verdicts[VERDICT_LS_BY_N] == CheckVerdict.PASS
    assert result.verdicts[VERDICT_SENSITIVITY] == CheckVerdict.PASS


def test_run_trend_sorts_settings_and_is_reproducible():
    spec = GeneratorSpec(3, 30, DNA, 4, 2)
    first = run_trend(Base.SCS, AXIS_K, [40, 20, 40], spec, process=1)
    second = run_trend(Base.SCS, AXIS_K, [20, 40], spec, process=1)
    assert [point.setting for point in first.points] == [20, 40]
    assert [point.k for point in first.points] == [20, 40]
    assert first.to_json() == second.to_json()
    assert all(len(point.samples) == 2 for point in first.points)


def test_run_trend_output_formats():
    result = run_trend(Base.LCS, AXIS_MIN_SENSITIVITY, [1.0, 0.5], \
        GeneratorSpec(4, 20, DNA, 0, 2), process=1)
    data = json.loads(result.to_json())
    assert data["axis"] == AXIS_MIN_SENSITIVITY
    assert [point["min_sensitivity"] for point in data["points"]] == [0.5, 1.0]
    assert "mean_time" not in data["points"][0]
    assert "mean_time" in json.loads(result.to_json(timings=True))["points"][0]
    lines = result.to_tsv().splitlines()
    assert lines[0].split("\t")[:3] == ["base", "axis", "setting"]
    assert lines[1].split("\t")[-1] == "-"
    assert len(lines) == 1 + 2 + 5


@pytest.mark.parametrize("axis, settings, spec", [
    (AXIS_N, [201], GeneratorSpec(10, 10, DNA, 0)),
    (AXIS_K, [1001], GeneratorSpec(10, 10, DNA, 0)),
    (AXIS_MIN_SENSITIVITY, [1.0], GeneratorSpec(201, 10, DNA, 0)),
    (AXIS_MIN_SENSITIVITY, [0.0], GeneratorSpec(10, 10, DNA, 0)),
    (AXIS_N, [2.5], GeneratorSpec(10, 10, DNA, 0)),
    (AXIS_N, [], GeneratorSpec(10, 10, DNA, 0)),
    ("length", [10], GeneratorSpec(10, 10, DNA, 0)),
])
def test_run_trend_rejects_invalid_settings(axis, settings, spec):
    with pytest.raises(InvalidInputError):
        run_trend(Base.LCS, axis, settings, spec, process=1)


@pytest.mark.slow
def test_run_trend_with_workers():
    spec = GeneratorSpec(5, 30, DNA, 7, 2)
    parallel = run_trend(Base.LCS, AXIS_N, [3, 5], spec, process=2)
    inline = run_trend(Base.LCS, AXIS_N, [3, 5], spec, process=1)
    assert parallel.to_json() == inline.to_json()
