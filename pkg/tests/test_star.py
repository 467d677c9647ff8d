import pytest

from common.exception import InvalidInputError
from heuristic.algorithm import Base
from pals.pipeline import run_pals
from pals.star import StarParams, meets_support, pals_star, pd_refine, post_process, \
    pals_star_floors, remove_redundant_stars, swap_merge_stars
from sequence.alphabet import Alphabet
from sequence.dataset import Dataset
from sequence.pattern import as_pattern


@pytest.mark.parametrize("min_sensitivity, n, expected", [
    (1.0, 3, 3),
    (0.66, 3, 2),
    (0.5, 4, 2),
    (0.01, 10, 1),
])
def test_support(min_sensitivity, n, expected):
    assert StarParams(min_sensitivity).support(n) == expected


def test_invalid_params():
    with pytest.raises(InvalidInputError):
        StarParams(min_sensitivity=0.0)
    with pytest.raises(InvalidInputError):
        StarParams(min_sensitivity=1.5)


def test_meets_support(lcs_example):
    assert meets_support(lcs_example, as_pattern("*CG*"), 3)
    assert not meets_support(lcs_example, as_pattern("CG*"), 3)
    assert meets_support(lcs_example, as_pattern("CG*"), 2)


def test_remove_redundant_stars():
    d = Dataset.from_strings(["AB", "AXB"])
    assert remove_redundant_stars(d, "*A*B*").render() == "A*B"


def test_swap_merge_stars(lcs_example):
    d = Dataset.from_strings(["AX", "AY"])
    assert swap_merge_stars(d, "*A*").render() == "A*"
    assert swap_merge_stars(lcs_example, "*C*G*", StarParams(0.66)).render() == "CG*"


def test_swap_moves_star_to_the_end():
    d = Dataset.from_strings(["ATGT", "ATCT"])
    assert remove_redundant_stars(d, "A*T").render() == "A*T"
    assert swap_merge_stars(d, "A*T").render() == "AT*"
    assert swap_merge_stars(d, "AT*").render() == "AT*"


def test_swap_keeps_pattern_without_supported_swap():
    d = Dataset.from_strings(["ACT", "AGT"])
    assert swap_merge_stars(d, "A*T").render() == "A*T"
    assert post_process(d, "A*T").render() == "A*T"


def test_pd_refine_examples(lcs_example, scs_example):
    d = Dataset.from_strings(["AA", "AA"], Alphabet("ACGT"))
    assert pd_refine(d, "*").render() == "AA"
    assert pd_refine(lcs_example, "*C*G*", StarParams(0.66)).render() == "*CGT*"
    assert pd_refine(scs_example, "*C*G*", StarParams(0.66)).render() == "*C*GT"


def test_pd_refine_respects_round_limit(lcs_example):
    assert pd_refine(lcs_example, "*C*G*", StarParams(0.66, max_rounds=0)).render() == "*C*G*"


def test_post_process_keeps_full_coverage(lcs_example):
    pattern = post_process(lcs_example, "*CG*")
    assert meets_support(lcs_example, pattern, 3)


@pytest.mark.parametrize("base", [Base.LCS, Base.SCS])
def test_pals_star_not_worse_than_pals(lcs_example, scs_example, base):
    for d in (lcs_example, scs_example):
        report = pals_star(d, base)
        assert report.algorithm == f"PALS*-{base.value.upper()}"
        assert report.sensitivity == 1.0
        assert report.ls <= run_pals(d, base).ls + 1e-9
        assert "post-process" in report.timings


def test_pals_star_lower_floor(lcs_example):
    report = pals_star(lcs_example, Base.LCS, StarParams(0.66))
    assert report.sensitivity >= 2 / 3


def test_post_process_alternates_removal_and_swap():
    d = Dataset.from_strings(["ATGT", "ATCT"])
    pattern = post_process(d, "*A*T", StarParams(max_rounds=0))
    assert pattern.render() == "AT*"
    assert meets_support(d, pattern, 2)


def test_pals_star_keeps_better_incumbent(lcs_example):
    incumbent = pals_star(lcs_example, Base.LCS, StarParams(0.66))
    report = pals_star(lcs_example, Base.LCS, StarParams(0.5), incumbent=incumbent)
    assert report.ls <= incumbent.ls
    full = pals_star(lcs_example, Base.LCS)
    assert pals_star(lcs_example, Base.LCS, incumbent=incumbent).pattern_strings == \
        full.pattern_strings


@pytest.mark.parametrize("base", [Base.LCS, Base.SCS])
def test_pals_star_floors(scs_example, base):
    reports = pals_star_floors(scs_example, base, [1.0, 0.3, 0.66])
    assert sorted(reports) == [0.3, 0.66, 1.0]
    assert reports[1.0].sensitivity == 1.0
    assert reports[1.0].ls <= pals_star(scs_example, base).ls + 1e-9
    assert reports[0.66].ls <= reports[1.0].ls + 1e-9
    assert reports[0.3].ls <= reports[0.66].ls + 1e-9
    assert reports[0.66].sensitivity >= 0.66
