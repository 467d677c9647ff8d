"""テストで共通に使用するデータセット。
"""
import pytest

from sequence.alphabet import Alphabet
from sequence.dataset import Dataset

DNA = Alphabet("ACGT")


@pytest.fixture
def lcs_example():
    """共通部分列からパターンを作る例題のデータセット。
    """
    return Dataset.from_strings(["ACGT", "CGGT", "CGTC"], DNA)


@pytest.fixture
def scs_example():
    """共通超配列からパターンを作る例題のデータセット。
    """
    return Dataset.from_strings(["ACGT", "CGGT", "CTGC"], DNA)
