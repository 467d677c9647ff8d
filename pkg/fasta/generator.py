"""乱数による配列データセットの生成処理。
"""
from dataclasses import dataclass
from typing import List

import numpy as np

from common.exception import InvalidInputError
from sequence.alphabet import Alphabet
from sequence.dataset import Dataset, Sequence


@dataclass(frozen=True)
class GeneratorSpec:
    """データセット生成の設定。
    """
    n: int
    k: int
    alphabet: Alphabet
    seed: int
    replicates: int = 1

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.replicates < 1:
            raise InvalidInputError(f"n, k and replicates must be positive : " \
                f"n={self.n}, k={self.k}, replicates={self.replicates}")


def generate(spec: GeneratorSpec) -> List[Dataset]:
    """一様乱数で長さkの配列n本からなるデータセットをreplicates個生成する。

    Args:
        spec (GeneratorSpec): 生成の設定。

    Returns:
        List[Dataset]: 生成したデータセットのリスト。シードが同じなら同じ結果になる。
    """
    rng = np.random.default_rng(spec.seed)
    symbols = np.array(list(spec.alphabet.symbols))
    datasets = []
    for _ in range(spec.replicates):
        codes = rng.integers(0, spec.alphabet.size, size=(spec.n, spec.k))
        sequences = tuple(Sequence(f"seq{i + 1}", "".join(symbols[row]), spec.alphabet) \
            for i, row in enumerate(codes))
        datasets.append(Dataset(spec.alphabet, sequences))
    return datasets
