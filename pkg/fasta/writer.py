"""FASTA形式のファイル出力処理。
"""
from typing import List
import os

from pals_param import FASTA_LINE_WIDTH
from sequence.dataset import Dataset


def format_fasta(d: Dataset, width: int=FASTA_LINE_WIDTH) -> str:
    """データセットをFASTA形式の文字列に変換する。

    Args:
        d (Dataset): データセット。
        width (int, optional): 1行あたりの文字数。デフォルトはFASTA_LINE_WIDTH。

    Returns:
        str: FASTA形式の文字列。
    """
    fasta_string = ""
    for sequence in d.sequences:
        fasta_string += f">{sequence.id}\n"
        symbols = sequence.symbols
        for start in range(0, len(symbols), width):
            fasta_string += symbols[start:start + width] + "\n"
    return fasta_string


def write_fasta(d: Dataset, path: str, width: int=FASTA_LINE_WIDTH) -> None:
    """データセットをFASTAファイルに出力する。

    Args:
        d (Dataset): データセット。
        path (str): 出力先のファイルパス。
        width (int, optional): 1行あたりの文字数。
    """
    with open(path, mode="w", encoding="utf-8") as fasta_file:
        fasta_file.write(format_fasta(d, width))


def write_replicates(datasets: List[Dataset], save_dir: str) -> List[str]:
    """データセットをsave_dir/1.fasta, save_dir/2.fasta, ...に出力する。

    Args:
        datasets (List[Dataset]): データセットのリスト。
        save_dir (str): 保存先のディレクトリパス。

    Returns:
        List[str]: 出力したファイルパスのリスト。
    """
    os.makedirs(save_dir, exist_ok=True)
    paths = []
    for index, dataset in enumerate(datasets, start=1):
        path = os.path.join(save_dir, f"{index}.fasta")
        write_fasta(dataset, path)
        paths.append(path)
    return paths
