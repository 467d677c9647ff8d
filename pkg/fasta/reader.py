"""FASTA形式のファイル読み込み処理。
"""
from typing import Iterator, List, Optional, Tuple

from common.exception import EmptyFastaError, MalformedRecordError, UnknownSymbolError
from sequence.alphabet import Alphabet
from sequence.constant import WILDCARD
from sequence.dataset import Dataset, Sequence

FastaRecord = Tuple[str, List[Tuple[str, int]]]


def iterate_fasta(lines: List[str]) -> Iterator[FastaRecord]:
    """FASTA形式の行を読み、レコードを順に返す。空行は読み飛ばす。

    Args:
        lines (List[str]): FASTA形式の行。

    Yields:
        FastaRecord: (ID, [(大文字に変換した配列の行, 行番号), ...])。
    """
    header, body = None, []
    for line_number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            if header is not None:
                yield header, body
            fields = line[1:].split()
            if not fields:
                raise MalformedRecordError("header line has no identifier", line_number)
            header, body = fields[0], []
            continue
        if header is None:
            raise MalformedRecordError("sequence data before the first header line", line_number)
        body.append((line.replace(" ", "").upper(), line_number))
    if header is not None:
        yield header, body


def _check_symbols(header: str, body: List[Tuple[str, int]], alphabet: Optional[Alphabet]) \
    -> None:
    for text, line_number in body:
        for char in text:
            if not char.isalpha() or char == WILDCARD or \
                (alphabet is not None and char not in alphabet.symbols):
                raise UnknownSymbolError(f"record {header} has unknown symbol '{char}'", \
                    line_number)


def read_fasta_lines(lines: List[str], alphabet: Optional[Alphabet]=None) -> Dataset:
    """FASTA形式の行からデータセットを生成する。

    Args:
        lines (List[str]): FASTA形式の行。
        alphabet (Optional[Alphabet], optional): アルファベット。省略時は出現する記号をソートして使う。

    Returns:
        Dataset: 読み込んだデータセット。
    """
    records = list(iterate_fasta(lines))
    if not records:
        raise EmptyFastaError("no sequence records", max(len(lines), 1))

    for header, body in records:
        _check_symbols(header, body, alphabet)

    strings = ["".join(text for text, _ in body) for _, body in records]
    if alphabet is None:
        alphabet = Alphabet.infer(strings)
    return Dataset(alphabet, tuple(Sequence(header, string, alphabet) \
        for (header, _), string in zip(records, strings)))


def read_fasta(path: str, alphabet: Optional[Alphabet]=None) -> Dataset:
    """FASTAファイルを読み込む。

    Args:
        path (str): FASTAファイルパス。
        alphabet (Optional[Alphabet], optional): アルファベット。

    Returns:
        Dataset: 読み込んだデータセット。
    """
    with open(path, mode="r", encoding="utf-8") as fasta_file:
        return read_fasta_lines(fasta_file.readlines(), alphabet)
