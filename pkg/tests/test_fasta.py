import pytest
from hypothesis import given
from hypothesis import strategies as st

from common.exception import EmptyFastaError, FastaFormatError, MalformedRecordError, \
    UnknownSymbolError
from fasta.generator import GeneratorSpec, generate
from fasta.reader import iterate_fasta, read_fasta, read_fasta_lines
from fasta.writer import format_fasta, write_fasta, write_replicates
from sequence.alphabet import Alphabet
from sequence.dataset import Dataset

DNA = Alphabet("ACGT")


def test_read_fasta_lines():
    lines = [">seq1 promoter", "acg", "T", "", ">seq2", "CGGT"]
    d = read_fasta_lines(lines, DNA)
    assert d.strings == ["ACGT", "CGGT"]
    assert [sequence.id for sequence in d.sequences] == ["seq1", "seq2"]


def test_iterate_fasta_keeps_line_numbers():
    records = list(iterate_fasta([">a", "AC", "GT", ">b", "C"]))
    assert records == [("a", [("AC", 2), ("GT", 3)]), ("b", [("C", 5)])]


def test_alphabet_is_inferred():
    d = read_fasta_lines([">x", "BAAB", ">y", "AB"])
    assert d.alphabet.symbols == "AB"


@pytest.mark.parametrize("lines, error, line", [
    ([], EmptyFastaError, 1),
    (["", ""], EmptyFastaError, 2),
    (["ACGT"], MalformedRecordError, 1),
    ([">", "ACGT"], MalformedRecordError, 1),
    ([">a", "ACGT", ">b", "AC*T"], UnknownSymbolError, 4),
    ([">a", "ACGN"], UnknownSymbolError, 2),
])
def test_read_errors(lines, error, line):
    with pytest.raises(error) as info:
        read_fasta_lines(lines, DNA)
    assert info.value.line == line
    assert isinstance(info.value, FastaFormatError)
    assert str(info.value).startswith(f"line {line}:")


def test_format_fasta_wraps_lines():
    d = Dataset.from_strings(["A" * 7], DNA)
    assert format_fasta(d, width=3) == ">seq1\nAAA\nAAA\nA\n"


@given(st.lists(st.text(alphabet="ACGT", min_size=1, max_size=150), min_size=1, max_size=5))
def test_format_then_read_is_identity(strings):
    d = Dataset.from_strings(strings, DNA)
    assert read_fasta_lines(format_fasta(d).splitlines(), DNA) == d


def test_write_and_read_file(tmp_path):
    d = Dataset.from_strings(["ACGT", "CGGT", "CGTC"], DNA)
    path = tmp_path / "example.fasta"
    write_fasta(d, str(path))
    assert read_fasta(str(path), DNA) == d


def test_generate_is_deterministic():
    spec = GeneratorSpec(10, 100, DNA, seed=1, replicates=3)
    first = generate(spec)
    second = generate(spec)
    assert [format_fasta(d) for d in first] == [format_fasta(d) for d in second]
    assert len(first) == 3
    assert all(d.size == 10 and d.max_length == 100 for d in first)
    assert first[0] != first[1]


def test_generate_single_symbol():
    d = generate(GeneratorSpec(3, 5, Alphabet("A"), seed=2))[0]
    assert d.strings == ["AAAAA"] * 3


def test_generator_rejects_empty_spec():
    with pytest.raises(ValueError):
        GeneratorSpec(0, 10, DNA, seed=1)


def test_write_replicates(tmp_path):
    datasets = generate(GeneratorSpec(2, 4, DNA, seed=5, replicates=2))
    paths = write_replicates(datasets, str(tmp_path / "data"))
    assert [path.split("/")[-1] for path in paths] == ["1.fasta", "2.fasta"]
    assert read_fasta(paths[1], DNA) == datasets[1]
