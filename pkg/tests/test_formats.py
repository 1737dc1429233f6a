import pytest

from dispbook.book import CyclicOrder, PageColoring
from dispbook.corpus import build_corpus
from dispbook.dispersable import embed_dispersable
from dispbook.errors import EmbeddingMismatch, LoopRejected, ParseError
from dispbook.formats import read_embedding, read_mel, write_embedding, write_mel

from graphs import DOUBLED_C4, THETA

THETA_MEL = "2 3\n0 1\n0 1\n0 1\n"


def test_theta_mel():
    assert write_mel(THETA) == THETA_MEL
    assert read_mel(THETA_MEL) == THETA


def test_comments_and_blank_lines():
    assert read_mel("# theta\n\n2 3\n0 1\n# middle\n0 1\n0 1\n") == THETA


def test_doubled_c4_round_trip():
    text = write_mel(DOUBLED_C4)
    assert read_mel(text) == DOUBLED_C4
    assert write_mel(read_mel(text)) == text


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("2\n", 1),
        ("2 3\n0 1\n0 1\n", 4),
        ("2 1\n0 x\n", 2),
        ("2 1\n0 5\n", 2),
        ("2 1\n0 1\n1 0\n", 3),
        ("2 1\n-1 0\n", 2),
    ],
)
def test_mel_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        read_mel(text)
    assert info.value.line == line


def test_mel_loop():
    with pytest.raises(LoopRejected):
        read_mel("2 1\n1 1\n")


def test_theta_embedding_round_trip():
    order, coloring = CyclicOrder((0, 1)), PageColoring((0, 1, 2))
    text = write_embedding(THETA, order, coloring)
    assert text == "order: 0 1\npage 0: 0-1\npage 1: 0-1#1\npage 2: 0-1#2\n"
    assert read_embedding(text, THETA) == (order, coloring)


def test_corpus_embedding_round_trips():
    for entry in build_corpus(30, seed=3):
        g = entry.graph
        order, coloring, _ = embed_dispersable(g)
        text = write_embedding(g, order, coloring)
        assert read_embedding(text, g) == (order, coloring)
        assert write_embedding(g, *read_embedding(text, g)) == text
        assert write_mel(read_mel(write_mel(g))) == write_mel(g)


def test_unlisted_edges_are_uncolored():
    order, coloring = read_embedding("order: 1 0\npage 0: 0-1\n", THETA)
    assert coloring.pages == (0, None, None)
    assert order.sequence == (1, 0)


@pytest.mark.parametrize(
    "text",
    [
        "order: 0\npage 0: 0-1\n",
        "order: 0 1\npage 0: 0-1#3\n",
        "order: 0 1\npage 0: 0-1 0-1\n",
        "order: 0 1\npage 0: 0-7\n",
    ],
)
def test_embedding_mismatch(text):
    with pytest.raises(EmbeddingMismatch):
        read_embedding(text, THETA)


@pytest.mark.parametrize("text", ["page 0: 0-1\n", "order: 0 1\nleaf 0: 0-1\n", "order: 0 1\npage 0: 0_1\n"])
def test_embedding_parse_error(text):
    with pytest.raises(ParseError):
        read_embedding(text, THETA)
