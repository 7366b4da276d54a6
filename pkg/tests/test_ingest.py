import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from asdegree import (
    ConsistencyError,
    DegreeSequence,
    EdgeList,
    ParseError,
    clean,
    degree_histogram,
    degree_sequence,
    parse_edge_list,
    read_edge_list,
    summarize,
    write_edge_list,
)
from asdegree.table1 import TABLE1, fixture_degree_sequence


def test_parse_simple():
    el = parse_edge_list("1 2\n2 3\n")
    assert el.edges == [(1, 2), (2, 3)]
    assert el.lines == [1, 2]


def test_parse_keeps_loops_and_skips_comments():
    el = parse_edge_list("# header\n5 5\n\n5 6   extra tokens\n")
    assert el.edges == [(5, 5), (5, 6)]
    assert el.lines == [2, 4]


@pytest.mark.parametrize("text, lineno", [("a b\n", 1), ("1 2\n3\n", 2), ("1 2\n# c\n4 x\n", 3), ("-1 2\n", 1)])
def test_parse_errors(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.lineno == lineno


def test_read_edge_list_names_file(tmp_path):
    path = tmp_path / "as.txt"
    path.write_text("1 2\nfoo bar\n")
    with pytest.raises(ParseError) as exc:
        read_edge_list(path)
    assert str(path) in str(exc.value) and ":2:" in str(exc.value)
    with pytest.raises(OSError):
        read_edge_list(tmp_path / "missing.txt")


def test_write_then_read(tmp_path):
    path = tmp_path / "g.txt"
    with open(path, "w") as fh:
        write_edge_list([(1, 2), (3, 4)], fh, header="made for a test")
    assert read_edge_list(path).edges == [(1, 2), (3, 4)]


def test_clean_collapses():
    out = clean(EdgeList([(5, 5), (5, 6), (6, 5), (5, 6)]))
    assert out.edges == [(5, 6)]
    assert out.meta == {"raw_edges": 4, "self_loops_removed": 1, "duplicates_removed": 2}
    assert clean([]).edges == []


def test_clean_against_set_oracle():
    rng = random.Random(7)
    pairs = [(rng.randrange(200), rng.randrange(200)) for _ in range(1000)]
    pairs += pairs[:150] + [(v, u) for u, v in pairs[150:300]]
    oracle = {frozenset(p) for p in pairs if p[0] != p[1]}
    out = clean(pairs)
    assert len(out) == len(oracle)
    assert {frozenset(p) for p in out} == oracle
    assert all(u < v for u, v in out)
    assert out.edges == sorted(out.edges)


edge_lists = st.lists(st.tuples(st.integers(0, 40), st.integers(0, 40)), max_size=200)


@settings(max_examples=100, deadline=None)
@given(edge_lists, st.randoms())
def test_clean_idempotent_and_order_insensitive(pairs, rnd):
    once = clean(pairs)
    assert clean(once).edges == once.edges
    shuffled = [(v, u) if rnd.random() < 0.5 else (u, v) for u, v in pairs]
    rnd.shuffle(shuffled)
    assert clean(shuffled).edges == once.edges


@settings(max_examples=100, deadline=None)
@given(edge_lists)
def test_handshake(pairs):
    cleaned = clean(pairs)
    seq = degree_sequence(cleaned)
    assert int(seq.degrees.sum()) == 2 * len(cleaned)
    assert np.all(seq.degrees >= 1)


def test_degree_sequence_examples():
    assert degree_sequence([(1, 2), (2, 3)]).as_dict() == {1: 1, 2: 2, 3: 1}
    c = 9
    star = degree_sequence([(0, i) for i in range(1, c + 1)]).as_dict()
    assert star[0] == c and all(star[i] == 1 for i in range(1, c + 1))
    assert len(degree_sequence([])) == 0


def test_degree_sequence_incidence_oracle():
    from asdegree.synth import configuration_model, sample_degrees
    from asdegree import BoundedPowerLaw

    seq = sample_degrees(BoundedPowerLaw(2.25, 1, 200), 2000, 3)
    edges = clean(configuration_model(seq, 3))
    incidence = {}
    for u, v in edges:
        for node in (u, v):
            incidence[node] = incidence.get(node, 0) + 1
    assert degree_sequence(edges).as_dict() == incidence


def test_node_ids_preserved():
    seq = degree_sequence([(65001, 3356), (3356, 174)])
    assert list(seq.nodes) == [174, 3356, 65001]


def test_summarize():
    s = summarize(degree_sequence([(1, 2)]), 1)
    assert (s.n, s.m, s.avg_degree0, s.k_min0, s.k_max0) == (2, 1, 1.0, 1, 1)
    with pytest.raises(ConsistencyError):
        summarize(degree_sequence([(1, 2)]), 2)


@pytest.mark.parametrize("name, expected", [("AS1", 4.18), ("AS2", 4.01)])
def test_summarize_table1_rows(name, expected):
    row = next(r for r in TABLE1 if r.name == name)
    seq = fixture_degree_sequence(row)
    s = summarize(seq, row.m)
    assert (s.n, s.m, s.k_min0, s.k_max0) == (row.n, row.m, row.k_min0, row.k_max0)
    assert round(s.avg_degree0, 2) == expected


def test_degree_histogram():
    seq = degree_sequence([(1, 2), (2, 3)])
    assert degree_histogram(seq) == {1: 2, 2: 1}
    assert degree_histogram([]) == {}
    rng = np.random.default_rng(0)
    degrees = rng.integers(1, 30, size=5000)
    oracle = {}
    for k in sorted(degrees.tolist()):
        oracle[k] = oracle.get(k, 0) + 1
    hist = degree_histogram(DegreeSequence(degrees))
    assert hist == oracle
    assert sum(hist.values()) == 5000
