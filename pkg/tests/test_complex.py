import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roundtwin.complex import (
    Cell,
    CellParseError,
    DomainError,
    SpaceSpec,
    VertexLink,
    build_complex,
    cell_count_oracle,
    cofaces,
    enumerate_cells,
    euler_characteristic,
    expected_cell_count,
    faces,
    format_cell,
    is_flag,
    parse_cell,
    vertex_link,
)


def brute_force_sequences(m, k):
    """Merge k disjoint adjacent positions of every ordering of 1..m."""
    out = set()
    for perm in itertools.permutations(range(1, m + 1)):
        for starts in itertools.combinations(range(m - 1), k):
            if any(b - a < 2 for a, b in zip(starts, starts[1:])):
                continue
            blocks, i = [], 0
            while i < m:
                if i in starts:
                    blocks.append(tuple(sorted(perm[i:i + 2])))
                    i += 2
                else:
                    blocks.append((perm[i],))
                    i += 1
            out.add(tuple(blocks))
    return out


@pytest.mark.parametrize("m,k", [(m, k) for m in range(0, 7) for k in range(0, 4)])
def test_count_oracle_matches_brute_force(m, k):
    assert cell_count_oracle(m, k) == len(brute_force_sequences(m, k))


def test_count_oracle_examples():
    assert cell_count_oracle(4, 1) == 36
    assert cell_count_oracle(6, 3) == 90
    assert all(cell_count_oracle(m, 0) == [1, 1, 2, 6, 24, 120, 720][m] for m in range(7))
    assert 5 * cell_count_oracle(4, 1) + cell_count_oracle(5, 2) == 270


@pytest.mark.parametrize("kind", ["round", "line"])
@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_oracle(kind, n):
    space = SpaceSpec(kind, n)
    for k in range(5):
        assert len(enumerate_cells(space, k)) == expected_cell_count(space, k)


@pytest.mark.parametrize("n,counts", [
    (2, (1, 1)), (3, (2, 3)), (4, (6, 12, 3)), (5, (24, 60, 30)), (6, (120, 360, 270, 30)),
])
def test_round_counts(n, counts):
    assert build_complex(SpaceSpec.round(n)).counts == counts


def test_small_cell_lists():
    assert [str(c) for c in enumerate_cells(SpaceSpec.round(2), 0)] == ["12"]
    assert {str(c) for c in enumerate_cells(SpaceSpec.round(3), 1)} == {"(12)3", "1(23)", "2(13)"}
    q4_edges = "(12)34 1(23)4 12(34) (23)14 23(14) 3(12)4 31(24) 2(13)4 21(34) (13)24 13(24) 32(14)"
    assert {str(c) for c in enumerate_cells(SpaceSpec.round(4), 1)} == set(q4_edges.split())
    assert len(enumerate_cells(SpaceSpec.line(3), 0)) == 6


def test_canonical_order():
    cells = enumerate_cells(SpaceSpec.round(5), 1)
    assert cells == sorted(cells, key=lambda c: [(b[0], b[-1]) for b in c.blocks])


def test_invalid_space():
    with pytest.raises(DomainError):
        SpaceSpec.round(0)
    with pytest.raises(DomainError):
        enumerate_cells(SpaceSpec.line(3), -1)


def test_cell_invariants():
    space = SpaceSpec.round(3)
    with pytest.raises(DomainError):
        Cell(space, ((3,), (1, 2)))
    with pytest.raises(DomainError):
        Cell(space, ((1, 2, 3),))
    with pytest.raises(DomainError):
        Cell(space, ((2, 1), (3,)))


def test_faces_of_edge():
    assert {str(f) for f, _, _ in faces(parse_cell("(12)3"))} == {"123", "213"}


def test_faces_of_square():
    got = [(str(f), t, d) for f, t, d in faces(parse_cell("2(13)5(46)"))]
    assert got == [("2135(46)", 0, 0), ("2315(46)", 0, 1), ("42(13)56", 1, 0), ("2(13)546", 1, 1)]


def test_vertex_in_iterated_boundary():
    layer = {parse_cell("(12)(34)(56)")}
    for _ in range(3):
        layer = {f for c in layer for f, _, _ in faces(c)}
    assert parse_cell("123456") in layer


def test_zero_cell_has_no_faces():
    assert faces(parse_cell("123")) == []


def test_cofaces_examples():
    got = {str(c) for c in cofaces(parse_cell("(12)3456"))}
    assert got == {"(12)(34)56", "(12)3(45)6", "(12)34(56)"}
    top = {str(c) for c in cofaces(parse_cell("123456"), 3) if c.dim == 3}
    assert top == {"(12)(34)(56)", "(23)(45)(16)"}
    for v in enumerate_cells(SpaceSpec.round(6), 0):
        assert len(cofaces(v)) == 6


@pytest.mark.parametrize("kind", ["round", "line"])
@pytest.mark.parametrize("n", range(1, 7))
def test_face_coface_duality(kind, n):
    cx = build_complex(SpaceSpec(kind, n))
    down = {(f, c) for c in cx.ordered for f, _, _ in faces(c)}
    up = {(c, x) for c in cx.ordered for x in cofaces(c)}
    assert down == up


def test_incidence_facts_q6():
    cx = build_complex(SpaceSpec.round(6))
    assert all(sum(c.dim == 3 for c in cofaces(v, 3)) == 2 for v in cx.cells[0])
    assert all(len(cofaces(e)) == 3 for e in cx.cells[1])
    assert Counter(len(cofaces(f)) for f in cx.cells[2]) == {1: 180, 0: 90}


def test_parse_examples():
    c = parse_cell("2(13)5(46)")
    assert c.blocks == ((2,), (1, 3), (5,), (4, 6))
    assert c.space == SpaceSpec.round(6) and c.dim == 2
    assert parse_cell("12") == enumerate_cells(SpaceSpec.round(2), 0)[0]
    assert str(parse_cell("2 (3 1) 5 (4 6)")) == "2(13)5(46)"
    assert format_cell(parse_cell("(31)2", kind="line")) == "(13)2"


@pytest.mark.parametrize("text,fragment", [
    ("(99)1", "repeated label 9"),
    ("1(23", "position 1"),
    ("(123)", "position 0"),
    ("13", "missing label 2"),
    ("3(12)", "must contain 3"),
    ("", "empty"),
    ("1x2", "position 1"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(CellParseError, match=fragment):
        parse_cell(text)


def test_general_grammar_for_large_n():
    blocks = ((1,),) + tuple((i, i + 1) for i in range(2, 10, 2)) + ((10,), (11,))
    c = Cell(SpaceSpec.round(11), blocks)
    text = format_cell(c)
    assert text == "1 (2 3) (4 5) (6 7) (8 9) 10 11"
    assert parse_cell(text) == c


@pytest.mark.parametrize("kind", ["round", "line"])
@pytest.mark.parametrize("n", range(1, 8))
def test_format_parse_roundtrip(kind, n):
    space = SpaceSpec(kind, n)
    for k in range(n // 2 + 1):
        for c in enumerate_cells(space, k):
            assert parse_cell(format_cell(c), kind=kind) == c


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(1, 7))), st.lists(st.booleans(), min_size=6, max_size=6))
def test_parse_canonicalises_pair_order(labels, grouping):
    items, canonical, pos = [], [], 0
    while pos < len(labels):
        if pos + 1 < len(labels) and grouping[pos]:
            a, b = labels[pos], labels[pos + 1]
            items.append(f"({b}{a})")
            canonical.append(f"({min(a, b)}{max(a, b)})")
            pos += 2
        else:
            items.append(str(labels[pos]))
            canonical.append(str(labels[pos]))
            pos += 1
    c = parse_cell("".join(items) + "7")
    assert format_cell(c) == "".join(canonical) + "7"
    assert parse_cell(format_cell(c)) == c


@pytest.mark.parametrize("kind", ["round", "line"])
@pytest.mark.parametrize("n", range(2, 7))
def test_all_links_flag(kind, n):
    for v in build_complex(SpaceSpec(kind, n)).cells[0]:
        assert is_flag(vertex_link(v))


def test_link_size_q6():
    link = vertex_link(parse_cell("123456"))
    assert len(link.vertices) == 6
    assert sum(len(s) == 3 for s in link.simplices) == 2


def test_link_q2_circle():
    link = vertex_link(parse_cell("12"))
    assert len(link.vertices) == 2 and is_flag(link)


def test_empty_triangle_is_not_flag():
    a, b, c = "abc"
    simplices = frozenset(map(frozenset, [{a}, {b}, {c}, {a, b}, {b, c}, {a, c}]))
    assert not is_flag(VertexLink(frozenset("abc"), simplices))
    assert is_flag(VertexLink(frozenset("abc"), simplices | {frozenset("abc")}))


def test_vertex_link_needs_vertex():
    with pytest.raises(DomainError):
        vertex_link(parse_cell("(12)3"))


@pytest.mark.parametrize("n,chi", [(2, 0), (5, -6), (6, 0)])
def test_euler(n, chi):
    assert euler_characteristic(build_complex(SpaceSpec.round(n))) == chi


def test_complex_json_deterministic():
    a = build_complex(SpaceSpec.round(5)).to_json()
    b = build_complex(SpaceSpec.round(5)).to_json()
    assert a == b
    assert [c["id"] for c in a["cells"]] == list(range(114))
    q2 = build_complex(SpaceSpec.round(2)).to_json()
    assert q2["boundary"] == [{"cell": 1, "faces": [{"cell": 0, "sign": -1}, {"cell": 0, "sign": 1}]}]
