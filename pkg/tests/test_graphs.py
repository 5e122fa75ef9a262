import pytest

from antiramsey.embeddings import is_isomorphic
from antiramsey.graphs import (CATALOG_TAGS, SmallGraph, complete, contains_subgraph, cycle_length,
                               cyclomatic, degree_sequence, minus_edge_family, parse_literal,
                               path, resolve, to_literal)


@pytest.mark.parametrize("tag, order, size, degrees", [
    ("bull", 5, 5, (1, 1, 2, 3, 3)),
    ("diamond", 4, 5, (2, 2, 3, 3)),
    ("house", 5, 6, (2, 2, 2, 3, 3)),
    ("C4+", 5, 5, (1, 2, 2, 2, 3)),
    ("K2,3", 5, 6, (2, 2, 2, 3, 3)),
    ("K2,4", 6, 8, (2, 2, 2, 2, 4, 4)),
    ("K1,3+e", 4, 4, (1, 2, 2, 3)),
    ("Z2", 5, 5, (1, 2, 2, 2, 3)),
    ("W5", 6, 10, (3, 3, 3, 3, 3, 5)),
    ("TC5", 5, 7, (2, 2, 3, 3, 4)),
    ("K4", 4, 6, (3, 3, 3, 3)),
    ("P5", 5, 4, (1, 1, 2, 2, 2)),
])
def test_catalog_shapes(tag, order, size, degrees):
    g = resolve(tag)
    assert (g.order, g.size, degree_sequence(g)) == (order, size, degrees)


def test_bull_frozen_labeling():
    assert to_literal(resolve("bull")) == "5:0-1,0-2,1-2,1-3,2-4"


def test_k3_is_c3():
    assert resolve("K3") == resolve("C3")


def test_house_is_complement_of_p5():
    assert is_isomorphic(resolve("house"), path(5).complement())


@pytest.mark.parametrize("spelling", ["K_{2,3}", "K2,3", "k_2,3"])
def test_tag_spellings(spelling):
    assert resolve(spelling) == resolve("K2,3")


def test_pendant_spellings():
    assert resolve("C_4^+") == resolve("C4+") == resolve("C4_plus")


@pytest.mark.parametrize("bad", ["petersen", "C2", "K99", "C16+"])
def test_resolve_rejects(bad):
    with pytest.raises(ValueError):
        resolve(bad)


def test_order_cap():
    with pytest.raises(ValueError):
        SmallGraph(17, (0,) * 17)


def test_asymmetric_adjacency_rejected():
    with pytest.raises(ValueError):
        SmallGraph(2, (0b10, 0))


def test_literal_round_trip_and_short_form():
    g = resolve("house")
    assert parse_literal(to_literal(g)) == g
    assert parse_literal("5:01,02,12,13,24") == resolve("bull")
    assert resolve("5:0-1,0-2,1-2,1-3,2-4") == resolve("bull")


def test_literal_errors():
    with pytest.raises(ValueError):
        parse_literal("x:0-1")
    with pytest.raises(ValueError):
        parse_literal("12:012")
    with pytest.raises(ValueError):
        parse_literal("3:0-1,1-0")


# hand counts of |E| - |V| + components
CYCLOMATIC = {"bull": 1, "diamond": 2, "house": 2, "K2,3": 2, "K2,4": 3, "C3": 1, "C4": 1, "C5": 1,
              "C6": 1, "C3+": 1, "C4+": 1, "C5+": 1, "P3": 0, "P4": 0, "P5": 0, "K2": 0, "K3": 1,
              "K4": 3, "K5": 6, "K1,3": 0, "K1,4": 0, "K1,3+e": 1, "Z2": 1, "W5": 5, "TC5": 3}


@pytest.mark.parametrize("tag", CATALOG_TAGS)
def test_cyclomatic_catalog(tag):
    g = resolve(tag)
    assert cyclomatic(g) == CYCLOMATIC[tag] == g.size - g.order + len(g.components())


def test_cyclomatic_disconnected():
    g = SmallGraph.from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert cyclomatic(g) == 2


def _count_cycles(g):
    # each cycle counted once: start at its smallest vertex, fix orientation
    found = set()

    def walk(start, v, seen, trail):
        for u in range(g.order):
            if not g.has_edge(v, u):
                continue
            if u == start and len(trail) >= 3:
                found.add(frozenset(frozenset(e) for e in zip(trail, trail[1:] + [start])))
            elif u > start and u not in seen:
                walk(start, u, seen | {u}, trail + [u])

    for s in range(g.order):
        walk(s, s, {s}, [s])
    return len(found)


@pytest.mark.parametrize("tag", [t for t in CATALOG_TAGS if CYCLOMATIC[t] == 1])
def test_unicyclic_have_one_cycle(tag):
    g = resolve(tag)
    assert _count_cycles(g) == 1
    assert cycle_length(g) is not None


def test_minus_edge_family_diamond():
    fam = minus_edge_family(resolve("diamond"))
    assert len(fam) == 2
    want = [resolve("K1,3+e"), resolve("C4")]
    assert all(any(is_isomorphic(m, w) for m in fam) for w in want)


def test_minus_edge_family_house():
    fam = minus_edge_family(resolve("house"))
    assert len(fam) == 4
    want = [resolve(t) for t in ("C5", "C4+", "bull", "Z2")]
    assert all(any(is_isomorphic(m, w) for m in fam) for w in want)


def test_minus_edge_family_triangle_keeps_order():
    fam = minus_edge_family(resolve("C3"))
    (member,) = fam.members
    assert member.order == 3 and is_isomorphic(member, resolve("P3"))


@pytest.mark.parametrize("tag", CATALOG_TAGS)
def test_minus_edge_family_sizes(tag):
    h = resolve(tag)
    fam = minus_edge_family(h)
    assert 1 <= len(fam) <= h.size
    assert all(m.size == h.size - 1 for m in fam)


def test_minus_edge_family_edgeless():
    with pytest.raises(ValueError):
        minus_edge_family(SmallGraph(3, (0, 0, 0)))


def test_contains_examples():
    assert contains_subgraph(complete(4), resolve("diamond"))
    assert not contains_subgraph(resolve("C5"), resolve("C3"))
    assert contains_subgraph(resolve("K2,3"), resolve("C4"))


def test_isolated_vertices_need_room():
    k2_k1 = SmallGraph.from_edges(3, [(0, 1)])
    assert contains_subgraph(SmallGraph.from_edges(3, [(0, 1)]), k2_k1)
    assert not contains_subgraph(SmallGraph.from_edges(2, [(0, 1)]), k2_k1)


@pytest.mark.parametrize("tag", CATALOG_TAGS)
def test_contains_reflexive(tag):
    g = resolve(tag)
    assert contains_subgraph(g, g)


@pytest.mark.parametrize("tag", ["bull", "diamond", "C4", "P4"])
def test_contains_monotone_under_edge_addition(tag):
    h = resolve(tag)
    g = resolve("C6")
    before = contains_subgraph(g, h)
    for i, j in [(0, 2), (0, 3), (1, 4)]:
        adj = list(g.adj)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        g2 = SmallGraph(g.order, tuple(adj))
        after = contains_subgraph(g2, h)
        assert after or not before
        g, before = g2, after
