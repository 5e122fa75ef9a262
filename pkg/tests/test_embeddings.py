import random
from itertools import permutations

import pytest

from antiramsey.embeddings import (automorphism_count, canonical_code, canonical_form,
                                   canonical_labeling, edge_index, edge_pairs, enumerate_copies,
                                   expected_copy_count, is_isomorphic, num_edges)
from antiramsey.graphs import SmallGraph, resolve

import oracles

# automorphism group orders, brute force over all vertex permutations
AUT = {"C3": 6, "C4": 8, "P3": 2, "bull": 2, "diamond": 4, "K1,3": 6, "C3+": 2, "K4": 24,
       "house": 2, "K2,3": 12, "C5": 10, "P4": 2}


def test_edge_index_colex():
    assert [edge_index(i, j) for i, j in edge_pairs(4)] == list(range(6))
    assert edge_pairs(3) == ((0, 1), (0, 2), (1, 2))
    assert edge_index(2, 0) == edge_index(0, 2) == 1
    # the first C(m, 2) edges span K_m
    assert {v for e in edge_pairs(6)[:num_edges(4)] for v in e} == set(range(4))


def test_edge_index_rejects_loop():
    with pytest.raises(ValueError):
        edge_index(3, 3)


@pytest.mark.parametrize("tag", sorted(AUT))
def test_automorphism_counts(tag):
    g = resolve(tag)
    assert oracles.aut_count(g.order, g.edges()) == AUT[tag]
    assert automorphism_count(g) == AUT[tag]


@pytest.mark.parametrize("tag", sorted(AUT))
def test_copy_table_matches_naive(tag):
    g = resolve(tag)
    for n in range(g.order, 7):
        table = enumerate_copies(n, g)
        naive = oracles.naive_copies(n, g.order, g.edges())
        got = {frozenset(frozenset(e) for e in table.edge_list(c)) for c in table.copies}
        assert got == naive
        assert len(table) == len(naive) == expected_copy_count(n, g)


@pytest.mark.parametrize("n, tag, count", [(5, "C3", 10), (7, "bull", 1260), (6, "K2,3", 60)])
def test_copy_counts(n, tag, count):
    assert len(enumerate_copies(n, resolve(tag))) == count


def test_copy_table_sorted_and_readonly():
    table = enumerate_copies(6, resolve("bull"))
    rows = [tuple(r) for r in table.edges.tolist()]
    assert rows == sorted(rows)
    assert all(list(r) == sorted(r) for r in rows)
    with pytest.raises(ValueError):
        table.edges[0, 0] = 0


def test_copy_table_errors():
    with pytest.raises(ValueError):
        enumerate_copies(4, resolve("bull"))
    with pytest.raises(ValueError):
        enumerate_copies(13, resolve("C3"))


def _random_graph(rng, n, p=0.5):
    return SmallGraph.from_edges(n, [e for e in edge_pairs(n) if rng.random() < p])


def _permuted(g, perm):
    return SmallGraph.from_edges(g.order, [(perm[i], perm[j]) for i, j in g.edges()])


def test_canonical_code_matches_brute_force_classes():
    # two graphs share a canonical code exactly when their brute-force minimal codes agree
    rng = random.Random(7)
    graphs = [_random_graph(rng, 6, rng.choice([0.3, 0.5, 0.7])) for _ in range(80)]
    ours = [canonical_code(g) for g in graphs]
    brute = [oracles.min_code(6, g.edges()) for g in graphs]
    for a in range(len(graphs)):
        for b in range(a + 1, len(graphs)):
            assert (ours[a] == ours[b]) == (brute[a] == brute[b])


def test_canonical_code_invariant_under_relabeling():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(4, 9)
        g = _random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = _permuted(g, perm)
        assert canonical_code(g) == canonical_code(h)
        assert canonical_form(g) == canonical_form(h)


def test_canonical_labeling_is_a_permutation():
    g = resolve("house")
    lab, code, gens = canonical_labeling(g)
    assert sorted(lab) == list(range(5))
    for gen in gens:
        assert _permuted(g, gen) == g


def test_regular_graphs_distinguished():
    # K3,3 and the triangular prism: both 3-regular on 6 vertices
    k33 = SmallGraph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
    prism = SmallGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert not is_isomorphic(k33, prism)
    assert is_isomorphic(k33, _permuted(k33, [5, 0, 4, 1, 3, 2]))


def test_colored_codes_respect_colors():
    g = resolve("C4")
    # adjacent marked pairs are all alike, and differ from opposite pairs
    assert canonical_code(g, [1, 1, 0, 0]) == canonical_code(g, [0, 1, 1, 0])
    assert canonical_code(g, [1, 1, 0, 0]) != canonical_code(g, [1, 0, 1, 0])
    # a marked vertex on C4 is equivalent to any other marked vertex
    codes = {canonical_code(g, [int(v == u) for v in range(4)]) for u in range(4)}
    assert len(codes) == 1
    # on the bull, the pendant and the degree-two vertex marks differ
    b = resolve("bull")
    marks = {canonical_code(b, [int(v == u) for v in range(5)]) for u in range(5)}
    assert len(marks) == 3


def test_automorphism_count_vs_brute_on_random_graphs():
    rng = random.Random(3)
    for _ in range(25):
        g = _random_graph(rng, 6, rng.choice([0.3, 0.6]))
        assert automorphism_count(g) == oracles.aut_count(6, g.edges())


def test_small_permutation_check():
    # every relabeling of the diamond is isomorphic to it
    d = resolve("diamond")
    assert all(is_isomorphic(d, _permuted(d, p)) for p in permutations(range(4)))
