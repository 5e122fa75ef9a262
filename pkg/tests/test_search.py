import pytest

from antiramsey.coloring import find_rainbow_copy
from antiramsey.embeddings import enumerate_copies, is_isomorphic
from antiramsey.formulas import sandwich_bounds
from antiramsey.graphs import contains_subgraph, family, minus_edge_family, resolve
from antiramsey.search import (EXACT, LOWER_BOUND_ONLY, SearchConfig, SearchTimeout,
                               decide_colorable, f_exact, rb_exact, reduce_colors, turan_exact)

import oracles

ONE = SearchConfig(timeout=120, worker_count=1)

# maximum rainbow-free color counts, from brute force over every edge partition of K_n
BRUTE_F = {
    4: {"C3": 3, "C4": 4, "P3": 1, "diamond": 4, "K1,3": 3, "C3+": 3, "K4": 5, "P4": 3},
    5: {"C3": 4, "C4": 5, "P3": 1, "bull": 5, "diamond": 6, "K1,3": 3, "C3+": 4, "K4": 7,
        "house": 7, "K2,3": 7, "C5": 7, "P4": 2},
}
# ext(n, {C3, C4}) and ext(n, {K1,3+e, C4}) from all 2^C(n,2) graphs
BRUTE_EXT = {("C3", "C4"): {3: 2, 4: 3, 5: 5, 6: 6}, ("K1,3+e", "C4"): {3: 3, 4: 3, 5: 5, 6: 6}}


@pytest.mark.parametrize("n, tag", [(n, t) for n in BRUTE_F for t in BRUTE_F[n]])
def test_f_exact_matches_brute_force(n, tag):
    out = f_exact(n, resolve(tag), ONE)
    assert out.status == EXACT
    assert out.value == BRUTE_F[n][tag]
    assert out.witness.color_count == out.value
    assert find_rainbow_copy(out.witness, enumerate_copies(n, resolve(tag))) is None


def test_brute_force_oracle_spot_check():
    # keeps the frozen table honest on the cheapest entries
    for tag in ("C3", "P4", "diamond"):
        g = resolve(tag)
        assert oracles.brute_f(4, g.order, g.edges()) == BRUTE_F[4][tag]


@pytest.mark.parametrize("members", sorted(BRUTE_EXT))
def test_turan_matches_brute_force(members):
    fam = family(*members)
    for n, want in BRUTE_EXT[members].items():
        out = turan_exact(n, fam)
        assert out.exact and out.value == want
        assert out.witness.order == n and out.witness.size == want
        assert fam.is_free(out.witness)


def test_turan_oracle_spot_check():
    got = oracles.brute_ext(5, [(3, [(0, 1), (1, 2), (0, 2)]), (4, [(0, 1), (1, 2), (2, 3), (0, 3)])])
    assert got == BRUTE_EXT[("C3", "C4")][5]


def test_turan_without_applicable_members():
    out = turan_exact(3, family("C4"))
    assert out.value == 3 and out.exact


def test_rb_is_f_plus_one():
    out = rb_exact(5, resolve("bull"), ONE)
    assert out.kind == "rb" and out.rb == 6 and out.value == 5


def test_single_edge_convention():
    out = f_exact(5, resolve("K2"), ONE)
    assert out.value == 1 and out.rb == 2


def test_target_too_large():
    with pytest.raises(ValueError):
        f_exact(4, resolve("bull"), ONE)


@pytest.mark.parametrize("n, tag", [(5, "bull"), (5, "diamond"), (6, "C4")])
def test_decide_monotone(n, tag):
    h = resolve(tag)
    f = f_exact(n, h, ONE).value
    for k in range(1, f + 3):
        c = decide_colorable(n, h, k, ONE)
        assert (c is not None) == (k <= f)
        if c is not None:
            assert c.color_count == k
            assert find_rainbow_copy(c, enumerate_copies(n, h)) is None
            # merging classes never creates a rainbow copy
            assert find_rainbow_copy(reduce_colors(c, max(1, k - 2)), enumerate_copies(n, h)) is None


def test_decide_examples():
    assert decide_colorable(4, resolve("C3"), 4, ONE) is None
    assert decide_colorable(4, resolve("C3"), 3, ONE).color_count == 3
    assert decide_colorable(5, resolve("bull"), 5, ONE) is not None
    assert decide_colorable(5, resolve("bull"), 6, ONE) is None


@pytest.mark.parametrize("n, tag, k", [(6, "diamond", 7), (5, "house", 7), (6, "bull", 7)])
def test_determinism_across_worker_counts(n, tag, k):
    h = resolve(tag)
    a = decide_colorable(n, h, k, SearchConfig(timeout=120, worker_count=1))
    b = decide_colorable(n, h, k, SearchConfig(timeout=120, worker_count=4))
    c = decide_colorable(n, h, k, SearchConfig(timeout=120, worker_count=4, split_depth=4))
    assert a == b == c
    assert a is not None


def test_symmetry_modes_agree():
    h = resolve("diamond")
    values = {mode: f_exact(5, h, SearchConfig(timeout=120, worker_count=1, symmetry=mode)).value
              for mode in ("none", "transpositions", "full", "auto")}
    assert set(values.values()) == {6}


def test_node_limit_raises_timeout():
    cfg = SearchConfig(timeout=120, worker_count=1, node_limit=5)
    with pytest.raises(SearchTimeout):
        decide_colorable(6, resolve("diamond"), 8, cfg)


def test_zero_timeout_gives_lower_bound():
    out = f_exact(6, resolve("diamond"), SearchConfig(timeout=0.0, worker_count=1))
    assert out.status == LOWER_BOUND_ONLY
    assert out.value >= 7  # the seed construction is still reported
    assert find_rainbow_copy(out.witness, enumerate_copies(6, resolve("diamond"))) is None


def test_bad_config():
    with pytest.raises(ValueError):
        SearchConfig(worker_count=0)
    with pytest.raises(ValueError):
        SearchConfig(symmetry="some")


# -- invariants relating the two searches ------------------------------------

SANDWICH = [(4, "diamond"), (5, "diamond"), (6, "diamond"), (5, "bull"), (6, "bull"),
            (5, "house"), (6, "house"), (5, "K2,3"), (6, "K2,3"), (5, "C4"), (6, "C4"),
            (4, "C3"), (5, "C3"), (6, "C3")]


@pytest.mark.parametrize("n, tag", SANDWICH)
def test_turan_sandwich(n, tag):
    h = resolve(tag)
    f = f_exact(n, h, ONE).value
    ext_fam = turan_exact(n, minus_edge_family(h)).value
    ext_h = turan_exact(n, family(tag)).value
    b = sandwich_bounds(n, h, ext_fam, ext_h)
    assert b.consistent
    assert b.lower <= f + 1 <= b.upper


MONOTONE_PAIRS = [("C3", "diamond"), ("C4", "diamond"), ("C4", "K2,3"), ("C4", "house"),
                  ("C3", "bull"), ("C3", "house"), ("P3", "C3"), ("C3", "C3+")]


@pytest.mark.parametrize("n", [5, 6])
@pytest.mark.parametrize("small, big", MONOTONE_PAIRS)
def test_subgraph_monotonicity(n, small, big):
    # a coloring with no rainbow H has no rainbow supergraph of H either
    assert contains_subgraph(resolve(big), resolve(small))
    assert f_exact(n, resolve(small), ONE).value <= f_exact(n, resolve(big), ONE).value


def test_turan_witness_is_canonical():
    a = turan_exact(7, family("C3", "C4"))
    b = turan_exact(7, family("C4", "C3"))
    assert a.witness == b.witness
    assert is_isomorphic(a.witness, b.witness)
