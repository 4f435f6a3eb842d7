from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercolor import (
    Coloring,
    FeasibilityError,
    InvalidParameters,
    M_exact,
    build_hypergraph,
    complete,
    complete_profile,
    m_exact,
    properly_colored_count,
    random_hypergraph,
)
from hypercolor.hypergraph import balanced_sizes
from hypercolor.oracle import (
    FULL,
    REDUCED,
    brute_m,
    brute_max,
    brute_max_complete,
    brute_min_exactly,
    compositions,
    enumerate_colorings,
    gain_loss,
)

TRIANGLE = build_hypergraph(3, 2, [[0, 1], [0, 2], [1, 2]])


class TestEnumerate:
    def test_small(self):
        assert [c.assignment for c in enumerate_colorings(2, 2)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert len(list(enumerate_colorings(3, 2))) == 8
        assert [c.assignment for c in enumerate_colorings(1, 3)] == [(0,), (1,), (2,)]

    def test_cap_raises_eagerly(self):
        with pytest.raises(FeasibilityError):
            enumerate_colorings(30, 3)


class TestBruteMax:
    def test_k4(self):
        report = brute_max(complete(4, 2), 2, 2)
        assert report.best_value == 4
        assert report.witness.assignment == (0, 0, 1, 1)
        assert report.mode == FULL and report.search_space_size == 16

    def test_k6_rainbow(self):
        assert brute_max(complete(6, 3), 3, 3).best_value == 8

    def test_triangle(self):
        assert brute_max(TRIANGLE, 2, 2).best_value == 2

    def test_cap(self):
        with pytest.raises(FeasibilityError):
            brute_max(complete(12, 2), 3, 2, cap=1000)

    def test_witness_evaluates_to_best(self):
        for seed in range(10):
            H = random_hypergraph(6, 3, 8 + seed, seed)
            report = brute_max(H, 3, 2)
            assert properly_colored_count(H, report.witness, 2) == report.best_value

    def test_worker_count_does_not_change_report(self):
        H = random_hypergraph(7, 3, 14, seed=11)
        assert brute_max(H, 3, 2, workers=3) == brute_max(H, 3, 2)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6), st.permutations(range(6)))
    def test_relabeling_invariant(self, seed, perm):
        H = random_hypergraph(6, 3, 9, seed)
        moved = build_hypergraph(6, 3, [[perm[v] for v in e] for e in H.edges])
        assert brute_max(moved, 2, 2).best_value == brute_max(H, 2, 2).best_value


def test_compositions():
    comps = list(compositions(4, 3))
    assert len(comps) == comb(6, 2)
    assert comps == sorted(comps)
    assert all(sum(c) == 4 for c in comps)


class TestBruteMaxComplete:
    @pytest.mark.parametrize(
        "params, best, sizes",
        [((6, 3, 3, 3), 8, (2, 2, 2)), ((5, 2, 2, 2), 6, (3, 2)), ((4, 2, 2, 2), 4, (2, 2))],
    )
    def test_examples(self, params, best, sizes):
        report = brute_max_complete(*params)
        assert report.best_value == best
        assert report.sizes == sizes
        assert report.mode == REDUCED
        assert report.witness.sizes == sizes

    def test_search_space(self):
        assert brute_max_complete(6, 3, 3, 3).search_space_size == 28

    def test_agrees_with_full_enumeration(self):
        for r in (2, 3):
            for n in range(2, 8):
                for k in range(2, min(n, 4) + 1):
                    for p in range(2, min(r, k) + 1):
                        full = brute_max(complete(n, k), r, p).best_value
                        assert brute_max_complete(n, k, r, p).best_value == full

    def test_cap(self):
        with pytest.raises(FeasibilityError):
            brute_max_complete(40, 3, 6, 2, cap=1000)


class TestBruteM:
    @pytest.mark.parametrize("params, expected", [((6, 3, 3, 2), 12), ((4, 2, 2, 1), 2), ((6, 3, 3, 1), 0)])
    def test_examples(self, params, expected):
        assert brute_m(*params) == expected

    def test_needs_divisibility(self):
        with pytest.raises(InvalidParameters):
            brute_m(5, 2, 2, 1)


class TestBruteMinExactly:
    def test_examples(self):
        assert brute_min_exactly(4, 2, 2, 2) == 0
        assert brute_min_exactly(2, 2, 2, 1) == 0
        assert brute_min_exactly(1, 2, 2, 1) == 0

    def test_positive_minimum(self):
        # every 2-coloring of 5 vertices has a monochromatic pair: best split 3+2 leaves 3 + 1
        assert brute_min_exactly(5, 2, 2, 1) == 4


def gain_loss_by_coloring(sizes, k, t, a, b):
    """Independent route: compare at-most-t counts of the whole K_n^k before and after."""
    before = Coloring.from_sizes(sizes)
    moved = list(before.assignment)
    moved[moved.index(a)] = b
    after = Coloring(len(sizes), moved)
    H = complete(sum(sizes), k)
    g = l = 0
    for e in H.edges:
        x = len({before.assignment[v] for v in e})
        y = len({after.assignment[v] for v in e})
        g += x > t >= y
        l += x <= t < y
    return g, l


class TestGainLoss:
    @pytest.mark.parametrize(
        "sizes, k, t, a, b, expected",
        [([4, 2], 2, 1, 0, 1, (2, 3)), ([3, 1], 2, 1, 0, 1, (1, 2)), ([2, 2], 2, 1, 0, 1, (2, 1))],
    )
    def test_examples(self, sizes, k, t, a, b, expected):
        assert gain_loss(sizes, k, t, a, b) == expected
        assert gain_loss_by_coloring(sizes, k, t, a, b) == expected

    def test_matches_whole_graph_difference(self):
        for sizes in ([3, 1, 2], [4, 0, 2], [1, 1, 3], [5, 2]):
            r = len(sizes)
            for k in (2, 3, 4):
                if k > sum(sizes):
                    continue
                for t in range(1, min(k, r) + 1):
                    for a, b in product(range(r), repeat=2):
                        if a != b and sizes[a]:
                            assert gain_loss(sizes, k, t, a, b) == gain_loss_by_coloring(sizes, k, t, a, b)

    @pytest.mark.parametrize(
        "args",
        [([2, 2], 2, 1, 0, 0), ([0, 2], 2, 1, 0, 1), ([2, 2], 2, 3, 0, 1), ([2, 2], 2, 1, 0, 2)],
    )
    def test_rejects(self, args):
        with pytest.raises(InvalidParameters):
            gain_loss(*args)


def test_formula_oracle_equivalence_small():
    for r in (2, 3):
        for n in range(r, 10, r):
            for k in range(2, min(n, 4) + 1):
                for p in range(1, min(r, k) + 1):
                    assert brute_m(n, k, r, p) == m_exact(n, k, r, p).value


def test_balanced_attains_composition_max():
    for r in (2, 3, 4):
        for n in range(2, 13):
            for k in range(2, min(n, 4) + 1):
                for p in range(2, min(r, k) + 1):
                    best = brute_max_complete(n, k, r, p).best_value
                    assert complete_profile(balanced_sizes(n, r), k).at_least(p) == best


def test_full_enumeration_matches_M_exact_small():
    for n, k, r, p in [(4, 2, 2, 2), (6, 3, 3, 2), (6, 3, 3, 3), (6, 2, 2, 2), (6, 4, 3, 3)]:
        assert brute_max(complete(n, k), r, p).best_value == M_exact(n, k, r, p).value
