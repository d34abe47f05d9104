"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from steiner_ecc import Tree, from_edge_list, from_prufer, ecc_k_bruteforce


def path_tree(n: int) -> Tree:
    return from_edge_list([(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    return from_edge_list([(0, i) for i in range(1, n)])


def spider(*legs: int) -> Tree:
    """Generalized star with the given leg lengths, center vertex 0."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(edges)


def h_tree() -> Tree:
    """Two degree-3 vertices joined by a 2-edge path, two pendant leaves each."""
    return from_edge_list([(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)])


def relabel(t: Tree, perm: list[int]) -> Tree:
    return from_edge_list([(perm[u], perm[v]) for u, v in t.edges()])


def brute_aecc3(t: Tree) -> Fraction:
    """Oracle average: per-vertex brute force over all 3-subsets."""
    return Fraction(sum(ecc_k_bruteforce(t, v, 3) for v in range(t.order)), t.order)


def random_trees(count: int, seed: int, n_low: int, n_high: int) -> list[Tree]:
    """The fixed random universe: Pruefer-uniform labeled trees, sizes uniform."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_low, n_high)
        if n == 2:
            out.append(from_edge_list([(0, 1)]))
        else:
            out.append(from_prufer([rng.randrange(n) for _ in range(n - 2)]))
    return out


@st.composite
def prufer_codes(draw, min_n: int = 3, max_n: int = 24):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 24):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 2:
        return from_edge_list([(0, 1)])
    code = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return from_prufer(code)


@st.composite
def permutations_of(draw, n: int):
    perm = list(range(n))
    rnd = draw(st.randoms(use_true_random=False))
    rnd.shuffle(perm)
    return perm
