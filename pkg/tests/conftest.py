"""Shared helpers: seeded random graphs, matrices, and profiles."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from raagcs import OMEGA, InvariantProfile, UndirectedGraph
from raagcs.kgraph import DirectedGraph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> UndirectedGraph:
    edges = frozenset(
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    )
    return UndirectedGraph(n, edges)


def random_matrix(
    rng: random.Random, rows: int, cols: int, bound: int = 9
) -> list[list[int]]:
    return [
        [rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)
    ]


def random_profile(rng: random.Random) -> InvariantProfile:
    def count() -> object:
        return OMEGA if rng.random() < 0.15 else rng.randint(0, 3)

    N = {k: count() for k in rng.sample(range(-3, 4), rng.randint(0, 4))}
    return InvariantProfile.make(t=count(), o=count(), N=N)


# Hypothesis strategies


@st.composite
def graphs(draw: st.DrawFn, max_n: int = 8) -> UndirectedGraph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return UndirectedGraph(n, frozenset(picks))


extnats = st.one_of(
    st.integers(min_value=0, max_value=4),
    st.just("inf"),
)


@st.composite
def profiles(draw: st.DrawFn) -> InvariantProfile:
    N_keys = draw(st.lists(st.integers(min_value=-4, max_value=4), unique=True, max_size=4))
    N = {k: draw(extnats) for k in N_keys}
    return InvariantProfile.make(t=draw(extnats), o=draw(extnats), N=N)


@st.composite
def dgraphs(draw: st.DrawFn, max_n: int = 5) -> DirectedGraph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(s, t) for s in range(n) for t in range(n)]
    mult = {
        pair: draw(st.integers(min_value=1, max_value=3))
        for pair in draw(st.lists(st.sampled_from(pairs), unique=True, max_size=8))
    }
    emitters = draw(st.sets(st.integers(min_value=0, max_value=n - 1), max_size=2))
    return DirectedGraph(n, mult, frozenset(emitters))
