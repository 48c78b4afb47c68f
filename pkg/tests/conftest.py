from itertools import product
from typing import List

import hypothesis
import networkx as nx
import pytest
from hypothesis import strategies as st

from core.graphs.generators import CorpusEntry, gnp, gnp_corpus
from core.graphs.model import Graph
from core.graphs.prng import SplitMix64

hypothesis.settings.register_profile("localchi", max_examples=60, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.load_profile("localchi")


@st.composite
def graphs(draw: st.DrawFn, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n < 2:
        return Graph.empty(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph.from_edges(n, edges)


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def brute_force_chromatic(G: Graph) -> int:
    """Least k admitting a proper assignment among all k^n (vertex 0 pinned to color 0)."""
    if G.n == 0:
        return 0
    edges = list(G.edges())
    for k in range(1, G.n + 1):
        for rest in product(range(k), repeat=G.n - 1):
            colors = (0,) + rest
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    raise AssertionError("unreachable: n colors always suffice")


def small_random_graphs(count: int, max_n: int = 7, seed: int = 7) -> List[Graph]:
    rng = SplitMix64(seed)
    probabilities = ("0.2", "0.4", "0.5", "0.7", "0.9")
    result = []
    for i in range(count):
        n = 1 + rng.below(max_n)
        result.append(gnp(n, probabilities[i % len(probabilities)], rng.next_u64()))
    return result


@pytest.fixture(scope="session")
def corpus() -> List[CorpusEntry]:
    return gnp_corpus()
