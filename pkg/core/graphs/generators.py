"""Deterministic constructions: cycles, cliques, Mycielskians, Kneser graphs, G(n,p)."""

from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict

from core.graphs.model import Graph
from core.graphs.prng import SplitMix64

Probability = Union[Fraction, int, str]

DEFAULT_CORPUS_PROBABILITIES = ("0.02", "0.05", "0.1", "0.3")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    return Graph.empty(n)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G on 0..G.n-1 followed by H shifted by G.n."""
    shifted = [(u + G.n, v + G.n) for u, v in H.edges()]
    return Graph.from_edges(G.n + H.n, list(G.edges()) + shifted)


def mycielski(G: Graph) -> Graph:
    """Mycielskian: originals 0..n-1, shadows n..2n-1, apex 2n.

    Shadow u' is joined to every original neighbor of u, and every shadow to the apex.
    """
    if G.n < 1:
        raise ValueError("mycielski needs a nonempty graph")
    n = G.n
    edges: List[Tuple[int, int]] = list(G.edges())
    for u, v in G.edges():
        edges.append((n + u, v))
        edges.append((n + v, u))
    edges.extend((n + v, 2 * n) for v in range(n))
    return Graph.from_edges(2 * n + 1, edges)


def generalized_mycielski(G: Graph, levels: int) -> Graph:
    """Cone over G with `levels` layers: vertex (v, i) is i*n + v, apex is levels*n.

    Layer 0 carries a copy of G, consecutive layers are joined along the edges of G,
    and the top layer is joined to the apex. levels=2 is the classic Mycielskian.
    """
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    n = G.n
    apex = levels * n
    edges: List[Tuple[int, int]] = list(G.edges())
    for i in range(levels - 1):
        for u, v in G.edges():
            edges.append((i * n + u, (i + 1) * n + v))
            edges.append((i * n + v, (i + 1) * n + u))
    edges.extend(((levels - 1) * n + v, apex) for v in range(n))
    return Graph.from_edges(apex + 1, edges)


def kneser(n: int, k: int) -> Graph:
    """K(n, k): k-subsets of {1..n} in lexicographic order, adjacent when disjoint."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"kneser needs n >= 2k >= 2, got n={n}, k={k}")
    subsets = [frozenset(s) for s in combinations(range(1, n + 1), k)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(len(subsets), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def grotzsch() -> Graph:
    return mycielski(cycle(5))


def to_probability(p: Probability) -> Fraction:
    # Fraction("0.05") is exact, unlike Fraction(0.05).
    value = Fraction(p)
    if not 0 <= value <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    return value


def gnp(n: int, p: Probability, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) driven by SplitMix64(seed).

    One draw per pair (u, v), u < v, in lexicographic order; the pair becomes an edge
    when the 64-bit draw x satisfies x / 2^64 < p, compared exactly.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    prob = to_probability(p)
    rng = SplitMix64(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.bernoulli(prob)]
    return Graph.from_edges(n, edges)


class CorpusEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    index: int
    n: int
    p: Fraction
    seed: int
    graph: Graph


def gnp_corpus(
    count: int = 200,
    n_max: int = 200,
    probabilities: Sequence[Probability] = DEFAULT_CORPUS_PROBABILITIES,
    seed: int = 20240601,
) -> List[CorpusEntry]:
    """Reproducible G(n, p) corpus: sizes drawn from [1, n_max], p cycling through the list."""
    probs = [to_probability(p) for p in probabilities]
    rng = SplitMix64(seed)
    corpus = []
    for index in range(count):
        n = 1 + rng.below(n_max)
        graph_seed = rng.next_u64()
        p = probs[index % len(probs)]
        corpus.append(
            CorpusEntry(index=index, n=n, p=p, seed=graph_seed, graph=gnp(n, p, graph_seed))
        )
    return corpus
