"""Graph corpora: exhaustive small bipartite graphs and seeded random ones.

Random graphs use Python's ``random.Random`` (Mersenne Twister MT19937)
seeded explicitly; the generator name is recorded in harness metadata so
corpora can be regenerated bit for bit.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .errors import BadParameter
from .graph import BiGraph, new_graph

PRNG_NAME = "MT19937 (Python random.Random)"


def _side_names(a: int, b: int) -> tuple[list[str], list[str]]:
    return [f"r{i}" for i in range(1, a + 1)], [f"b{i}" for i in range(1, b + 1)]


def all_bipartite_graphs(max_vertices: int, min_vertices: int = 1, connected: bool = True) -> list[BiGraph]:
    """Every bipartite graph with ``min..max`` vertices, one per isomorphism
    class (colour swap allowed), in a deterministic order.

    Connected graphs have a unique bipartition up to swap, so for
    ``connected=True`` this is the set of connected bipartite graphs.
    """
    seen: dict[bytes, BiGraph] = {}
    for n in range(min_vertices, max_vertices + 1):
        for a in range(0, n // 2 + 1):
            b = n - a
            reds, blues = _side_names(a, b)
            slots = [(r, s) for r in reds for s in blues]
            for bits in range(1 << len(slots)):
                edges = [slots[k] for k in range(len(slots)) if bits >> k & 1]
                if connected and len(edges) < n - 1:
                    continue
                G = new_graph(reds, blues, edges)
                if connected and len(G.component_masks()) != 1:
                    continue
                key = G.canonical_key()
                if key not in seen:
                    seen[key] = G
    return list(seen.values())


def random_bigraph(reds: int, blues: int, edge_prob: float, seed: int | random.Random) -> BiGraph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    rs, bs = _side_names(reds, blues)
    edges = [(r, s) for r in rs for s in bs if rng.random() < edge_prob]
    return new_graph(rs, bs, edges)


def random_corpus(count: int, min_vertices: int, max_vertices: int, edge_prob: float, seed: int, min_side: int = 1) -> Iterator[BiGraph]:
    """``count`` random bipartite graphs; sizes uniform in the range and the
    red side uniform in ``min_side..n-min_side`` (sizes below
    ``2 * min_side`` are skipped)."""
    low = max(min_vertices, 2 * min_side)
    if low > max_vertices:
        raise BadParameter(f"no size in {min_vertices}..{max_vertices} fits two sides of {min_side}")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(low, max_vertices)
        a = rng.randint(min_side, n - min_side)
        yield random_bigraph(a, n - a, edge_prob, rng)


def all_colored_graphs(reds: int, blues: int, edge_count: int | None = None) -> Iterator[BiGraph]:
    """All labelled graphs on fixed sides (optionally with a fixed edge count)."""
    rs, bs = _side_names(reds, blues)
    slots = [(r, s) for r in rs for s in bs]
    counts = range(len(slots) + 1) if edge_count is None else [edge_count]
    for k in counts:
        if k > len(slots):
            continue
        for chosen in combinations(slots, k):
            yield new_graph(rs, bs, chosen)
