"""Topological containment: find a subgraph of G homeomorphic to a pattern H.

The search assigns branch vertices lazily: pattern edges are routed one at
a time, and when an edge leads to an unplaced pattern vertex the far end of
the routed path becomes its image.  Colours are ignored, and patterns may be
non-bipartite (K5).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping

import networkx as nx

from .errors import BudgetExhausted
from .graph import BiGraph

DEFAULT_BUDGET = 10**7


@dataclass
class Subdivision:
    """Branch-vertex map plus one path of G per pattern edge."""

    branch: dict[Hashable, Hashable]
    paths: dict[tuple[Hashable, Hashable], list[Hashable]] = field(default_factory=dict)

    @property
    def edges(self) -> set[frozenset]:
        out = set()
        for p in self.paths.values():
            out.update(frozenset(e) for e in zip(p, p[1:]))
        return out

    @property
    def vertices(self) -> set:
        return {x for p in self.paths.values() for x in p} | set(self.branch.values())

    def to_dict(self) -> dict:
        return {
            "branch": {str(k): str(v) for k, v in self.branch.items()},
            "paths": [[str(x) for x in p] for p in self.paths.values()],
        }


def as_adjacency(G: BiGraph | nx.Graph | Mapping) -> dict[Hashable, set]:
    if isinstance(G, BiGraph):
        return {x: set(G.neighbors(x)) for x in G.names}
    if isinstance(G, nx.Graph):
        return {x: set(G.neighbors(x)) for x in G.nodes}
    return {x: set(ns) for x, ns in G.items()}


def is_valid_subdivision(G: BiGraph | nx.Graph | Mapping, H: BiGraph | nx.Graph | Mapping, sub: Subdivision) -> bool:
    """Independent check that ``sub`` really is a subdivision of H inside G."""
    g, h = as_adjacency(G), as_adjacency(H)
    images = list(sub.branch.values())
    if set(sub.branch) != set(h) or len(set(images)) != len(images):
        return False
    pattern_edges = {frozenset((a, b)) for a in h for b in h[a]}
    if {frozenset(k) for k in sub.paths} != pattern_edges or len(sub.paths) != len(pattern_edges):
        return False
    interior_seen: set = set()
    for (a, b), p in sub.paths.items():
        if p[0] != sub.branch[a] or p[-1] != sub.branch[b] or len(set(p)) != len(p):
            return False
        if any(y not in g.get(x, ()) for x, y in zip(p, p[1:])):
            return False
        inner = set(p[1:-1])
        if inner & set(images) or inner & interior_seen:
            return False
        interior_seen |= inner
    return True


def find_subdivision(G: BiGraph | nx.Graph | Mapping, H: BiGraph | nx.Graph | Mapping, budget: int = DEFAULT_BUDGET) -> Subdivision | None:
    g, h = as_adjacency(G), as_adjacency(H)
    if not h:
        return Subdivision({})
    hdeg = {x: len(ns) for x, ns in h.items()}
    gdeg = {x: len(ns) for x, ns in g.items()}
    # cheap necessary condition: enough high-degree vertices for the branch set
    need = sorted(hdeg.values(), reverse=True)
    have = sorted(gdeg.values(), reverse=True)
    if len(have) < len(need) or any(a < b for a, b in zip(have, need)):
        return None
    if sum(len(ns) for ns in g.values()) < sum(hdeg.values()):
        return None

    # pattern vertices in BFS order from a max-degree vertex; edges in the
    # order they become routable (one end already placed)
    start = max(h, key=lambda x: (hdeg[x], str(x)))
    order = [start]
    for x in order:
        for y in sorted(h[x], key=str):
            if y not in order:
                order.append(y)
    order += [x for x in sorted(h, key=str) if x not in order]  # disconnected pattern
    rank = {x: i for i, x in enumerate(order)}
    edge_order: list[tuple] = []
    seen: set = set()
    for x in order:
        for y in sorted(h[x], key=lambda z: rank[z]):
            if frozenset((x, y)) not in seen:
                seen.add(frozenset((x, y)))
                edge_order.append((x, y))

    image: dict = {}
    used: set = set()
    paths: dict = {}
    pending = dict(hdeg)  # unrouted pattern edges per pattern vertex
    steps = 0

    def tick() -> None:
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExhausted(f"subdivision search exceeded {budget} steps")

    def degree_ok() -> bool:
        # every placed branch vertex still needs enough usable neighbours
        targets = set(image.values())
        for hx, gx in image.items():
            k = pending[hx]
            if k and sum(1 for y in g[gx] if y not in used or y in targets) < k:
                return False
        return True

    def place_isolated() -> bool:
        free = [x for x in sorted(g, key=str) if x not in used]
        lonely = [x for x in order if x not in image]
        if len(free) < len(lonely):
            return False
        for hx, gx in zip(lonely, free):
            image[hx] = gx
        return True

    def route(i: int) -> bool:
        tick()
        if i == len(edge_order):
            return place_isolated()
        a, b = edge_order[i]
        if a not in image:
            # a new component of the pattern: place its first vertex anywhere
            for gx in sorted(g, key=str):
                if gx in used or gdeg[gx] < hdeg[a]:
                    continue
                image[a] = gx
                used.add(gx)
                if route(i):
                    return True
                del image[a]
                used.discard(gx)
            return False
        src = image[a]
        dst = image.get(b)
        path = [src]

        def extend(x) -> bool:
            tick()
            for y in sorted(g[x], key=str):
                if dst is not None:
                    if y == dst:
                        if commit(path + [y]):
                            return True
                        continue
                    if y in used:
                        continue
                else:
                    if y in used:
                        continue
                    if gdeg[y] >= hdeg[b]:
                        image[b] = y
                        used.add(y)
                        if commit(path + [y]):
                            return True
                        del image[b]
                        used.discard(y)
                path.append(y)
                used.add(y)
                if extend(y):
                    return True
                path.pop()
                used.discard(y)
            return False

        def commit(p: list) -> bool:
            paths[(a, b)] = p
            pending[a] -= 1
            pending[b] -= 1
            ok = degree_ok() and route(i + 1)
            if not ok:
                del paths[(a, b)]
                pending[a] += 1
                pending[b] += 1
            return ok

        return extend(src)

    if route(0):
        return Subdivision(dict(image), {k: list(v) for k, v in paths.items()})
    return None


def contains_subdivision(G: BiGraph | nx.Graph | Mapping, H: BiGraph | nx.Graph | Mapping, budget: int = DEFAULT_BUDGET) -> bool:
    return find_subdivision(G, H, budget) is not None
