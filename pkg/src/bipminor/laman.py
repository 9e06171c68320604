"""(2,2)-Laman graphs: recognition, critical sets, reduction moves and
enumeration of small members.

A bipartite graph with both sides of size >= 2 is (2,2)-Laman when it has
exactly ``2n - 4`` edges and every vertex set X with ``|X| >= 3`` induces
at most ``2|X| - 4`` edges.  Recognition scans all vertex subsets; the
induced edge counts of all ``2^n`` subsets come from one vectorised
dynamic programme.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .errors import (
    BadSides,
    CapExceeded,
    IsK22,
    MinDegreeNot3,
    NotLaman,
    SideTooSmall,
    TheoremViolation,
    UnknownEdge,
    WrongDegree,
)
from .graph import BLUE, RED, BiGraph, _bits
from . import catalog

MAX_SCAN_VERTICES = 26
DEFAULT_ENUM_CAP = 12


def subset_edge_counts(G: BiGraph) -> np.ndarray:
    """``E[S]`` = number of edges induced by the vertex bitmask ``S``."""
    n = G.n
    if n > MAX_SCAN_VERTICES:
        raise CapExceeded(f"subset scan limited to {MAX_SCAN_VERTICES} vertices, got {n}")
    E = np.zeros(1 << n, dtype=np.int16)
    adj = G.adjacency_masks
    for i in range(n):
        lo = 1 << i
        low = np.arange(lo, dtype=np.int64)
        # subsets whose highest bit is i: add i's edges into the lower part
        E[lo: 2 * lo] = E[:lo] + np.bitwise_count(low & (adj[i] & (lo - 1))).astype(np.int16)
    return E


def _excess(G: BiGraph) -> tuple[np.ndarray, np.ndarray]:
    E = subset_edge_counts(G)
    sizes = np.bitwise_count(np.arange(1 << G.n, dtype=np.int64)).astype(np.int16)
    return E.astype(np.int32) - (2 * sizes.astype(np.int32) - 4), sizes


def _names_of(G: BiGraph, mask: int) -> tuple[str, ...]:
    return tuple(G.names[i] for i in _bits(mask))


@dataclass
class LamanReport:
    verdict: bool
    global_count_ok: bool
    worst_violation: tuple[tuple[str, ...], int] | None
    side_sizes: tuple[int, int]
    edges: int

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        wv = None
        if self.worst_violation is not None:
            wv = {"vertices": list(self.worst_violation[0]), "excess": self.worst_violation[1]}
        return {
            "verdict": self.verdict,
            "global_count_ok": self.global_count_ok,
            "worst_violation": wv,
            "side_sizes": list(self.side_sizes),
            "edges": self.edges,
        }


def is_laman(G: BiGraph) -> LamanReport:
    """Exact (2,2)-Laman test.

    ``worst_violation`` is the subset with the largest positive excess
    ``E(X) - (2|X| - 4)`` (ties: fewest vertices, then lowest bitmask), or
    None when no subset with three or more vertices is over-full.
    """
    r, b = G.side_sizes
    if r < 2 or b < 2:
        raise SideTooSmall(f"both sides need at least 2 vertices, got {r} and {b}")
    count_ok = G.m == 2 * G.n - 4
    excess, sizes = _excess(G)
    excess = np.where(sizes >= 3, excess, np.iinfo(np.int32).min)
    top = int(excess.max())
    worst = None
    if top > 0:
        hits = np.flatnonzero(excess == top)
        mask = int(min(hits, key=lambda s: (int(sizes[s]), int(s))))
        worst = (_names_of(G, mask), top)
    return LamanReport(count_ok and worst is None, count_ok, worst, (r, b), G.m)


def critical_sets(G: BiGraph, max_size: int | None = None) -> list[tuple[str, ...]]:
    """Every X with ``3 <= |X| <= max_size`` inducing exactly ``2|X| - 4`` edges."""
    excess, sizes = _excess(G)
    hi = G.n if max_size is None else max_size
    hits = np.flatnonzero((excess == 0) & (sizes >= 3) & (sizes <= hi))
    return sorted((_names_of(G, int(s)) for s in hits), key=lambda x: (len(x), x))


@dataclass
class DegreeProfile:
    min_degree: int
    max_degree: int
    degrees: dict[int, int]  # degree -> how many vertices
    min_at_least_two: bool
    has_degree_at_most_three: bool

    @property
    def passed(self) -> bool:
        return self.min_at_least_two and self.has_degree_at_most_three

    def to_dict(self) -> dict:
        return {
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "degrees": {str(k): v for k, v in sorted(self.degrees.items())},
            "passed": self.passed,
        }


def degree_profile_checks(G: BiGraph) -> DegreeProfile:
    """Degree facts every (2,2)-Laman graph must satisfy: min degree >= 2
    and some vertex of degree <= 3."""
    if not is_laman(G).verdict:
        raise NotLaman("degree checks apply to (2,2)-Laman graphs only")
    degs = list(G.degrees().values())
    return DegreeProfile(min(degs), max(degs), dict(Counter(degs)), min(degs) >= 2, min(degs) <= 3)


def _is_k22(G: BiGraph) -> bool:
    return G.side_sizes == (2, 2) and G.m == 4


def reduce_degree2(G: BiGraph, v: str) -> BiGraph:
    """Remove a degree-2 vertex; the result is again (2,2)-Laman."""
    if not is_laman(G).verdict:
        raise NotLaman("input is not (2,2)-Laman")
    if G.degree(v) != 2:
        raise WrongDegree(f"{v!r} has degree {G.degree(v)}, expected 2")
    if _is_k22(G):
        raise IsK22("K_{2,2} has no (2,2)-Laman proper subgraph")
    H = G.delete_vertex(v)
    if not is_laman(H).verdict:
        raise TheoremViolation(f"deleting degree-2 vertex {v!r} broke the (2,2)-Laman property")
    return H


@dataclass(frozen=True)
class ReductionMove:
    v: str
    x: str
    y: str
    p: str
    graph: BiGraph

    def to_dict(self) -> dict:
        return {"v": self.v, "x": self.x, "y": self.y, "p": self.p, "graph": self.graph.to_dict()}


def _laman_ok(G: BiGraph) -> bool:
    r, b = G.side_sizes
    if r < 2 or b < 2 or G.m != 2 * G.n - 4:
        return False
    return is_laman(G).verdict


def reduce_step(G: BiGraph, v: str) -> list[ReductionMove]:
    """All moves ``(x, y, p)`` at a degree-3 vertex ``v``: x, y neighbours
    of v, p adjacent to y but not to x, and ``G - v + xp`` (2,2)-Laman.

    Raises :class:`TheoremViolation` if no move exists, since a graph of
    minimum degree three always admits one.
    """
    if not is_laman(G).verdict:
        raise NotLaman("input is not (2,2)-Laman")
    if min(G.degrees().values()) != 3:
        raise MinDegreeNot3("reduction moves need minimum degree 3")
    if G.degree(v) != 3:
        raise WrongDegree(f"{v!r} has degree {G.degree(v)}, expected 3")
    base = G.delete_vertex(v)
    moves = []
    for x, y in permutations(G.neighbors(v), 2):
        nx_ = set(base.neighbors(x))
        for p in base.neighbors(y):
            if p in nx_:
                continue
            cand = base.add_edge(x, p)
            if _laman_ok(cand):
                moves.append(ReductionMove(v, x, y, p, cand))
    if not moves:
        raise TheoremViolation(f"no reduction move at degree-3 vertex {v!r}")
    return moves


def _fresh_name(G: BiGraph, stem: str = "n") -> str:
    k = G.n
    while f"{stem}{k}" in G:
        k += 1
    return f"{stem}{k}"


def extend(G: BiGraph, x: str, p: str, new_neighbors: tuple[str, str, str] | list[str], name: str | None = None) -> BiGraph | None:
    """Inverse reduction: drop edge xp, add a vertex on p's side joined to
    ``new_neighbors`` (three vertices of x's side, x among them).  Returns
    the graph if it is (2,2)-Laman, else None."""
    if not G.has_edge(x, p):
        raise UnknownEdge(f"no edge {x!r}-{p!r}")
    nbrs = list(new_neighbors)
    if len(nbrs) != 3 or len(set(nbrs)) != 3 or x not in nbrs:
        raise BadSides("new_neighbors must be three distinct vertices including x")
    side = G.is_red(x)
    if any(G.is_red(u) != side for u in nbrs):
        raise BadSides("new_neighbors must all lie on x's side")
    v = name or _fresh_name(G)
    H = G.delete_edge(x, p).add_vertex(v, BLUE if side else RED, nbrs)
    return H if _laman_ok(H) else None


def _degree2_additions(G: BiGraph) -> Iterator[BiGraph]:
    v = _fresh_name(G)
    for side, color in ((G.red, BLUE), (G.blue, RED)):
        for a, b in combinations(side, 2):
            yield G.add_vertex(v, color, (a, b))


def _extensions(G: BiGraph) -> Iterator[BiGraph]:
    v = _fresh_name(G)
    for r, s in G.edges:
        for x, p in ((r, s), (s, r)):
            others = [u for u in (G.red if G.is_red(x) else G.blue) if u != x]
            for y, z in combinations(others, 2):
                H = G.delete_edge(x, p).add_vertex(v, BLUE if G.is_red(x) else RED, (x, y, z))
                yield H


def enumerate_laman(max_vertices: int, cap: int = DEFAULT_ENUM_CAP) -> list[BiGraph]:
    """All (2,2)-Laman graphs on at most ``max_vertices`` vertices, one per
    isomorphism class (colour swap allowed), ordered by size then key.

    Grown from K_{2,2} by adding degree-2 vertices and by inverse reduction
    moves; candidates are filtered by :func:`is_laman`.
    """
    if max_vertices > cap:
        raise CapExceeded(f"max_vertices {max_vertices} exceeds the cap {cap}")
    if max_vertices < 4:
        return []
    start = catalog.K22()
    levels: list[dict[bytes, BiGraph]] = [{start.canonical_key(): start}]
    for _ in range(4, max_vertices):
        nxt: dict[bytes, BiGraph] = {}
        rejected: set[bytes] = set()
        for G in levels[-1].values():
            for H in _degree2_additions(G):
                _admit(H, nxt, rejected)
            for H in _extensions(G):
                _admit(H, nxt, rejected)
        levels.append(nxt)
    out = []
    for level in levels:
        out += [level[k] for k in sorted(level)]
    return out


def _admit(H: BiGraph, seen: dict[bytes, BiGraph], rejected: set[bytes]) -> None:
    key = H.canonical_key()
    if key in seen or key in rejected:
        return
    if _laman_ok(H):
        seen[key] = H.relabel({x: f"u{i}" for i, x in enumerate(H.names)})
    else:
        rejected.add(key)
