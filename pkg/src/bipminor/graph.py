"""Immutable 2-coloured simple graphs and their raw operations.

A :class:`BiGraph` stores vertex names in a fixed order, a bitmask of the
red vertices and one adjacency bitmask per vertex.  Every operation returns
a new graph; vertex names survive deletions and contractions (the ``into``
vertex keeps its name when two vertices are identified).
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from . import canon
from .errors import (
    DifferentSides,
    DuplicateEdge,
    DuplicateVertex,
    GraphError,
    MonochromaticEdge,
    SameVertex,
    SelfLoop,
    UnknownEdge,
    UnknownEndpoint,
    UnknownVertex,
)

RED, BLUE = "red", "blue"


def _drop_bit(mask: int, k: int) -> int:
    return (mask & ((1 << k) - 1)) | ((mask >> (k + 1)) << k)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BiGraph:
    """A simple graph with a fixed red/blue bipartition.

    Build one with :func:`new_graph`; the constructor itself trusts its
    arguments and is reserved for internal use.
    """

    __slots__ = ("_names", "_red", "_adj", "_index", "_key", "_strict_key")

    def __init__(self, names: tuple[str, ...], red_mask: int, adj: tuple[int, ...]):
        self._names = names
        self._red = red_mask
        self._adj = adj
        self._index: dict[str, int] | None = None
        self._key: bytes | None = None
        self._strict_key: bytes | None = None

    # -- basic accessors -------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def red(self) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self._names) if self._red >> i & 1)

    @property
    def blue(self) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self._names) if not self._red >> i & 1)

    @property
    def n(self) -> int:
        return len(self._names)

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    @property
    def side_sizes(self) -> tuple[int, int]:
        r = self._red.bit_count()
        return r, len(self._names) - r

    def index(self, v: str) -> int:
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self._names)}
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def __contains__(self, v: object) -> bool:
        try:
            self.index(v)  # type: ignore[arg-type]
        except UnknownVertex:
            return False
        return True

    def __len__(self) -> int:
        return len(self._names)

    def color(self, v: str) -> str:
        return RED if self._red >> self.index(v) & 1 else BLUE

    def is_red(self, v: str) -> bool:
        return bool(self._red >> self.index(v) & 1)

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self._names[j] for j in _bits(self._adj[self.index(v)]))

    def degree(self, v: str) -> int:
        return self._adj[self.index(v)].bit_count()

    def degrees(self) -> dict[str, int]:
        return {x: a.bit_count() for x, a in zip(self._names, self._adj)}

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self._adj[self.index(u)] >> self.index(v) & 1)

    @property
    def edges(self) -> list[tuple[str, str]]:
        """Edges as ``(red, blue)`` pairs in vertex order."""
        out = []
        for i, x in enumerate(self._names):
            if self._red >> i & 1:
                out.extend((x, self._names[j]) for j in _bits(self._adj[i]))
        return out

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def red_mask(self) -> int:
        return self._red

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiGraph):
            return NotImplemented
        return (
            set(self.red) == set(other.red)
            and set(self.blue) == set(other.blue)
            and set(self.edges) == set(other.edges)
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.red), frozenset(self.blue), frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"BiGraph(red={list(self.red)}, blue={list(self.blue)}, edges={len(self.edges)})"

    # -- raw operations --------------------------------------------------

    def _without(self, k: int) -> BiGraph:
        names = self._names[:k] + self._names[k + 1:]
        adj = tuple(_drop_bit(a, k) for i, a in enumerate(self._adj) if i != k)
        return BiGraph(names, _drop_bit(self._red, k), adj)

    def delete_vertex(self, v: str) -> BiGraph:
        return self._without(self.index(v))

    def delete_vertices(self, vs: Iterable[str]) -> BiGraph:
        drop = {self.index(v) for v in vs}
        return self.induced_subgraph(x for i, x in enumerate(self._names) if i not in drop)

    def delete_edge(self, u: str, v: str) -> BiGraph:
        i, j = self.index(u), self.index(v)
        if not self._adj[i] >> j & 1:
            raise UnknownEdge(f"no edge {u!r}-{v!r}")
        adj = list(self._adj)
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
        return BiGraph(self._names, self._red, tuple(adj))

    def add_edge(self, u: str, v: str) -> BiGraph:
        i, j = self.index(u), self.index(v)
        if i == j:
            raise SelfLoop(f"self-loop at {u!r}")
        if (self._red >> i & 1) == (self._red >> j & 1):
            raise MonochromaticEdge(f"edge {u!r}-{v!r} joins two vertices of one side")
        if self._adj[i] >> j & 1:
            raise DuplicateEdge(f"edge {u!r}-{v!r} already present")
        adj = list(self._adj)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        return BiGraph(self._names, self._red, tuple(adj))

    def add_vertex(self, v: str, color: str, neighbors: Iterable[str] = ()) -> BiGraph:
        if v in self:
            raise DuplicateVertex(f"vertex {v!r} already present")
        if color not in (RED, BLUE):
            raise ValueError(f"color must be {RED!r} or {BLUE!r}")
        k = len(self._names)
        red = self._red | (1 << k) if color == RED else self._red
        adj = list(self._adj) + [0]
        for u in neighbors:
            j = self.index(u)
            if (red >> j & 1) == (red >> k & 1):
                raise MonochromaticEdge(f"edge {v!r}-{u!r} joins two vertices of one side")
            if adj[k] >> j & 1:
                raise DuplicateEdge(f"edge {v!r}-{u!r} listed twice")
            adj[k] |= 1 << j
            adj[j] |= 1 << k
        return BiGraph(self._names + (v,), red, tuple(adj))

    def contract(self, merge: str, into: str) -> BiGraph:
        """Identify ``merge`` with ``into``; the result keeps ``into``."""
        i, j = self.index(merge), self.index(into)
        if i == j:
            raise SameVertex(f"cannot contract {merge!r} with itself")
        if (self._red >> i & 1) != (self._red >> j & 1):
            raise DifferentSides(f"{merge!r} and {into!r} lie on different sides")
        adj = list(self._adj)
        moved = adj[i]
        adj[j] |= moved
        for x in _bits(moved):
            adj[x] = (adj[x] & ~(1 << i)) | (1 << j)
        adj[i] = 0
        return BiGraph(self._names, self._red, tuple(adj))._without(i)

    def induced_subgraph(self, vs: Iterable[str]) -> BiGraph:
        keep = sorted({self.index(v) for v in vs})
        pos = {old: new for new, old in enumerate(keep)}
        keep_mask = 0
        for i in keep:
            keep_mask |= 1 << i
        adj = []
        red = 0
        for new, old in enumerate(keep):
            m = 0
            for j in _bits(self._adj[old] & keep_mask):
                m |= 1 << pos[j]
            adj.append(m)
            if self._red >> old & 1:
                red |= 1 << new
        return BiGraph(tuple(self._names[i] for i in keep), red, tuple(adj))

    def swap_colors(self) -> BiGraph:
        full = (1 << len(self._names)) - 1
        return BiGraph(self._names, full & ~self._red, self._adj)

    def relabel(self, mapping: dict[str, str]) -> BiGraph:
        names = tuple(mapping.get(x, x) for x in self._names)
        if len(set(names)) != len(names):
            raise DuplicateVertex("relabelling is not injective")
        return BiGraph(names, self._red, self._adj)

    # -- invariants ------------------------------------------------------

    def canonical_key(self, allow_swap: bool = True) -> bytes:
        """Isomorphism-invariant byte string.

        With ``allow_swap`` (the default) the key is also invariant under
        exchanging the two colour classes.
        """
        if allow_swap:
            if self._key is None:
                self._key = min(self._colored_key(True), self._colored_key(False))
            return self._key
        if self._strict_key is None:
            self._strict_key = self._colored_key(True)
        return self._strict_key

    def _colored_key(self, red_first: bool) -> bytes:
        n = len(self._names)
        reds = [i for i in range(n) if self._red >> i & 1]
        blues = [i for i in range(n) if not self._red >> i & 1]
        cells = [reds, blues] if red_first else [blues, reds]
        cert, _ = canon.canonical_form(self._adj, cells)
        return canon.encode(n, (len(cells[0]), len(cells[1])), cert)

    def components(self) -> list[tuple[str, ...]]:
        """Vertex sets of the connected components, in vertex order."""
        return [tuple(self._names[i] for i in _bits(c)) for c in self.component_masks()]

    def component_masks(self) -> list[int]:
        return component_masks(self._adj, (1 << len(self._names)) - 1)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for i, x in enumerate(self._names):
            g.add_node(x, color=RED if self._red >> i & 1 else BLUE)
        g.add_edges_from(self.edges)
        return g

    def to_dict(self) -> dict:
        return {"red": list(self.red), "blue": list(self.blue), "edges": [list(e) for e in self.edges]}


def component_masks(adj: Sequence[int], alive: int) -> list[int]:
    """Connected components of the subgraph induced by the ``alive`` mask."""
    out = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= adj[i]
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def new_graph(reds: Iterable[str], blues: Iterable[str], edges: Iterable[Sequence[str]]) -> BiGraph:
    """Validate and build a :class:`BiGraph`."""
    reds, blues = [str(x) for x in reds], [str(x) for x in blues]
    names = reds + blues
    index: dict[str, int] = {}
    for i, x in enumerate(names):
        if x in index:
            raise DuplicateVertex(f"duplicate vertex {x!r}")
        index[x] = i
    red_mask = (1 << len(reds)) - 1
    adj = [0] * len(names)
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} does not have two endpoints")
        u, v = str(e[0]), str(e[1])
        for x in (u, v):
            if x not in index:
                raise UnknownEndpoint(f"edge {u!r}-{v!r} uses undeclared vertex {x!r}")
        i, j = index[u], index[v]
        if i == j:
            raise SelfLoop(f"self-loop at {u!r}")
        if (red_mask >> i & 1) == (red_mask >> j & 1):
            raise MonochromaticEdge(f"edge {u!r}-{v!r} joins two vertices of one side")
        if adj[i] >> j & 1:
            raise DuplicateEdge(f"duplicate edge {u!r}-{v!r}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return BiGraph(tuple(names), red_mask, tuple(adj))


# Module-level aliases so every raw operation reads as ``op(G, ...)``.

def delete_vertex(G: BiGraph, v: str) -> BiGraph:
    return G.delete_vertex(v)


def delete_edge(G: BiGraph, u: str, v: str) -> BiGraph:
    return G.delete_edge(u, v)


def contract(G: BiGraph, merge: str, into: str) -> BiGraph:
    return G.contract(merge, into)


def induced_subgraph(G: BiGraph, S: Iterable[str]) -> BiGraph:
    return G.induced_subgraph(S)


def canonical_key(G: BiGraph, allow_swap: bool = True) -> bytes:
    return G.canonical_key(allow_swap)


def components(G: BiGraph) -> tuple[int, list[tuple[str, ...]]]:
    parts = G.components()
    return len(parts), parts


def cone(G: BiGraph, apex: str = "apex") -> nx.Graph:
    """G plus one vertex joined to every vertex, as an uncoloured graph."""
    while apex in G:
        apex += "'"
    g = nx.Graph()
    g.add_nodes_from(G.names)
    g.add_edges_from(G.edges)
    g.add_node(apex)
    g.add_edges_from((apex, x) for x in G.names)
    return g


def _color_match(a: dict, b: dict) -> bool:
    return a["color"] == b["color"]


def find_isomorphism(G: BiGraph, H: BiGraph, allow_swap: bool = True) -> dict[str, str] | None:
    """A colour-preserving isomorphism G -> H (colour swap optional), or None."""
    if G.n != H.n or G.m != H.m:
        return None
    g = G.to_networkx()
    candidates = [H, H.swap_colors()] if allow_swap else [H]
    for target in candidates:
        if G.side_sizes != target.side_sizes:
            continue
        gm = GraphMatcher(g, target.to_networkx(), node_match=_color_match)
        if gm.is_isomorphic():
            return dict(gm.mapping)
    return None


def is_isomorphic(G: BiGraph, H: BiGraph, allow_swap: bool = True) -> bool:
    return find_isomorphism(G, H, allow_swap) is not None


# -- serialisation --------------------------------------------------------

def from_dict(data: dict) -> BiGraph:
    try:
        return new_graph(data["red"], data["blue"], data.get("edges", []))
    except KeyError as exc:
        raise GraphError(f"graph JSON is missing field {exc.args[0]!r}") from None


def to_json(G: BiGraph) -> str:
    return json.dumps(G.to_dict())


def from_json(text: str) -> BiGraph:
    return from_dict(json.loads(text))


def parse_text(text: str) -> BiGraph:
    """Parse the plain-text format (``red: ...``, ``blue: ...``, edge lines)."""
    reds: list[str] | None = None
    blues: list[str] | None = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if sep and head.strip() == "red" and reds is None:
            reds = rest.split()
        elif sep and head.strip() == "blue" and blues is None:
            blues = rest.split()
        else:
            parts = line.split()
            if len(parts) != 2 or reds is None or blues is None:
                raise GraphError(f"line {lineno}: expected 'u v' after the red/blue headers")
            edges.append(parts)
    if reds is None or blues is None:
        raise GraphError("text graph needs 'red:' and 'blue:' lines")
    return new_graph(reds, blues, edges)


def format_text(G: BiGraph) -> str:
    lines = ["red: " + " ".join(G.red), "blue: " + " ".join(G.blue)]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> BiGraph:
    """Read either format; JSON is recognised by a leading brace."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return parse_text(text)
