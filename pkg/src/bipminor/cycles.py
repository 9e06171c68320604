"""Peripheral cycles and admissible contractions.

A cycle is peripheral when it is chordless and deleting its vertices does
not increase the number of connected components.  A contraction of two
same-side vertices ``u``, ``v`` is admissible when some common neighbour
``w`` makes ``(u, w, v)`` part of a peripheral cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExhausted, DifferentSides, NotACycle, NotAdmissible, NotAPath, SameVertex
from .graph import BiGraph, _bits, component_masks

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class CycleWitness:
    common: str
    cycle: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"common": self.common, "cycle": list(self.cycle)}

    @classmethod
    def from_dict(cls, data: dict) -> CycleWitness:
        return cls(str(data["common"]), tuple(str(x) for x in data["cycle"]))


def cycle_mask(G: BiGraph, C: Sequence[str]) -> int:
    """Validate ``C`` as a cycle of ``G`` and return its vertex bitmask."""
    if len(C) < 4 or len(C) % 2:
        raise NotACycle(f"a bipartite cycle needs even length >= 4, got {len(C)}")
    if len(set(C)) != len(C):
        raise NotACycle("cycle repeats a vertex")
    idx = []
    for x in C:
        if x not in G:
            raise NotACycle(f"cycle vertex {x!r} is not in the graph")
        idx.append(G.index(x))
    adj = G.adjacency_masks
    mask = 0
    for k, i in enumerate(idx):
        j = idx[(k + 1) % len(idx)]
        if not adj[i] >> j & 1:
            raise NotACycle(f"{C[k]!r} and {C[(k + 1) % len(C)]!r} are not adjacent")
        mask |= 1 << i
    return mask


def _chordless(adj: Sequence[int], mask: int) -> bool:
    # every cycle vertex sees exactly its two cycle neighbours
    return all((adj[i] & mask).bit_count() == 2 for i in _bits(mask))


def _non_separating(adj: Sequence[int], alive: int, mask: int) -> bool:
    """Removing ``mask`` does not split the component that contains it."""
    for comp in component_masks(adj, alive):
        if comp & mask:
            rest = comp & ~mask
            return len(component_masks(adj, rest)) <= 1
    return True


def is_induced_cycle(G: BiGraph, C: Sequence[str]) -> bool:
    return _chordless(G.adjacency_masks, cycle_mask(G, C))


def is_non_separating(G: BiGraph, C: Sequence[str]) -> bool:
    mask = cycle_mask(G, C)
    adj = G.adjacency_masks
    full = (1 << G.n) - 1
    return len(component_masks(adj, full & ~mask)) <= len(component_masks(adj, full))


def is_peripheral(G: BiGraph, C: Sequence[str]) -> bool:
    mask = cycle_mask(G, C)
    adj = G.adjacency_masks
    return _chordless(adj, mask) and _non_separating(adj, (1 << G.n) - 1, mask)


def _peripheral_through(adj: Sequence[int], alive: int, u: int, w: int, v: int, budget: int) -> tuple[list[int] | None, int, bool]:
    """Depth-first search for a peripheral cycle u, w, v, ..., back to u.

    Returns ``(cycle or None, partial paths visited, exhausted)``.  Paths
    are kept chordless as they grow: a new vertex may touch only the current
    end of the path, or ``u`` (which closes the cycle).
    """
    visited = 0
    path = [u, w, v]
    on_path = (1 << u) | (1 << w) | (1 << v)

    def dfs(last: int, forbidden: int) -> list[int] | None:
        nonlocal visited, on_path
        visited += 1
        if visited > budget:
            raise BudgetExhausted
        cand = adj[last] & alive & ~on_path & ~forbidden
        for x in _bits(cand):
            if adj[x] >> u & 1:
                cyc = on_path | (1 << x)
                if _non_separating(adj, alive, cyc):
                    return path + [x]
                continue
            path.append(x)
            on_path |= 1 << x
            found = dfs(x, forbidden | adj[last])
            path.pop()
            on_path &= ~(1 << x)
            if found is not None:
                return found
        return None

    try:
        # vertices adjacent to w other than u, v would be chords
        found = dfs(v, adj[w])
    except BudgetExhausted:
        return None, visited, True
    return found, visited, False


def find_peripheral_through_path(G: BiGraph, u: str, w: str, v: str, budget: int = DEFAULT_BUDGET) -> tuple[str, ...] | None:
    """A peripheral cycle containing ``u, w, v`` consecutively, or None.

    Raises :class:`BudgetExhausted` when the search was cut short, which is
    distinct from a ``None`` answer (proved absence).
    """
    iu, iw, iv = G.index(u), G.index(w), G.index(v)
    adj = G.adjacency_masks
    if iu == iv or not (adj[iw] >> iu & 1) or not (adj[iw] >> iv & 1):
        raise NotAPath(f"({u}, {w}, {v}) is not a path of length two")
    found, _, exhausted = _peripheral_through(adj, (1 << G.n) - 1, iu, iw, iv, budget)
    if exhausted:
        raise BudgetExhausted(f"peripheral-cycle search through ({u}, {w}, {v}) exceeded {budget} paths")
    if found is None:
        return None
    return tuple(G.names[i] for i in found)


def _check_pair(G: BiGraph, u: str, v: str) -> None:
    if u == v:
        raise SameVertex(f"cannot contract {u!r} with itself")
    if G.is_red(u) != G.is_red(v):
        raise DifferentSides(f"{u!r} and {v!r} lie on different sides")


def admissible_witness(G: BiGraph, u: str, v: str, budget: int = DEFAULT_BUDGET) -> CycleWitness | None:
    """First common neighbour (by name) admitting a peripheral cycle."""
    _check_pair(G, u, v)
    common = sorted(set(G.neighbors(u)) & set(G.neighbors(v)))
    exhausted = False
    for w in common:
        try:
            cyc = find_peripheral_through_path(G, u, w, v, budget)
        except BudgetExhausted:
            exhausted = True
            continue
        if cyc is not None:
            return CycleWitness(w, cyc)
    if exhausted:
        raise BudgetExhausted(f"could not decide admissibility of {u!r} with {v!r} within budget")
    return None


def admissible_contract(G: BiGraph, merge: str, into: str, budget: int = DEFAULT_BUDGET) -> tuple[BiGraph, CycleWitness]:
    """Contract ``merge`` into ``into`` after certifying admissibility."""
    _check_pair(G, merge, into)
    if not set(G.neighbors(merge)) & set(G.neighbors(into)):
        raise NotAdmissible(f"{merge!r} and {into!r} have no common neighbour", "no common neighbor")
    witness = admissible_witness(G, merge, into, budget)
    if witness is None:
        raise NotAdmissible(f"no peripheral cycle passes through {merge!r}, a common neighbour, {into!r}", "no peripheral cycle")
    return G.contract(merge, into), witness


def admissible_pairs(G: BiGraph, budget: int = DEFAULT_BUDGET) -> list[tuple[str, str, CycleWitness]]:
    """All unordered same-side pairs ``(u, v)`` (u before v) with a witness."""
    adj = G.adjacency_masks
    n = G.n
    alive = (1 << n) - 1
    names = G.names
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            common = adj[a] & adj[b]
            if not common:
                continue
            for w in sorted(_bits(common), key=lambda i: names[i]):
                found, _, exhausted = _peripheral_through(adj, alive, a, w, b, budget)
                if exhausted:
                    raise BudgetExhausted(f"peripheral-cycle search through ({names[a]}, {names[w]}, {names[b]}) exceeded budget")
                if found is not None:
                    out.append((names[a], names[b], CycleWitness(names[w], tuple(names[i] for i in found))))
                    break
    return out
