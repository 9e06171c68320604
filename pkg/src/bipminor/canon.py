"""Canonical labelling of small vertex-coloured graphs.

Graphs are given as adjacency bitmasks over vertices ``0..n-1`` together
with an ordered initial partition (a list of cells).  The canonical form is
the lexicographically smallest relabelled adjacency sequence over all
leaves of the individualisation-refinement tree.  Subtrees that are images
of each other under an already discovered automorphism are skipped, which
keeps highly symmetric inputs (K_{3,3}, cubes, glued gadgets) cheap.
"""

from __future__ import annotations

from typing import Sequence


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of ``cells``.

    Cells are split by the number of neighbours each vertex has in every
    current cell; sub-cells keep the order of their signatures, so the
    result depends only on the isomorphism type of (graph, partition).
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for x in cell:
                m |= 1 << x
            masks.append(m)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for x in cell:
                a = adj[x]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(x)
            if len(groups) == 1:
                out.append(cell)
            else:
                for sig in sorted(groups):
                    out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _certificate(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, x in enumerate(order):
        pos[x] = i
    cert = []
    for x in order:
        a, m = adj[x], 0
        while a:
            low = a & -a
            m |= 1 << pos[low.bit_length() - 1]
            a ^= low
        cert.append(m)
    return tuple(cert)


class _Orbits:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_form(adj: Sequence[int], cells: list[list[int]]) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(certificate, order)`` for a coloured graph.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    Two inputs get equal certificates iff some bijection maps one graph onto
    the other, edges onto edges and the k-th cell onto the k-th cell.
    """
    n = len(adj)
    if n == 0:
        return (), []
    best: list = [None, None]  # certificate, order
    automorphisms: list[list[int]] = []

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            elif cert == best[0]:
                # order -> best order is an automorphism
                gamma = [0] * n
                for a, b in zip(order, best[1]):
                    gamma[a] = b
                automorphisms.append(gamma)
            return
        # first smallest non-trivial cell
        target = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        explored: list[int] = []
        for x in cells[target]:
            if explored:
                orbits = _Orbits(n)
                for g in automorphisms:
                    if all(g[p] == p for p in prefix):
                        for a in range(n):
                            orbits.union(a, g[a])
                rx = orbits.find(x)
                if any(orbits.find(y) == rx for y in explored):
                    continue
            explored.append(x)
            rest = [y for y in cells[target] if y != x]
            child = cells[:target] + [[x], rest] + cells[target + 1:]
            search(child, prefix + [x])

    search([list(c) for c in cells if c], [])
    return best[0], best[1]


def encode(n: int, cell_sizes: Sequence[int], cert: Sequence[int]) -> bytes:
    """Pack a certificate into a byte string (stable across runs)."""
    width = max(1, (n + 7) // 8)
    head = bytes([n, len(cell_sizes)]) + bytes(cell_sizes)
    return head + b"".join(m.to_bytes(width, "little") for m in cert)
