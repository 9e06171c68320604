"""Bipartite-minor containment, certificates and certificate replay.

A certificate is an ordered script of vertex deletions, edge deletions and
contractions.  Each contraction carries the witness cycle that makes it
admissible at that step.  :func:`verify_certificate` replays a script and
re-checks every witness; :func:`contains_bipartite_minor` finds scripts by
a breadth-first search over isomorphism classes.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cycles import DEFAULT_BUDGET as CYCLE_BUDGET
from .cycles import CycleWitness, _chordless, _non_separating, _peripheral_through, cycle_mask
from .errors import BudgetExhausted, GraphError, NotACycle
from .graph import BiGraph, _bits, component_masks, find_isomorphism, from_dict
from .subdivision import contains_subdivision, find_subdivision  # noqa: F401  (re-exported)

DELETE_VERTEX, DELETE_EDGE, CONTRACT = "delete_vertex", "delete_edge", "contract"

CONTAINS = "contains"
DOES_NOT_CONTAIN = "does_not_contain"
BUDGET_EXHAUSTED = "budget_exhausted"

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class MinorOp:
    kind: str
    args: tuple[str, ...]
    witness: CycleWitness | None = None

    @classmethod
    def delete_vertex(cls, v: str) -> MinorOp:
        return cls(DELETE_VERTEX, (v,))

    @classmethod
    def delete_edge(cls, u: str, v: str) -> MinorOp:
        return cls(DELETE_EDGE, (u, v))

    @classmethod
    def contract(cls, merge: str, into: str, witness: CycleWitness | None) -> MinorOp:
        return cls(CONTRACT, (merge, into), witness)

    def to_dict(self) -> dict:
        if self.kind == DELETE_VERTEX:
            return {"op": self.kind, "v": self.args[0]}
        if self.kind == DELETE_EDGE:
            return {"op": self.kind, "u": self.args[0], "v": self.args[1]}
        out = {"op": self.kind, "merge": self.args[0], "into": self.args[1]}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> MinorOp:
        kind = data.get("op")
        if kind == DELETE_VERTEX:
            return cls.delete_vertex(str(data["v"]))
        if kind == DELETE_EDGE:
            return cls.delete_edge(str(data["u"]), str(data["v"]))
        if kind == CONTRACT:
            w = data.get("witness")
            return cls.contract(str(data["merge"]), str(data["into"]), CycleWitness.from_dict(w) if w else None)
        raise GraphError(f"unknown op {kind!r}")

    def __str__(self) -> str:
        if self.kind == CONTRACT:
            w = self.witness
            tail = f" via {w.common} on ({' '.join(w.cycle)})" if w else ""
            return f"contract {self.args[0]} into {self.args[1]}{tail}"
        return f"{self.kind} {' '.join(self.args)}"


@dataclass
class MinorCertificate:
    target: BiGraph
    ops: list[MinorOp]
    final_map: dict[str, str] | None = None
    host: BiGraph | None = None

    def to_dict(self) -> dict:
        out: dict = {"target": self.target.to_dict(), "ops": [op.to_dict() for op in self.ops]}
        if self.final_map is not None:
            out["final_map"] = dict(self.final_map)
        if self.host is not None:
            out["host"] = self.host.to_dict()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> MinorCertificate:
        return cls(
            target=from_dict(data["target"]),
            ops=[MinorOp.from_dict(op) for op in data.get("ops", [])],
            final_map=data.get("final_map"),
            host=from_dict(data["host"]) if data.get("host") else None,
        )


# -- replay ----------------------------------------------------------------

@dataclass
class StepResult:
    index: int
    op: MinorOp
    ok: bool
    reason: str | None = None


@dataclass
class VerificationReport:
    steps: list[StepResult] = field(default_factory=list)
    final_ok: bool = False
    final_reason: str | None = None
    end_graph: BiGraph | None = None

    @property
    def passed(self) -> bool:
        return self.final_ok and all(s.ok for s in self.steps)

    @property
    def first_failure(self) -> str | None:
        for s in self.steps:
            if not s.ok:
                return f"step {s.index} ({s.op}): {s.reason}"
        if not self.final_ok:
            return f"final: {self.final_reason}"
        return None

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "steps": [{"index": s.index, "op": s.op.to_dict(), "ok": s.ok, "reason": s.reason} for s in self.steps],
            "final_ok": self.final_ok,
            "final_reason": self.final_reason,
        }


def _consecutive(cycle: Sequence[str], a: str, b: str, c: str) -> bool:
    k = len(cycle)
    for i in range(k):
        if cycle[i] == b:
            prev, nxt = cycle[i - 1], cycle[(i + 1) % k]
            return {prev, nxt} == {a, c}
    return False


def check_contraction(G: BiGraph, op: MinorOp) -> str | None:
    """Why ``op`` is not an admissible contraction of G, or None if it is."""
    merge, into = op.args
    for x in (merge, into):
        if x not in G:
            return f"unknown vertex {x!r}"
    if merge == into:
        return "merge and into are the same vertex"
    if G.is_red(merge) != G.is_red(into):
        return "different sides"
    w = op.witness
    if w is None:
        return "missing witness"
    if w.common not in G or not (G.has_edge(merge, w.common) and G.has_edge(into, w.common)):
        return f"{w.common!r} is not a common neighbour"
    try:
        mask = cycle_mask(G, w.cycle)
    except NotACycle as exc:
        return f"not a cycle: {exc}"
    if not _consecutive(w.cycle, merge, w.common, into):
        return "witness cycle does not contain merge, common, into consecutively"
    adj = G.adjacency_masks
    if not _chordless(adj, mask):
        return "not induced"
    if not _non_separating(adj, (1 << G.n) - 1, mask):
        return "separating"
    return None


def apply_op(G: BiGraph, op: MinorOp) -> BiGraph:
    """Apply an op without witness checks (raises on dead operands)."""
    if op.kind == DELETE_VERTEX:
        return G.delete_vertex(op.args[0])
    if op.kind == DELETE_EDGE:
        return G.delete_edge(*op.args)
    if op.kind == CONTRACT:
        return G.contract(*op.args)
    raise GraphError(f"unknown op {op.kind!r}")


def check_final_map(end: BiGraph, target: BiGraph, final_map: dict[str, str], allow_swap: bool = True) -> str | None:
    if set(final_map) != set(end.names):
        return "final_map does not cover the end graph exactly"
    if sorted(final_map.values()) != sorted(target.names):
        return "final_map is not a bijection onto the target"
    same = all(end.is_red(x) == target.is_red(y) for x, y in final_map.items())
    swapped = all(end.is_red(x) != target.is_red(y) for x, y in final_map.items())
    if not (same or (allow_swap and swapped)):
        return "final_map does not respect the colour classes"
    mapped = {frozenset((final_map[u], final_map[v])) for u, v in end.edges}
    if mapped != {frozenset(e) for e in target.edges}:
        return "final_map is not an edge bijection"
    return None


def verify_certificate(G: BiGraph, cert: MinorCertificate, allow_swap: bool = True) -> VerificationReport:
    """Replay ``cert`` on G, re-validating every step against the live graph."""
    report = VerificationReport()
    cur = G
    for i, op in enumerate(cert.ops, 1):
        reason = None
        if op.kind == CONTRACT:
            reason = check_contraction(cur, op)
        if reason is None:
            try:
                cur = apply_op(cur, op)
            except GraphError as exc:
                reason = str(exc)
        report.steps.append(StepResult(i, op, reason is None, reason))
        if reason is not None:
            report.final_reason = "replay stopped at a failing step"
            return report
    report.end_graph = cur
    if cert.final_map is not None:
        report.final_reason = check_final_map(cur, cert.target, cert.final_map, allow_swap)
    elif find_isomorphism(cur, cert.target, allow_swap) is None:
        report.final_reason = "end graph is not isomorphic to the target"
    report.final_ok = report.final_reason is None
    return report


def compose(F: BiGraph, outer: MinorCertificate, inner: MinorCertificate) -> MinorCertificate:
    """Chain ``G <=_b F`` (outer) with ``H <=_b G`` (inner) into ``H <=_b F``.

    The outer certificate's end graph is identified with G through its
    final map (computed if absent), and the inner script is renamed
    accordingly.
    """
    end = F
    for op in outer.ops:
        end = apply_op(end, op)
    fmap = outer.final_map or find_isomorphism(end, outer.target)
    if fmap is None:
        raise GraphError("outer certificate does not end at its target")
    back = {g: e for e, g in fmap.items()}

    def ren(x: str) -> str:
        return back[x]

    ops = list(outer.ops)
    for op in inner.ops:
        w = op.witness
        if w is not None:
            w = CycleWitness(ren(w.common), tuple(ren(x) for x in w.cycle))
        ops.append(MinorOp(op.kind, tuple(ren(x) for x in op.args), w))
    final = None
    if inner.final_map is not None:
        final = {ren(x): y for x, y in inner.final_map.items()}
    return MinorCertificate(inner.target, ops, final, F)


# -- subgraph matching -----------------------------------------------------

def _embed(G: BiGraph, H: BiGraph, swap: bool) -> dict[str, str] | None:
    """Injective H -> G map sending edges to edges and reds to reds
    (reds to blues when ``swap``)."""
    if H.n == 0:
        return {}
    gadj, hadj = G.adjacency_masks, H.adjacency_masks
    full = (1 << G.n) - 1
    g_red = G.red_mask if not swap else full & ~G.red_mask
    gdeg = [a.bit_count() for a in gadj]
    hdeg = [a.bit_count() for a in hadj]
    deg_mask: dict[int, int] = {}
    for d in set(hdeg):
        m = 0
        for i, k in enumerate(gdeg):
            if k >= d:
                m |= 1 << i
        deg_mask[d] = m

    # most-constrained-first ordering of pattern vertices
    order: list[int] = []
    placed = 0
    remaining = set(range(H.n))
    while remaining:
        x = max(remaining, key=lambda i: ((hadj[i] & placed).bit_count(), hdeg[i], -i))
        order.append(x)
        placed |= 1 << x
        remaining.discard(x)

    base = []
    for x in order:
        side = g_red if H.red_mask >> x & 1 else full & ~g_red
        base.append(side & deg_mask[hdeg[x]])
    image = [-1] * H.n
    # prefer the identically named vertex, so G == H embeds as the identity
    same_name = [G.index(x) if x in G else -1 for x in H.names]

    def go(k: int, used: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        cand = base[k] & ~used
        for y in _bits(hadj[x]):
            if image[y] >= 0:
                cand &= gadj[image[y]]
        first = same_name[x]
        if first >= 0 and cand >> first & 1:
            cand &= ~(1 << first)
            tries = [first, *_bits(cand)]
        else:
            tries = _bits(cand)
        for gx in tries:
            image[x] = gx
            if go(k + 1, used | (1 << gx)):
                return True
        image[x] = -1
        return False

    if not go(0, 0):
        return None
    return {H.names[x]: G.names[image[x]] for x in range(H.n)}


def contains_subgraph(G: BiGraph, H: BiGraph, allow_swap: bool = True) -> dict[str, str] | None:
    """A colour-respecting injective map V(H) -> V(G) preserving edges."""
    found = _embed(G, H, False)
    if found is None and allow_swap:
        found = _embed(G, H, True)
    return found


# -- search ------------------------------------------------------------------

@dataclass
class SearchStats:
    states: int = 0
    expanded: int = 0
    dedupe_hits: int = 0
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"states": self.states, "expanded": self.expanded, "dedupe_hits": self.dedupe_hits, "seconds": round(self.seconds, 4)}


@dataclass
class SearchOutcome:
    verdict: str
    certificate: MinorCertificate | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def contains(self) -> bool:
        return self.verdict == CONTAINS

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict, "stats": self.stats.to_dict()}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        return out


class _Reducer:
    """Normalises search states.

    When the target is connected, each component of a state is searched on
    its own; when the target has minimum degree >= 2, vertices of degree
    <= 1 are stripped (they can never lie on a cycle, and removing them
    never spoils a witness).  The removed names are kept so that the
    deletions appear in the certificate.
    """

    def __init__(self, H: BiGraph, allow_swap: bool):
        degs = [a.bit_count() for a in H.adjacency_masks]
        self.core = H.n > 0 and min(degs) >= 2
        self.split = H.n > 0 and len(H.component_masks()) == 1
        hr, hb = H.side_sizes
        self.need_sides = {(hr, hb), (hb, hr)} if allow_swap else {(hr, hb)}
        self.need_n, self.need_m = H.n, H.m

    def feasible(self, G: BiGraph) -> bool:
        if G.n < self.need_n or G.m < self.need_m:
            return False
        r, b = G.side_sizes
        return any(r >= a and b >= c for a, c in self.need_sides)

    def __call__(self, G: BiGraph) -> list[tuple[tuple[str, ...], BiGraph]]:
        adj = G.adjacency_masks
        alive = (1 << G.n) - 1
        if self.core:
            while True:
                low = 0
                for i in _bits(alive):
                    if (adj[i] & alive).bit_count() <= 1:
                        low |= 1 << i
                if not low:
                    break
                alive &= ~low
        parts = component_masks(adj, alive) if self.split else [alive]
        out = []
        names = G.names
        for part in parts:
            if part == (1 << G.n) - 1:
                sub = G
            else:
                sub = G.induced_subgraph(names[i] for i in _bits(part))
            if not self.feasible(sub):
                continue
            removed = tuple(names[i] for i in range(G.n) if not part >> i & 1)
            out.append((removed, sub))
        return out


def _children(S: BiGraph, cycle_budget: int) -> Iterable[tuple[MinorOp, BiGraph]]:
    adj = S.adjacency_masks
    names = S.names
    n = S.n
    alive = (1 << n) - 1
    for a in range(n):
        for b in range(a + 1, n):
            common = adj[a] & adj[b]
            if not common:
                continue
            for w in sorted(_bits(common), key=lambda i: names[i]):
                found, _, exhausted = _peripheral_through(adj, alive, a, w, b, cycle_budget)
                if exhausted:
                    raise BudgetExhausted("peripheral-cycle search exceeded its budget")
                if found is not None:
                    witness = CycleWitness(names[w], tuple(names[i] for i in found))
                    yield MinorOp.contract(names[a], names[b], witness), S.contract(names[a], names[b])
                    break
    for k in range(n):
        yield MinorOp.delete_vertex(names[k]), S._without(k)
    for u, v in S.edges:
        yield MinorOp.delete_edge(u, v), S.delete_edge(u, v)


def _finish(path_ops: list[MinorOp], S: BiGraph, H: BiGraph, emb: dict[str, str]) -> tuple[list[MinorOp], dict[str, str]]:
    ops = list(path_ops)
    keep = set(emb.values())
    for x in S.names:
        if x not in keep:
            ops.append(MinorOp.delete_vertex(x))
    wanted = {frozenset((emb[u], emb[v])) for u, v in H.edges}
    for u, v in S.edges:
        if u in keep and v in keep and frozenset((u, v)) not in wanted:
            ops.append(MinorOp.delete_edge(u, v))
    return ops, {g: h for h, g in emb.items()}


def contains_bipartite_minor(
    G: BiGraph,
    H: BiGraph,
    budget: int = DEFAULT_BUDGET,
    allow_swap: bool = True,
    cycle_budget: int = CYCLE_BUDGET,
) -> SearchOutcome:
    """Decide whether H is a bipartite minor of G.

    Breadth-first over isomorphism classes, so the first certificate found
    uses the fewest search moves.  ``budget`` caps the number of distinct
    states stored; running out yields the ``budget_exhausted`` verdict and
    never a negative answer.
    """
    t0 = time.perf_counter()
    stats = SearchStats()
    reduce = _Reducer(H, allow_swap)
    parent: dict[bytes, tuple[bytes | None, MinorOp | None, tuple[str, ...]]] = {}
    graphs: dict[bytes, BiGraph] = {}
    queue: deque[bytes] = deque()

    def path_to(key: bytes) -> list[MinorOp]:
        chunks = []
        k: bytes | None = key
        while k is not None:
            pk, op, removed = parent[k]
            chunks.append([MinorOp.delete_vertex(x) for x in removed])
            if op is not None:
                chunks.append([op])
            k = pk
        return [op for chunk in reversed(chunks) for op in chunk]

    def done(verdict: str, cert: MinorCertificate | None = None) -> SearchOutcome:
        stats.states = len(graphs)
        stats.seconds = time.perf_counter() - t0
        return SearchOutcome(verdict, cert, stats)

    def admit(S: BiGraph, pkey: bytes | None, op: MinorOp | None, removed: tuple[str, ...]) -> MinorCertificate | None:
        key = S.canonical_key(allow_swap)
        if key in graphs:
            stats.dedupe_hits += 1
            return None
        graphs[key] = S
        parent[key] = (pkey, op, removed)
        emb = contains_subgraph(S, H, allow_swap)
        if emb is not None:
            ops, fmap = _finish(path_to(key), S, H, emb)
            return MinorCertificate(H, ops, fmap, G)
        queue.append(key)
        return None

    if H.n == 0:
        return done(CONTAINS, MinorCertificate(H, [MinorOp.delete_vertex(x) for x in G.names], {}, G))
    try:
        for removed, S in reduce(G):
            cert = admit(S, None, None, removed)
            if cert is not None:
                return done(CONTAINS, cert)
        while queue:
            if len(graphs) > budget:
                return done(BUDGET_EXHAUSTED)
            key = queue.popleft()
            stats.expanded += 1
            for op, child in _children(graphs[key], cycle_budget):
                for removed, S in reduce(child):
                    cert = admit(S, key, op, removed)
                    if cert is not None:
                        return done(CONTAINS, cert)
    except BudgetExhausted:
        return done(BUDGET_EXHAUSTED)
    return done(DOES_NOT_CONTAIN)


def find_minor_certificate(G: BiGraph, H: BiGraph, budget: int = DEFAULT_BUDGET, allow_swap: bool = True) -> MinorCertificate | None:
    """Shortest-search certificate for H <=_b G, or None when there is none."""
    outcome = contains_bipartite_minor(G, H, budget, allow_swap)
    if outcome.verdict == BUDGET_EXHAUSTED:
        raise BudgetExhausted(f"minor search exceeded {budget} states")
    return outcome.certificate
