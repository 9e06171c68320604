"""Planarity, outerplanarity and acyclicity, plus the three harnesses that
compare each predicate with the corresponding forbidden bipartite minor.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import networkx as nx

from . import catalog
from .graph import BiGraph, cone
from .minors import BUDGET_EXHAUSTED, CONTAINS, contains_bipartite_minor, verify_certificate
from .subdivision import Subdivision, find_subdivision

K5 = nx.complete_graph(5)


@dataclass
class PlanarityVerdict:
    planar: bool
    kuratowski_witness: Subdivision | None = None
    pattern: str | None = None  # "K33" or "K5"

    def __bool__(self) -> bool:
        return self.planar

    def to_dict(self) -> dict:
        out: dict = {"planar": self.planar}
        if self.kuratowski_witness is not None:
            out["kuratowski"] = {"pattern": self.pattern, **self.kuratowski_witness.to_dict()}
        return out


def _as_nx(G: BiGraph | nx.Graph) -> nx.Graph:
    return G.to_networkx() if isinstance(G, BiGraph) else G


def is_planar(G: BiGraph | nx.Graph, witness: bool = True) -> PlanarityVerdict:
    """Planarity verdict; for non-planar inputs a K_{3,3}- or
    K5-subdivision is located by the independent subdivision search."""
    g = _as_nx(G)
    planar, _ = nx.check_planarity(g)
    if planar or not witness:
        return PlanarityVerdict(planar)
    sub = find_subdivision(g, catalog.K33())
    if sub is not None:
        return PlanarityVerdict(False, sub, "K33")
    sub = find_subdivision(g, K5)
    return PlanarityVerdict(False, sub, "K5" if sub is not None else None)


def is_outerplanar(G: BiGraph) -> bool:
    return nx.check_planarity(cone(G))[0]


def is_forest(G: BiGraph) -> bool:
    return G.m == G.n - len(G.component_masks())


# -- equivalence harnesses -------------------------------------------------

THEOREMS: dict[str, tuple[str, Callable[[], BiGraph], Callable[[BiGraph], bool]]] = {
    "wagner": ("planar", catalog.K33, lambda G: is_planar(G, witness=False).planar),
    "outerplanar": ("outerplanar", catalog.K23, is_outerplanar),
    "forest": ("forest", catalog.K22, is_forest),
}


@dataclass
class HarnessEntry:
    index: int
    graph: BiGraph
    predicate: bool
    verdict: str
    certificate_ok: bool | None
    seconds: float
    states: int

    @property
    def consistent(self) -> bool:
        if self.verdict == BUDGET_EXHAUSTED:
            return True
        # predicate holds exactly when the forbidden minor is absent
        return self.predicate == (self.verdict != CONTAINS) and self.certificate_ok is not False

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "graph": self.graph.to_dict(),
            "predicate": self.predicate,
            "verdict": self.verdict,
            "certificate_ok": self.certificate_ok,
            "consistent": self.consistent,
            "seconds": round(self.seconds, 4),
            "states": self.states,
        }


@dataclass
class HarnessReport:
    theorem: str
    predicate_name: str
    entries: list[HarnessEntry] = field(default_factory=list)
    seconds: float = 0.0
    metadata: dict = field(default_factory=dict)

    @property
    def discrepancies(self) -> list[HarnessEntry]:
        return [e for e in self.entries if not e.consistent]

    @property
    def exhausted(self) -> list[HarnessEntry]:
        return [e for e in self.entries if e.verdict == BUDGET_EXHAUSTED]

    @property
    def ok(self) -> bool:
        return not self.discrepancies and not self.exhausted

    def to_dict(self, verbose: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "predicate": self.predicate_name,
            "graphs": len(self.entries),
            "predicate_true": sum(e.predicate for e in self.entries),
            "minor_found": sum(e.verdict == CONTAINS for e in self.entries),
            "discrepancies": [e.to_dict() for e in self.discrepancies],
            "budget_exhausted": [e.to_dict() for e in self.exhausted],
            "seconds": round(self.seconds, 3),
            "max_graph_seconds": round(max((e.seconds for e in self.entries), default=0.0), 4),
            "max_states": max((e.states for e in self.entries), default=0),
            "metadata": self.metadata,
        }
        if verbose:
            out["entries"] = [e.to_dict() for e in self.entries]
        return out


def _check_one(args: tuple[str, int, BiGraph, int]) -> HarnessEntry:
    theorem, index, G, budget = args
    _, target, predicate = THEOREMS[theorem]
    t0 = time.perf_counter()
    pred = predicate(G)
    outcome = contains_bipartite_minor(G, target(), budget)
    cert_ok = None
    if outcome.certificate is not None:
        cert_ok = verify_certificate(G, outcome.certificate).passed
    return HarnessEntry(index, G, pred, outcome.verdict, cert_ok, time.perf_counter() - t0, outcome.stats.states)


def check_equivalence(theorem: str, corpus: Iterable[BiGraph], budget: int = 10**7, jobs: int = 1, metadata: dict | None = None) -> HarnessReport:
    """Run one harness over ``corpus``; see :data:`THEOREMS` for the names."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}")
    t0 = time.perf_counter()
    report = HarnessReport(theorem, THEOREMS[theorem][0], metadata=dict(metadata or {}))
    work = [(theorem, i, G, budget) for i, G in enumerate(corpus)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            report.entries = list(pool.map(_check_one, work, chunksize=4))
    else:
        report.entries = [_check_one(w) for w in work]
    report.seconds = time.perf_counter() - t0
    return report


def check_wagner_equivalence(corpus: Iterable[BiGraph], budget: int = 10**7, jobs: int = 1) -> HarnessReport:
    return check_equivalence("wagner", corpus, budget, jobs)


def check_outerplanar_equivalence(corpus: Iterable[BiGraph], budget: int = 10**7, jobs: int = 1) -> HarnessReport:
    return check_equivalence("outerplanar", corpus, budget, jobs)


def check_forest_equivalence(corpus: Iterable[BiGraph], budget: int = 10**7, jobs: int = 1) -> HarnessReport:
    return check_equivalence("forest", corpus, budget, jobs)
