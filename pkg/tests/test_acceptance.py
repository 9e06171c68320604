"""Acceptance criteria, one test each.

The terminal summary (see conftest) prints a PASS/FAIL line per criterion;
run with ``-s`` to also see the per-criterion detail lines.
"""

from __future__ import annotations

import random
from functools import lru_cache

import pytest

from bipminor import catalog
from bipminor.cycles import admissible_contract, admissible_pairs
from bipminor.errors import TheoremViolation
from bipminor.generate import all_bipartite_graphs, all_colored_graphs, random_corpus
from bipminor.graph import is_isomorphic
from bipminor.laman import enumerate_laman, is_laman, reduce_step
from bipminor.minors import CONTAINS, MinorOp, apply_op, contains_bipartite_minor, find_minor_certificate, verify_certificate
from bipminor.planarity import (
    check_forest_equivalence,
    check_outerplanar_equivalence,
    check_wagner_equivalence,
    is_outerplanar,
    is_planar,
)
from bipminor.subdivision import contains_subdivision

from oracles import brute_laman

BUDGET = 10**7


@lru_cache(maxsize=1)
def small_corpus():
    return all_bipartite_graphs(8)


def _summary(report) -> str:
    return (f"{len(report.entries)} graphs, {len(report.discrepancies)} discrepancies, "
            f"{len(report.exhausted)} exhausted, {report.seconds:.1f}s")


@pytest.mark.acceptance(1, "appendix replay, nine K33 cases")
def test_appendix_replay():
    failures = {}
    for name, cert in catalog.appendix_scripts().items():
        report = verify_certificate(cert.host, cert, allow_swap=False)
        if not report.passed:
            failures[name] = report.first_failure
    print(f"\n[1] {9 - len(failures)}/9 appendix cases verified")
    assert not failures, failures


@pytest.mark.acceptance(2, "Wagner equivalence, exhaustive <= 8 plus 500 random 9-12")
def test_wagner_equivalence():
    exhaustive = check_wagner_equivalence(small_corpus(), BUDGET)
    corpus = list(random_corpus(500, 9, 12, 0.6, seed=2024, min_side=3))
    sampled = check_wagner_equivalence(corpus, BUDGET)
    print(f"\n[2] exhaustive: {_summary(exhaustive)}; random: {_summary(sampled)}; "
          f"non-planar random: {sum(not e.predicate for e in sampled.entries)}")
    assert len(exhaustive.entries) == 254
    assert exhaustive.ok and sampled.ok


@pytest.mark.acceptance(3, "outerplanar equivalence <= 8 and strict K23 certificates on the nine H graphs")
def test_outerplanar_equivalence():
    report = check_outerplanar_equivalence(small_corpus(), BUDGET)
    missing = []
    names = [f"H_({i})" for i in catalog.H_SINGLES] + [f"H_({i},{j})" for i, j in catalog.H_PAIRS]
    for name in names:
        G = catalog.build(name)
        cert = find_minor_certificate(G, catalog.K23(), BUDGET, allow_swap=False)
        report3 = verify_certificate(G, cert, allow_swap=False) if cert else None
        if not (report3 and report3.passed and report3.end_graph.side_sizes == (3, 2)):
            missing.append(name)
    print(f"\n[3] exhaustive: {_summary(report)}; "
          f"three-red/two-blue K23 certificates: {len(names) - len(missing)}/{len(names)}"
          + (f", missing {missing}" if missing else ""))
    assert report.ok
    assert not missing, f"no K23 with three red and two blue vertices in {missing}"


@pytest.mark.acceptance(4, "forest equivalence <= 8")
def test_forest_equivalence():
    report = check_forest_equivalence(small_corpus(), BUDGET)
    print(f"\n[4] exhaustive: {_summary(report)}")
    assert report.ok


@pytest.mark.acceptance(5, "gadget counts, Laman, non-planar, K33 minor")
def test_gadget_properties():
    for n in range(2, 6):
        G = catalog.build_gadget(n)
        assert (G.n, G.m) == (4 * n + 2, 8 * n)
        assert is_laman(G).verdict
        assert not is_planar(G, witness=False).planar
    G = catalog.build_gadget(2)
    out = contains_bipartite_minor(G, catalog.K33(), BUDGET)
    assert out.verdict == CONTAINS
    assert verify_certificate(G, out.certificate).passed
    print(f"\n[5] gadgets n=2..5 ok; n=2 K33 certificate with {len(out.certificate.ops)} ops")


@pytest.mark.acceptance(6, "barycentric K5: no K33 subdivision, but K33 is a bipartite minor")
def test_barycentric_remark():
    B = catalog.barycentric_K5()
    assert not contains_subdivision(B, catalog.K33())
    cert = catalog.appendix_scripts()["G_(5)"]
    assert is_isomorphic(cert.host, B, allow_swap=False)
    assert verify_certificate(B, cert).passed
    print("\n[6] no K33 subdivision; Case 1 certificate verifies")


def _brute_laman_keys(max_vertices: int) -> set[bytes]:
    keys = set()
    for n in range(4, max_vertices + 1):
        for r in range(2, n // 2 + 1):
            for G in all_colored_graphs(r, n - r, 2 * n - 4):
                if brute_laman(G):
                    keys.add(G.canonical_key())
    return keys


@pytest.mark.acceptance(7, "reduction sweep over enumerate_laman(10); enumeration <= 8 equals brute force")
def test_reduction_sweep():
    graphs = enumerate_laman(10)
    checked, empty = 0, []
    for G in graphs:
        degs = G.degrees()
        if min(degs.values()) != 3:
            continue
        for v, d in degs.items():
            if d != 3:
                continue
            try:
                moves = reduce_step(G, v)
            except TheoremViolation:
                moves = []
            checked += 1
            if not moves:
                empty.append((G.to_dict(), v))
    small = {G.canonical_key() for G in graphs if G.n <= 8}
    brute = _brute_laman_keys(8)
    print(f"\n[7] {len(graphs)} Laman graphs <= 10; {checked} degree-3 vertices swept, "
          f"{len(empty)} without a move; <= 8: {len(small)} enumerated vs {len(brute)} brute force")
    assert not empty
    assert small == brute


@pytest.mark.acceptance(8, "degree lemmas over Laman graphs <= 10")
def test_degree_lemmas():
    graphs = enumerate_laman(10)
    deg2 = 0
    for G in graphs:
        degs = G.degrees()
        assert 2 <= min(degs.values()) <= 3
        if G.side_sizes == (2, 2) and G.m == 4:
            continue
        for v, d in degs.items():
            if d == 2:
                deg2 += 1
                H = G.delete_vertex(v)
                assert min(H.side_sizes) >= 2 and is_laman(H).verdict
    print(f"\n[8] {len(graphs)} graphs, {deg2} degree-2 deletions stay Laman")


@pytest.mark.acceptance(9, "C8 contraction gives C6 plus a pendant edge")
def test_c8_contraction():
    H, witness = admissible_contract(catalog.cycle(8), "a1", "a2")
    expected = catalog.cycle(6).add_vertex("x", "blue", ["a1"])
    assert is_isomorphic(H, expected, allow_swap=False)
    print(f"\n[9] witness through {witness.common}: {' '.join(witness.cycle)}")


def _random_op(G, rng: random.Random):
    pairs = admissible_pairs(G)
    kind = rng.random()
    if pairs and kind < 0.6:
        u, v, w = rng.choice(pairs)
        return MinorOp.contract(u, v, w)
    if G.m and kind < 0.8:
        return MinorOp.delete_edge(*rng.choice(G.edges))
    return MinorOp.delete_vertex(rng.choice(G.names))


def _hosts(predicate, count: int, edge_prob: float, seed: int):
    out = []
    for G in random_corpus(20 * count, 6, 11, edge_prob, seed, min_side=2):
        if predicate(G):
            out.append(G)
            if len(out) == count:
                break
    return out


@pytest.mark.acceptance(10, "closure under admissible ops, certificate soundness, contraction edge identity")
def test_property_suites():
    rng = random.Random(2024)
    planar = lambda G: is_planar(G, witness=False).planar  # noqa: E731
    losses, contractions = 0, 0
    for predicate, prob, seed in ((planar, 0.45, 1), (is_outerplanar, 0.3, 2)):
        hosts = _hosts(predicate, 200, prob, seed)
        assert len(hosts) == 200
        for G in hosts:
            for _ in range(10):
                if G.n == 0:
                    break
                op = _random_op(G, rng)
                contractions += op.kind == "contract"
                G = apply_op(G, op)
                if not predicate(G):
                    losses += 1
                    break

    unsound, found = 0, 0
    for G in random_corpus(200, 4, 10, 0.55, seed=3, min_side=2):
        for H in (catalog.K22(), catalog.K23(), catalog.K33()):
            out = contains_bipartite_minor(G, H, BUDGET)
            if out.verdict == CONTAINS:
                found += 1
                unsound += not verify_certificate(G, out.certificate).passed

    bad_identity, done = 0, 0
    corpus = random_corpus(5000, 5, 12, 0.5, seed=4, min_side=2)
    while done < 1000:
        G = next(corpus)
        pairs = admissible_pairs(G)
        if not pairs:
            continue
        u, v, _ = rng.choice(pairs)
        H, _ = admissible_contract(G, u, v)
        common = set(G.neighbors(u)) & set(G.neighbors(v))
        bad_identity += H.m != G.m - len(common)
        done += 1
    print(f"\n[10] {losses} closure losses over 400 hosts ({contractions} contractions); "
          f"{unsound}/{found} unsound certificates; {bad_identity}/{done} identity failures")
    assert losses == 0 and unsound == 0 and bad_identity == 0
