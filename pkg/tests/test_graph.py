from __future__ import annotations

import json
import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from bipminor import catalog
from bipminor.errors import (
    DifferentSides,
    DuplicateEdge,
    DuplicateVertex,
    MonochromaticEdge,
    SameVertex,
    SelfLoop,
    UnknownEdge,
    UnknownEndpoint,
    UnknownVertex,
)
from bipminor.graph import (
    canonical_key,
    components,
    cone,
    contract,
    delete_edge,
    delete_vertex,
    format_text,
    from_json,
    induced_subgraph,
    is_isomorphic,
    loads,
    new_graph,
    parse_text,
    to_json,
)

from oracles import as_triple, count_components, isomorphic_triples
from strategies import bigraphs


def test_k22_construction():
    G = new_graph(["a1", "a2"], ["b1", "b2"], [(a, b) for a in ("a1", "a2") for b in ("b1", "b2")])
    assert (G.n, G.m) == (4, 4)
    assert G.red == ("a1", "a2") and G.blue == ("b1", "b2")


def test_k33_construction():
    G = new_graph(["v1", "v2", "v3"], ["v4", "v5", "v6"], [(f"v{i}", f"v{j}") for i in (1, 2, 3) for j in (4, 5, 6)])
    assert is_isomorphic(G, catalog.K33(), allow_swap=False)
    assert G.m == 9


@pytest.mark.parametrize(
    "reds, blues, edges, exc",
    [
        (["a1", "a2"], ["b1"], [("a1", "a2")], MonochromaticEdge),
        (["a"], ["a"], [], DuplicateVertex),
        (["a"], ["b"], [("a", "c")], UnknownEndpoint),
        (["a"], ["b"], [("a", "a")], SelfLoop),
        (["a"], ["b"], [("a", "b"), ("b", "a")], DuplicateEdge),
    ],
)
def test_new_graph_errors(reds, blues, edges, exc):
    with pytest.raises(exc):
        new_graph(reds, blues, edges)


def test_delete_isolated_vertex():
    G = catalog.K22().add_vertex("z", "red")
    H = delete_vertex(G, "z")
    assert H.n == G.n - 1 and H.edges == G.edges


def test_k22_delete_vertex_gives_path():
    H = delete_vertex(catalog.K22(), "b1")
    assert sorted(H.names) == ["a1", "a2", "b2"]
    assert H.degree("b2") == 2 and H.m == 2


def test_delete_unknown_vertex():
    with pytest.raises(UnknownVertex):
        delete_vertex(catalog.K22(), "zz")


def test_delete_edge():
    H = catalog.K33_minus_edge()
    assert (H.n, H.m) == (6, 8)
    G = delete_edge(catalog.K22(), "a1", "b1")
    assert is_isomorphic(G, catalog.path(4))
    with pytest.raises(UnknownEdge):
        delete_edge(G, "a1", "b1")


def test_contract_k22_reds():
    H = contract(catalog.K22(), "a1", "a2")
    assert set(H.names) == {"a2", "b1", "b2"}
    assert set(H.neighbors("a2")) == {"b1", "b2"} and H.m == 2


def test_contract_c8():
    C8 = catalog.cycle(8)
    H = contract(C8, "a1", "a2")
    assert set(H.neighbors("a2")) == {"b1", "b2", "b4"}
    # six-cycle plus a pendant edge at a2
    expected = catalog.cycle(6).add_vertex("x", "blue", ["a1"])
    assert is_isomorphic(H, expected)


def test_contract_errors():
    with pytest.raises(DifferentSides):
        contract(catalog.K22(), "a1", "b1")
    with pytest.raises(SameVertex):
        contract(catalog.K22(), "a1", "a1")


def test_c8_contract_then_delete_pendant_gives_c6():
    H = contract(catalog.cycle(8), "a1", "a2")
    pendant = [v for v in H.names if H.degree(v) == 1]
    assert len(pendant) == 1
    assert is_isomorphic(delete_vertex(H, pendant[0]), catalog.cycle(6))


def test_induced_subgraph():
    G = catalog.K33()
    assert induced_subgraph(G, G.names) == G
    single = induced_subgraph(G, ["v1"])
    assert (single.n, single.m) == (1, 0)


def test_induced_subgraph_case3():
    G = contract(catalog.build_G(2), "v34", "v35")
    # the merged vertex keeps the surviving name v35
    sub = induced_subgraph(G, ["v1", "v2", "v35", "v3", "v4", "v5"])
    assert is_isomorphic(sub, catalog.K33(), allow_swap=False)


def test_cone():
    K = cone(catalog.K22())
    assert (K.number_of_nodes(), K.number_of_edges()) == (5, 8)
    T = cone(catalog.path(2))
    assert nx.is_isomorphic(T, nx.cycle_graph(3))
    W = cone(catalog.cycle(6))
    assert (W.number_of_nodes(), W.number_of_edges()) == (7, 12)
    assert nx.is_isomorphic(W, nx.wheel_graph(7))
    assert nx.check_planarity(W)[0]


def test_canonical_key_examples():
    G = catalog.K33()
    names = list(G.names)
    rng = random.Random(7)
    shuffled = names[:]
    rng.shuffle(shuffled)
    H = G.relabel(dict(zip(names, [f"w{x}" for x in shuffled])))
    assert canonical_key(G) == canonical_key(H)
    assert canonical_key(catalog.K22()) != canonical_key(catalog.path(4))


def test_canonical_key_gij_symmetry():
    G = catalog.build_Gij(3, 3)
    base = canonical_key(G)
    X = ["1", "2", "3"]
    for perm in permutations(X):
        m = dict(zip(X, perm))

        def ren(name: str) -> str:
            return "v" + "".join(sorted(m.get(c, c) for c in name[1:]))

        H = G.relabel({v: ren(v) for v in G.names})
        assert canonical_key(H) == base


def test_is_isomorphic_examples():
    G = catalog.build_G(5)
    assert is_isomorphic(G, G)
    K = catalog.K22()
    assert is_isomorphic(K, K.swap_colors())
    assert not is_isomorphic(catalog.K33(), catalog.K33_minus_edge())


def test_strict_colours_distinguish_k23():
    K = catalog.K23()
    assert not is_isomorphic(K, K.swap_colors(), allow_swap=False)
    assert is_isomorphic(K, K.swap_colors(), allow_swap=True)
    assert canonical_key(K, allow_swap=False) != canonical_key(K.swap_colors(), allow_swap=False)


def test_components():
    assert components(catalog.cycle(8))[0] == 1
    two = new_graph(["a", "c"], ["b", "d"], [("a", "b"), ("c", "d")])
    count, parts = components(two)
    assert count == 2 and sorted(map(sorted, parts)) == [["a", "b"], ["c", "d"]]
    assert components(new_graph([], [], []))[0] == 0


def test_catalog_key_agrees_with_isomorphism():
    graphs = [catalog.build(n) for n in catalog.names()]
    for i, G in enumerate(graphs):
        for H in graphs[i:]:
            assert (canonical_key(G) == canonical_key(H)) == is_isomorphic(G, H)


def test_json_and_text_round_trip():
    G = catalog.build_G(4)
    assert from_json(to_json(G)) == G
    assert parse_text(format_text(G)) == G
    assert loads(to_json(G)) == G and loads(format_text(G)) == G
    data = json.loads(to_json(G))
    assert set(data) >= {"red", "blue", "edges"}


# -- properties --------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(bigraphs(max_side=4))
def test_canonical_key_matches_brute_isomorphism(G):
    rng = random.Random(G.m * 31 + G.n)
    H = G.relabel({v: f"z{i}" for i, v in enumerate(rng.sample(G.names, G.n))})
    if rng.random() < 0.5:
        H = H.swap_colors()
    assert canonical_key(G) == canonical_key(H)
    # a random edge flip: keys equal iff the brute-force oracle says isomorphic
    pairs = [(x, y) for x in G.red for y in G.blue]
    if pairs:
        x, y = rng.choice(pairs)
        F = G.delete_edge(x, y) if G.has_edge(x, y) else G.add_edge(x, y)
        same = canonical_key(F) == canonical_key(G)
        assert same == isomorphic_triples(as_triple(F), as_triple(G))


@settings(max_examples=150, deadline=None)
@given(bigraphs(max_side=5))
def test_contraction_edge_identity(G):
    for side in (G.red, G.blue):
        for u, v in permutations(side, 2):
            H = contract(G, u, v)
            common = set(G.neighbors(u)) & set(G.neighbors(v))
            assert H.m == G.m - len(common)
            assert H.n == G.n - 1
            assert set(H.neighbors(v)) == set(G.neighbors(u)) | set(G.neighbors(v))


@settings(max_examples=150, deadline=None)
@given(bigraphs(max_side=5))
def test_operations_preserve_validity(G):
    outs = [delete_vertex(G, v) for v in G.names]
    outs += [delete_edge(G, u, v) for u, v in G.edges]
    for G2 in outs:
        again = new_graph(G2.red, G2.blue, G2.edges)
        assert again == G2


@settings(max_examples=150, deadline=None)
@given(bigraphs(max_side=5))
def test_components_match_oracle(G):
    count, parts = components(G)
    assert count == count_components(G.names, [frozenset(e) for e in G.edges])
    assert sorted(v for p in parts for v in p) == sorted(G.names)
