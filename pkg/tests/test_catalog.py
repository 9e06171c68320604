from __future__ import annotations

import pytest

from bipminor import catalog
from bipminor.errors import BadParameter
from bipminor.graph import is_isomorphic, new_graph
from bipminor.minors import MinorOp, verify_certificate


def test_g5_counts():
    G = catalog.build_G(5)
    assert (G.n, G.m) == (15, 20)
    assert G.side_sizes == (5, 10)
    assert is_isomorphic(G, catalog.barycentric_K5(), allow_swap=False)


def test_g2_names():
    G = catalog.build_G(2)
    assert set(G.red) == {"v1", "v2", "v34", "v35", "v45"}
    # v1v2 is red-red, so it is subdivided by a blue v12 as well
    assert set(G.blue) == {"v3", "v4", "v5", "v12"}
    assert (G.n, G.m) == (9, 6 + 2 * 4)


def test_g4_colouring():
    G = catalog.build_G(4)
    assert not G.is_red("v5")
    assert {"v12", "v13", "v14", "v23", "v24", "v34"} <= set(G.blue)


def test_gij_examples():
    assert is_isomorphic(catalog.build_Gij(3, 0), catalog.K33(), allow_swap=False)
    G = catalog.build_Gij(3, 3)
    assert (G.n, G.m) == (15, 18)
    G31 = catalog.build_Gij(3, 1)
    assert not G31.is_red("v5") and not G31.is_red("v6") and G31.is_red("v4")


@pytest.mark.parametrize("name", catalog.names())
def test_catalog_graphs_validate(name):
    G = catalog.build(name)
    assert new_graph(G.red, G.blue, G.edges) == G


@pytest.mark.parametrize("n", range(2, 11))
def test_gadget_counts(n):
    G = catalog.build_gadget(n)
    assert (G.n, G.m) == (4 * n + 2, 8 * n)


def test_gadget_needs_two_copies():
    with pytest.raises(BadParameter):
        catalog.build_gadget(1)


def test_script_details():
    scripts = catalog.appendix_scripts()
    assert len(scripts) == 9
    ops = scripts["G_(3,3)"].ops
    deletes = [op for op in ops if op.kind == "delete_vertex"]
    assert deletes[:2] == [MinorOp.delete_vertex("v16"), MinorOp.delete_vertex("v25")]
    third = scripts["G_(2,1)"].ops[2]
    assert third.witness.cycle == ("v1", "v4", "v34", "v2", "v5", "v15")
    assert scripts["G_(3,0)"].ops == []


def test_all_scripts_verify():
    for name, cert in catalog.appendix_scripts().items():
        report = verify_certificate(cert.host, cert)
        assert report.passed, (name, report.first_failure)
        assert is_isomorphic(report.end_graph, catalog.K33(), allow_swap=False)


def test_build_unknown():
    with pytest.raises(BadParameter):
        catalog.build("nonsense")
