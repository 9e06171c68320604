from __future__ import annotations

import io
import json

import pytest

from bipminor import catalog
from bipminor.cli import main
from bipminor.graph import format_text, from_dict, to_json


def run(capsys, argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def graph_file(tmp_path):
    def write(G, text: bool = False):
        p = tmp_path / ("g.txt" if text else "g.json")
        p.write_text(format_text(G) if text else to_json(G))
        return str(p)

    return write


def test_verify_appendix(capsys):
    code, out, _ = run(capsys, ["verify-appendix"])
    assert code == 0
    data = json.loads(out)
    assert len(data["cases"]) == 9 and all(c["passed"] for c in data["cases"].values())


def test_check_laman_gadget(capsys, graph_file):
    code, out, _ = run(capsys, ["check-laman", graph_file(catalog.build_gadget(2))])
    assert code == 0 and json.loads(out)["verdict"] is True
    code, _, _ = run(capsys, ["check-laman", graph_file(catalog.K33())])
    assert code == 1


def test_check_minor_on_tree(capsys, graph_file):
    code, out, _ = run(capsys, ["check-minor", "--target", "K33", graph_file(catalog.path(5), text=True)])
    assert code == 1 and json.loads(out)["verdict"] == "does_not_contain"


def test_check_minor_stdin_and_budget(capsys, monkeypatch):
    code, out, _ = run(capsys, ["check-minor", "--target", "K33"], to_json(catalog.build_G(5)), monkeypatch)
    assert code == 0
    code, out, _ = run(capsys, ["check-minor", "--target", "K33", "--budget", "2"], to_json(catalog.build_G(5)), monkeypatch)
    assert code == 3


def test_certificate_round_trip(capsys, graph_file, tmp_path):
    g = graph_file(catalog.cycle(8))
    code, out, _ = run(capsys, ["find-certificate", "--target", "K22", g])
    assert code == 0
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    code, out, _ = run(capsys, ["verify-certificate", "--cert", str(cert), g])
    assert code == 0 and json.loads(out)["passed"] is True


def test_planarity_commands(capsys, graph_file):
    code, out, _ = run(capsys, ["check-planar", graph_file(catalog.K33())])
    assert code == 1
    assert json.loads(out)["kuratowski"]["pattern"] == "K33"
    assert run(capsys, ["check-outerplanar", graph_file(catalog.cycle(8))])[0] == 0
    assert run(capsys, ["check-forest", graph_file(catalog.K22())])[0] == 1


def test_enumerate_jsonl(capsys):
    code, out, _ = run(capsys, ["enumerate-laman", "--max-vertices", "7"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7
    first = from_dict(json.loads(lines[0]))
    assert first.side_sizes == (2, 2)


def test_reduce_and_critical(capsys, graph_file):
    g = graph_file(catalog.cube())
    code, out, _ = run(capsys, ["reduce-laman", "--vertex", "000", g])
    assert code == 0 and json.loads(out)["moves"]
    code, out, _ = run(capsys, ["critical-sets", g])
    assert code == 0


def test_catalog_and_random(capsys):
    code, out, _ = run(capsys, ["catalog", "build", "G_(3,2)"])
    assert code == 0 and from_dict(json.loads(out)) == catalog.build_Gij(3, 2)
    args = ["gen-random", "--reds", "4", "--blues", "5", "--edge-prob", "0.5", "--seed", "11"]
    _, a, _ = run(capsys, args)
    _, b, _ = run(capsys, args)
    assert a == b and json.loads(a)["metadata"]["prng"]


def test_harness_deterministic(capsys):
    args = ["equivalence-harness", "--theorem", "forest", "--max-vertices", "9", "--sample", "5", "--seed", "3", "--jobs", "1"]
    code, a, _ = run(capsys, args)
    assert code == 0
    data = json.loads(a)
    code, b, _ = run(capsys, args)
    again = json.loads(b)
    for d in (data, again):
        for k in ("seconds", "max_graph_seconds"):
            d.pop(k)
    assert data["graphs"] == 5 and data["discrepancies"] == []
    assert data == again


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, ["check-planar", str(tmp_path / "missing.json")])[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, ["check-planar", str(bad)])[0] == 2
    assert run(capsys, ["no-such-command"])[0] == 2
    assert run(capsys, ["enumerate-laman", "--max-vertices", "20"])[0] == 2
