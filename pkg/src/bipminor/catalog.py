"""Named graphs: complete bipartite graphs, coloured subdivisions of K5,
K_{3,3}, K4 and K_{2,3}, glued Laman gadgets, cubes, cycles, and the nine
hand-written K_{3,3} scripts for the subdivisions of K5 and K_{3,3}.

Original vertices are ``v1``, ``v2``, ...; the subdivision vertex of the
edge ``vi vj`` is ``vij`` with ``i < j``.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Callable

from .cycles import CycleWitness
from .errors import BadParameter
from .graph import BiGraph, new_graph
from .minors import MinorCertificate, MinorOp


def complete_bipartite(a: int, b: int, red_prefix: str = "a", blue_prefix: str = "b") -> BiGraph:
    reds = [f"{red_prefix}{i}" for i in range(1, a + 1)]
    blues = [f"{blue_prefix}{i}" for i in range(1, b + 1)]
    return new_graph(reds, blues, [(r, s) for r in reds for s in blues])


def K22() -> BiGraph:
    return complete_bipartite(2, 2)


def K23() -> BiGraph:
    """K_{2,3} with the three-vertex side red."""
    return complete_bipartite(3, 2)


def K33() -> BiGraph:
    return new_graph(["v1", "v2", "v3"], ["v4", "v5", "v6"], [(f"v{i}", f"v{j}") for i in (1, 2, 3) for j in (4, 5, 6)])


def K33_minus_edge() -> BiGraph:
    return K33().delete_edge("v1", "v4")


def cycle(length: int) -> BiGraph:
    """Even cycle a1 b1 a2 b2 ... of the given length."""
    if length < 4 or length % 2:
        raise BadParameter("a bipartite cycle needs even length >= 4")
    k = length // 2
    reds = [f"a{i}" for i in range(1, k + 1)]
    blues = [f"b{i}" for i in range(1, k + 1)]
    edges = []
    for i in range(k):
        edges.append((reds[i], blues[i]))
        edges.append((reds[(i + 1) % k], blues[i]))
    return new_graph(reds, blues, edges)


def path(n: int) -> BiGraph:
    """Path on n vertices p1 - p2 - ... (odd positions red)."""
    if n < 1:
        raise BadParameter("a path needs at least one vertex")
    names = [f"p{i}" for i in range(1, n + 1)]
    return new_graph(names[0::2], names[1::2], list(zip(names, names[1:])))


def star(k: int) -> BiGraph:
    return new_graph(["c"], [f"l{i}" for i in range(1, k + 1)], [("c", f"l{i}") for i in range(1, k + 1)])


def cube() -> BiGraph:
    """The 3-cube Q3; vertices are bit strings, even weight red."""
    words = [format(i, "03b") for i in range(8)]
    reds = [w for w in words if w.count("1") % 2 == 0]
    blues = [w for w in words if w.count("1") % 2 == 1]
    edges = [(r, b) for r in reds for b in blues if sum(x != y for x, y in zip(r, b)) == 1]
    return new_graph(reds, blues, edges)


def _sub(i: int, j: int) -> str:
    a, b = sorted((i, j))
    return f"v{a}{b}"


def colored_subdivision(vertices: list[int], edges: list[tuple[int, int]], red: set[int]) -> BiGraph:
    """Colour the original vertices, then subdivide every monochromatic edge
    once with a vertex of the opposite colour."""
    reds = [f"v{i}" for i in vertices if i in red]
    blues = [f"v{i}" for i in vertices if i not in red]
    es = []
    for i, j in edges:
        if (i in red) == (j in red):
            s = _sub(i, j)
            (blues if i in red else reds).append(s)
            es += [(f"v{i}", s), (s, f"v{j}")]
        else:
            es.append((f"v{i}", f"v{j}"))
    return new_graph(reds, blues, es)


def build_G(i: int) -> BiGraph:
    """K5 with v1..vi red, the rest blue, monochromatic edges subdivided."""
    if i not in (5, 4, 2):
        raise BadParameter("G_(i) is defined for i in {5, 4, 2}")
    return colored_subdivision([1, 2, 3, 4, 5], list(combinations(range(1, 6), 2)), set(range(1, i + 1)))


def _bipartite_coloring(x_side: list[int], y_side: list[int], i: int, j: int) -> set[int]:
    # last i of X and first j of Y are red; matches the appendix colourings
    return set(x_side[len(x_side) - i:]) | set(y_side[:j])


G_PAIRS = [(3, 3), (3, 2), (3, 1), (3, 0), (2, 2), (2, 1)]
H_PAIRS = [(2, 3), (1, 3), (0, 3), (2, 2), (1, 2), (2, 1)]
H_SINGLES = [4, 3, 2]


def build_Gij(i: int, j: int) -> BiGraph:
    if (i, j) not in G_PAIRS:
        raise BadParameter(f"G_({i},{j}) is not one of {G_PAIRS}")
    X, Y = [1, 2, 3], [4, 5, 6]
    return colored_subdivision(X + Y, [(x, y) for x in X for y in Y], _bipartite_coloring(X, Y, i, j))


def build_Hi(i: int) -> BiGraph:
    if i not in H_SINGLES:
        raise BadParameter("H_(i) is defined for i in {4, 3, 2}")
    return colored_subdivision([1, 2, 3, 4], list(combinations(range(1, 5), 2)), set(range(1, i + 1)))


def build_Hij(i: int, j: int) -> BiGraph:
    if (i, j) not in H_PAIRS:
        raise BadParameter(f"H_({i},{j}) is not one of {H_PAIRS}")
    X, Y = [1, 2], [3, 4, 5]
    return colored_subdivision(X + Y, [(x, y) for x in X for y in Y], _bipartite_coloring(X, Y, i, j))


def build_gadget(n: int) -> BiGraph:
    """n copies of K_{3,3} minus an edge glued at the missing edge's ends.

    The glue vertices are ``g1`` (red) and ``g2`` (blue); copy k adds reds
    ``x{k}a, x{k}b`` and blues ``y{k}a, y{k}b``.
    """
    if n < 2:
        raise BadParameter("the gadget needs n >= 2 copies")
    reds, blues, edges = ["g1"], ["g2"], []
    for k in range(1, n + 1):
        xs = [f"x{k}a", f"x{k}b"]
        ys = [f"y{k}a", f"y{k}b"]
        reds += xs
        blues += ys
        edges += [("g1", y) for y in ys] + [(x, "g2") for x in xs] + [(x, y) for x in xs for y in ys]
    return new_graph(reds, blues, edges)


def barycentric_K5() -> BiGraph:
    return build_G(5)


# -- appendix scripts ------------------------------------------------------

# Each entry: (host builder, steps, final six vertices). A step is either
# ("c", merge, into, witness cycle) or ("d", vertex). Names are the paper's
# representatives; they are resolved to live names when the script is built.
_SCRIPTS: dict[str, tuple[Callable[[], BiGraph], list, list[str]]] = {
    "G_(5)": (lambda: build_G(5), [
        ("c", "v15", "v13", "v15 v1 v13 v3 v35 v5"),
        ("c", "v25", "v23", "v25 v2 v23 v3 v35 v5"),
        ("c", "v45", "v14", "v45 v4 v14 v1 v15 v5"),
        ("c", "v1", "v2", "v1 v12 v2 v25 v5 v15"),
        ("c", "v3", "v4", "v4 v34 v3 v35 v5 v54"),
    ], ["v1", "v3", "v5", "v15", "v25", "v45"]),
    "G_(4)": (lambda: build_G(4), [
        ("c", "v34", "v23", "v34 v3 v23 v2 v24 v4"),
        ("c", "v12", "v14", "v12 v1 v14 v4 v24 v2"),
        ("c", "v12", "v13", "v12 v1 v13 v3 v32 v2"),
    ], ["v2", "v3", "v4", "v5", "v34", "v12"]),
    "G_(2)": (lambda: build_G(2), [
        ("c", "v34", "v35", "v34 v3 v35 v5 v45 v4"),
    ], ["v1", "v2", "v34", "v3", "v4", "v5"]),
    "G_(3,3)": (lambda: build_Gij(3, 3), [
        ("c", "v15", "v35", "v15 v5 v35 v3 v34 v4 v14 v1"),
        ("c", "v14", "v24", "v14 v4 v24 v2 v26 v6 v16 v1"),
        ("c", "v26", "v36", "v26 v6 v36 v3 v34 v4 v24 v2"),
        ("c", "v1", "v6", "v1 v16 v6 v36 v2 v24"),
        ("c", "v2", "v5", "v2 v25 v5 v35 v3 v34 v4 v24"),
        ("d", "v16"),
        ("d", "v25"),
        ("c", "v3", "v4", "v3 v34 v4 v24 v1 v36"),
    ], ["v1", "v2", "v3", "v15", "v14", "v26"]),
    "G_(3,2)": (lambda: build_Gij(3, 2), [
        ("c", "v15", "v35", "v15 v5 v35 v3 v34 v4 v14 v1"),
        ("c", "v14", "v24", "v14 v4 v24 v2 v25 v5 v15 v1"),
        ("c", "v3", "v4", "v3 v34 v4 v24 v2 v25 v5 v15"),
        ("c", "v2", "v5", "v2 v25 v5 v15 v1 v6"),
    ], ["v1", "v2", "v3", "v15", "v14", "v6"]),
    "G_(3,1)": (lambda: build_Gij(3, 1), [
        ("c", "v24", "v34", "v24 v4 v34 v3 v5 v2"),
        ("c", "v1", "v4", "v1 v14 v4 v34 v3 v5"),
    ], ["v1", "v2", "v3", "v24", "v5", "v6"]),
    "G_(2,2)": (lambda: build_Gij(2, 2), [
        ("c", "v24", "v34", "v34 v4 v24 v2 v25 v5 v53 v3"),
        ("c", "v25", "v35", "v25 v5 v35 v3 v34 v2"),
        ("c", "v4", "v5", "v4 v1 v5 v25 v3 v34"),
        ("c", "v1", "v6", "v1 v16 v6 v2 v25 v4"),
    ], ["v2", "v3", "v4", "v24", "v25", "v6"]),
    "G_(2,1)": (lambda: build_Gij(2, 1), [
        ("c", "v16", "v15", "v16 v1 v15 v5 v3 v6"),
        ("c", "v24", "v34", "v24 v4 v34 v3 v6 v2"),
        ("c", "v1", "v34", "v1 v4 v34 v2 v5 v15"),
    ], ["v16", "v2", "v3", "v1", "v5", "v6"]),
    "G_(3,0)": (lambda: build_Gij(3, 0), [], ["v1", "v2", "v3", "v4", "v5", "v6"]),
}

APPENDIX_CASES = list(_SCRIPTS)


def _normalize(name: str) -> str:
    m = re.fullmatch(r"v(\d)(\d)", name)
    if m:
        return _sub(int(m.group(1)), int(m.group(2)))
    return name


def _script_certificate(host: BiGraph, steps: list, final: list[str]) -> MinorCertificate:
    alias: dict[str, str] = {}

    def live(x: str) -> str:
        x = _normalize(x)
        while x in alias:
            x = alias[x]
        return x

    ops: list[MinorOp] = []
    present = set(host.names)
    for step in steps:
        if step[0] == "d":
            v = live(step[1])
            ops.append(MinorOp.delete_vertex(v))
            present.discard(v)
            continue
        _, merge, into, cyc = step
        merge, into = live(merge), live(into)
        names = [live(x) for x in cyc.split()]
        ops.append(MinorOp.contract(merge, into, CycleWitness(names[1], tuple(names))))
        alias[merge] = into
        present.discard(merge)
    keep = {live(x) for x in final}
    ops += [MinorOp.delete_vertex(x) for x in host.names if x in present and x not in keep]
    return MinorCertificate(K33(), ops, None, host)


def appendix_scripts() -> dict[str, MinorCertificate]:
    """The nine K_{3,3} certificates, keyed by case name, hosts attached."""
    out = {}
    for name, (builder, steps, final) in _SCRIPTS.items():
        out[name] = _script_certificate(builder(), steps, final)
    return out


# -- name lookup -------------------------------------------------------------

_PATTERNS: list[tuple[str, Callable[..., BiGraph], str]] = [
    (r"K(\d)(\d)", lambda a, b: complete_bipartite(int(a), int(b)), "K<a><b>: complete bipartite graph"),
    (r"K_\{(\d+),(\d+)\}", lambda a, b: complete_bipartite(int(a), int(b)), "K_{a,b}"),
    (r"K33-e", K33_minus_edge, "K_{3,3} minus an edge"),
    (r"C_?\{?(\d+)\}?", lambda k: cycle(int(k)), "C<2k>: even cycle"),
    (r"P(\d+)|path\((\d+)\)", lambda a, b=None: path(int(a or b)), "P<n>: path on n vertices"),
    (r"star\((\d+)\)", lambda k: star(int(k)), "star(k): K_{1,k}"),
    (r"Q3", cube, "3-cube"),
    (r"baryK5", barycentric_K5, "barycentric subdivision of K5 (= G_(5))"),
    (r"gadget\((\d+)\)", lambda k: build_gadget(int(k)), "gadget(n): glued K_{3,3}-minus-edge copies"),
    (r"G_\((\d)\)", lambda i: build_G(int(i)), "G_(i), i in 5,4,2"),
    (r"G_\((\d),(\d)\)", lambda i, j: build_Gij(int(i), int(j)), "G_(i,j)"),
    (r"H_\((\d)\)", lambda i: build_Hi(int(i)), "H_(i), i in 4,3,2"),
    (r"H_\((\d),(\d)\)", lambda i, j: build_Hij(int(i), int(j)), "H_(i,j)"),
]


def build(name: str) -> BiGraph:
    """Build a catalog graph by name (``K33``, ``C8``, ``G_(3,2)``, ``gadget(3)``...)."""
    key = name.strip()
    if key == "K33":
        return K33()
    if key == "K23":
        return K23()
    if key == "K22":
        return K22()
    for pattern, fn, _ in _PATTERNS:
        m = re.fullmatch(pattern, key)
        if m:
            return fn(*[g for g in m.groups() if g is not None] or [])
    raise BadParameter(f"unknown catalog graph {name!r}")


def names() -> list[str]:
    """Concrete names covering every construction."""
    out = ["K22", "K23", "K33", "K33-e", "C4", "C6", "C8", "Q3", "baryK5"]
    out += [f"G_({i})" for i in (5, 4, 2)]
    out += [f"G_({i},{j})" for i, j in G_PAIRS]
    out += [f"H_({i})" for i in H_SINGLES]
    out += [f"H_({i},{j})" for i, j in H_PAIRS]
    out += [f"gadget({n})" for n in (2, 3)]
    return out


def describe() -> list[str]:
    return [doc for _, _, doc in _PATTERNS]
