from __future__ import annotations

from hypothesis import strategies as st

from bipminor.graph import BiGraph, new_graph


@st.composite
def bigraphs(draw, max_side: int = 4, min_side: int = 0) -> BiGraph:
    r = draw(st.integers(min_side, max_side))
    b = draw(st.integers(min_side, max_side))
    reds = [f"r{i}" for i in range(r)]
    blues = [f"b{i}" for i in range(b)]
    pairs = [(x, y) for x in reds for y in blues]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(reds, blues, [e for e, k in zip(pairs, keep) if k])
