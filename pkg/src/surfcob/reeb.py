"""
The local Reeb graph of a single-singular-value function: one interior
vertex ``s`` with an edge from each source component (``a0, a1, ...``) and
an edge to each target component (``b0, b1, ...``).  Edges point in the
direction of increasing function value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .decision import edge_sets, even_abs_signed_genus, signed_genus
from .handles import Witness
from .surface import Surface, SurfaceComponent


@dataclass(frozen=True)
class ReebEdge:
    tail: str
    head: str
    component: SurfaceComponent
    r: int
    r_prime: int
    sets: Tuple[str, ...]


@dataclass(frozen=True)
class ReebGraph:
    source: Surface
    target: Surface
    edges: Tuple[ReebEdge, ...]

    @property
    def vertices(self) -> List[str]:
        return (
            [f"a{i}" for i in range(len(self.source))]
            + ["s"]
            + [f"b{j}" for j in range(len(self.target))]
        )

    def boundary_label(self, vertex: str) -> SurfaceComponent:
        side = self.source if vertex[0] == "a" else self.target
        return side[int(vertex[1:])]


def build_reeb(fa: Surface, fb: Surface) -> ReebGraph:
    sets = edge_sets(fa, fb)  # rejects empty surfaces

    def edge(side, ident, c, tail, head):
        return ReebEdge(
            tail, head, c, signed_genus(c), even_abs_signed_genus(c),
            tuple(sets.memberships(side, ident)),
        )

    edges = [edge("a", i, c, f"a{i}", "s") for i, c in enumerate(fa)]
    edges += [edge("b", j, c, "s", f"b{j}") for j, c in enumerate(fb)]
    return ReebGraph(fa, fb, tuple(edges))


def reeb_of_witness(w: Witness) -> ReebGraph:
    return build_reeb(w.start, w.end)


def to_dot(g: ReebGraph) -> str:
    lines = ["digraph reeb {", "  rankdir=BT;"]
    for v in g.vertices:
        if v == "s":
            lines.append('  s [shape=circle, label="s"];')
        else:
            lines.append(f'  {v} [shape=box, label="{g.boundary_label(v)}"];')
    for e in g.edges:
        lines.append(
            f'  {e.tail} -> {e.head} [label="{e.component}", r={e.r}, '
            f'r_prime={e.r_prime}, sets="{",".join(e.sets)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
