"""Row-translated crown labelings.

The labeled oriented crown (star-with-loop composed over a labeled oriented
cycle) has an adjacency matrix whose only nonzero rows are the first m.
Translating all rows down by r-1 re-addresses every arc (a,b) to (a+r-1, b)
and yields another super-edge-magic labeled digraph whose valence grows by
exactly r-1.  The underlying graph is always (2-regular core) + n pendants per
core vertex; whether the core is a single m-cycle is decided structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .exceptions import InvalidInput
from .graph_core import Digraph, Graph, crown_shape, is_single_cycle, star_loop, underlying
from .labeling import TotalLabeling, VertexLabeling, extend_sem
from .product import ArcAssignment, cycle_member, h_product


@dataclass(frozen=True)
class MatrixProvenance:
    m: int
    n: int
    sign: str
    r: int


@dataclass(frozen=True)
class BlockMatrix:
    """0/1 adjacency matrix of order m(n+1), stored as its arc set."""

    order: int
    arcs: frozenset[tuple[int, int]]
    provenance: MatrixProvenance

    def dense(self) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=np.uint8)
        for u, v in self.arcs:
            a[u - 1, v - 1] = 1
        return a

    def digraph(self) -> Digraph:
        return Digraph(self.order, tuple(sorted(self.arcs)))

    @property
    def max_shift(self) -> int:
        return self.order - self.provenance.m + 1


def _crown_base_digraph(g: TotalLabeling, n: int, sign: str) -> Digraph:
    if n < 1:
        raise InvalidInput(f"crown needs n >= 1 leaves per core vertex, got {n}")
    member = cycle_member(g, sign)
    outer = star_loop(n)
    return h_product(outer, ArcAssignment.constant(outer, member))


def base_matrix(g: TotalLabeling, n: int, sign: str) -> BlockMatrix:
    """Adjacency matrix of the labeled oriented crown with the star center labeled 1.

    Vertices are identified with labels, so the nonzero rows are exactly 1..m
    and every m-column block repeats the oriented cycle pattern.
    """
    d = _crown_base_digraph(g, n, sign)
    return BlockMatrix(
        order=d.vertex_count,
        arcs=frozenset(d.arcs),
        provenance=MatrixProvenance(g.order, n, sign, 1),
    )


def translate(matrix: BlockMatrix, r: int) -> BlockMatrix:
    """Shift every row down by r-1: entry (i,j) moves from (i-r+1, j)."""
    if not 1 <= r <= matrix.max_shift:
        raise InvalidInput(f"shift index must lie in 1..{matrix.max_shift}, got {r}")
    base = matrix.provenance.r
    if base != 1:
        raise InvalidInput("translate expects the untranslated base matrix")
    arcs = frozenset((a + r - 1, b) for a, b in matrix.arcs)
    return BlockMatrix(
        order=matrix.order,
        arcs=arcs,
        provenance=MatrixProvenance(matrix.provenance.m, matrix.provenance.n, matrix.provenance.sign, r),
    )


def gcd_exception(m: int, r: int) -> bool:
    """True when neither base orientation is guaranteed to leave a cyclic core.

    Both gcd((m+1)/2 - (r-1), m) and gcd((m-1)/2 - (r-1), m) differ from 1.
    """
    if m < 3 or m % 2 == 0:
        raise InvalidInput(f"needs odd m >= 3, got {m}")
    up = ((m + 1) // 2 - (r - 1)) % m
    return gcd(up, m) != 1 and gcd(up - 1, m) != 1


def sign_for_shift(m: int, r: int) -> str | None:
    """Which orientation keeps the translated core a single cycle, if any.

    '+' when gcd((m+1)/2-(r-1), m) = 1, else '-' when the (m-1)/2 variant is
    coprime, else None (the exceptional case).
    """
    up = ((m + 1) // 2 - (r - 1)) % m
    if gcd(up, m) == 1:
        return "+"
    if gcd((up - 1) % m, m) == 1:
        return "-"
    return None


@dataclass(frozen=True)
class TranslationResult:
    """Verified shifted labeling plus its extracted 2-regular core."""

    labeling: TotalLabeling
    core_graph: Graph
    core_vertices: tuple[int, ...]
    r: int
    single_cycle: bool


def translated_labeling(g: TotalLabeling, n: int, sign: str, r: int) -> TranslationResult:
    """Shift the labeled oriented crown built on g by r-1 and re-verify.

    The result is super-edge-magic with valence val(base) + r - 1 on the graph
    (core H) + n pendants per core vertex, where H is the undirected subgraph
    induced by the window {r, ..., r-1+m}; single_cycle reports whether H is
    one m-cycle (equivalently, whether the graph is the crown over an m-cycle).
    """
    m = g.order
    if not 1 <= r <= m * n + 1:
        raise InvalidInput(f"shift index must lie in 1..{m * n + 1}, got {r}")
    base = _crown_base_digraph(g, n, sign)
    shifted = Digraph(base.vertex_count, tuple((a + r - 1, b) for a, b in base.arcs))

    graph = underlying(shifted)
    labeling = extend_sem(VertexLabeling(graph, {v: v for v in graph.vertices}))
    base_valence = 2 * m * n + (5 * m + 3) // 2
    assert labeling.valence == base_valence + r - 1

    window = list(range(r, r + m))
    inside = set(window)
    core_arcs = [(a, b) for a, b in shifted.arcs if a in inside and b in inside]
    reindex = {v: t + 1 for t, v in enumerate(window)}
    core = underlying(
        Digraph(m, tuple((reindex[a], reindex[b]) for a, b in core_arcs))
    )

    shape = crown_shape(graph)
    assert shape.core == tuple(window) and shape.n == n

    return TranslationResult(
        labeling=labeling,
        core_graph=core,
        core_vertices=tuple(window),
        r=r,
        single_cycle=is_single_cycle(core),
    )
