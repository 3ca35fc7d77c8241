"""Total labelings: verification, consecutive-sum extension, and transforms.

A labeling of a (p,q)-graph maps V and E bijectively onto 1..p+q so that every
edge xy satisfies f(x) + f(xy) + f(y) = valence; a loop at x contributes
2 f(x) + f(xx).  When the vertex labels are exactly 1..p the labeling is
"super-edge-magic", otherwise plain "edge-magic".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .exceptions import (
    InvalidInput,
    NonConstantValence,
    NotBijective,
    NotConsecutiveSums,
)
from .graph_core import Graph, cycle_graph, star_loop_graph

EDGE_MAGIC = "edge-magic"
SUPER_EDGE_MAGIC = "super-edge-magic"

Edge = tuple[int, int]


@dataclass(frozen=True)
class VertexLabeling:
    """Bijection of the vertices of a graph onto 1..p."""

    graph: Graph
    labels: Mapping[int, int]

    def __post_init__(self):
        p = self.graph.vertex_count
        if set(self.labels.keys()) != set(self.graph.vertices):
            raise NotBijective("vertex labels must cover every vertex exactly once")
        if sorted(self.labels.values()) != list(range(1, p + 1)):
            raise NotBijective(f"vertex labels must be exactly 1..{p}")
        object.__setattr__(self, "labels", dict(self.labels))


@dataclass(frozen=True)
class TotalLabeling:
    """A verified labeling of V and E with its kind and valence.

    Instances should be produced through verify() (or the transforms below,
    which re-verify); the fields are trusted downstream.
    """

    graph: Graph
    vertex_labels: Mapping[int, int]
    edge_labels: Mapping[Edge, int]
    kind: str
    valence: int

    @property
    def order(self) -> int:
        return self.graph.vertex_count

    @property
    def size(self) -> int:
        return self.graph.size

    def label_of_vertex(self, v: int) -> int:
        return self.vertex_labels[v]

    def label_of_edge(self, u: int, v: int) -> int:
        return self.edge_labels[(u, v) if u <= v else (v, u)]


def edge_sum(vertex_labels: Mapping[int, int], edge: Edge) -> int:
    """Vertex-label sum of an edge; a loop counts its endpoint twice."""
    u, v = edge
    return vertex_labels[u] + vertex_labels[v]


def verify(
    graph: Graph,
    vertex_labels: Mapping[int, int],
    edge_labels: Mapping[Edge, int],
) -> TotalLabeling:
    """Check bijectivity and constant edge sums; classify and return the labeling."""
    p, q = graph.vertex_count, graph.size
    if q == 0:
        raise InvalidInput("labelings need at least one edge")
    if set(vertex_labels.keys()) != set(graph.vertices):
        raise NotBijective("vertex labels must cover every vertex exactly once")
    normalized = {}
    for (u, v), lab in edge_labels.items():
        key = (u, v) if u <= v else (v, u)
        if key in normalized:
            raise NotBijective(f"edge {key} labeled twice")
        normalized[key] = lab
    if set(normalized.keys()) != set(graph.edges):
        raise NotBijective("edge labels must cover every edge exactly once")

    values = sorted(vertex_labels.values()) + sorted(normalized.values())
    if sorted(values) != list(range(1, p + q + 1)):
        raise NotBijective(f"labels must be exactly 1..{p + q}")

    first_edge = graph.edges[0]
    valence = edge_sum(vertex_labels, first_edge) + normalized[first_edge]
    for e in graph.edges[1:]:
        s = edge_sum(vertex_labels, e) + normalized[e]
        if s != valence:
            raise NonConstantValence(first_edge, valence, e, s)

    kind = (
        SUPER_EDGE_MAGIC
        if sorted(vertex_labels.values()) == list(range(1, p + 1))
        else EDGE_MAGIC
    )
    return TotalLabeling(graph, dict(vertex_labels), normalized, kind, valence)


def extend_sem(g: VertexLabeling) -> TotalLabeling:
    """Extend a vertex labeling with consecutive edge sums to a full labeling.

    Requires the sums {g(u)+g(v) : uv in E} (loops contributing 2g(u)) to be q
    consecutive integers; edge labels p+1..p+q are then forced and the result
    is super-edge-magic with valence p + q + min(sums).
    """
    graph, labels = g.graph, g.labels
    p, q = graph.vertex_count, graph.size
    if q == 0:
        raise InvalidInput("labelings need at least one edge")
    sums = {}
    for e in graph.edges:
        s = edge_sum(labels, e)
        if s in sums:
            raise NotConsecutiveSums(
                f"edges {sums[s]} and {e} share the sum {s}",
                [edge_sum(labels, d) for d in graph.edges],
            )
        sums[s] = e
    lo, hi = min(sums), max(sums)
    if hi - lo != q - 1:
        missing = next(s for s in range(lo, hi) if s not in sums)
        raise NotConsecutiveSums(
            f"sums span {lo}..{hi} with {q} edges (gap at {missing})",
            list(sums),
        )
    edge_labels = {e: p + q + lo - s for s, e in sums.items()}
    return verify(graph, labels, edge_labels)


def canonical_cycle(m: int) -> VertexLabeling:
    """The classical labeling of the odd cycle: (i+1)/2 on odd positions, (i+1+m)/2 on even."""
    if m < 3 or m % 2 == 0:
        raise InvalidInput(f"canonical cycle labeling needs odd m >= 3, got {m}")
    labels = {
        i: (i + 1) // 2 if i % 2 == 1 else (i + 1 + m) // 2 for i in range(1, m + 1)
    }
    return VertexLabeling(cycle_graph(m), labels)


def em_complement(f: TotalLabeling) -> TotalLabeling:
    """Reflect every label: x -> p+q+1-f(x).  Valence becomes 3(p+q+1) - val(f)."""
    t = f.order + f.size + 1
    return verify(
        f.graph,
        {v: t - lab for v, lab in f.vertex_labels.items()},
        {e: t - lab for e, lab in f.edge_labels.items()},
    )


def sem_complement(f: TotalLabeling) -> TotalLabeling:
    """Reflect the vertex labels only (x -> p+1-f(x)) and re-derive the edges.

    Only defined for super-edge-magic input; the result is super-edge-magic
    with valence 4p + q + 3 - val(f).
    """
    if f.kind != SUPER_EDGE_MAGIC:
        raise InvalidInput("sem_complement needs a super-edge-magic labeling")
    p = f.order
    flipped = VertexLabeling(f.graph, {v: p + 1 - lab for v, lab in f.vertex_labels.items()})
    return extend_sem(flipped)


def odd_even(f: TotalLabeling, parity: str) -> TotalLabeling:
    """Doubling transforms for graphs of equal order and size.

    parity 'odd':  vertices 2f(x)-1, edges 2val-2p-2 minus the endpoint labels,
                   giving an edge-magic labeling with valence 2val(f)-2p-2.
    parity 'even': vertices 2f(x), edges 2val-2p-1 minus endpoints,
                   valence 2val(f)-2p-1.
    """
    if f.kind != SUPER_EDGE_MAGIC:
        raise InvalidInput("odd/even transforms need a super-edge-magic labeling")
    p, q = f.order, f.size
    if p != q:
        raise InvalidInput(f"odd/even transforms need order = size, got p={p}, q={q}")
    if parity == "odd":
        vlab = {v: 2 * lab - 1 for v, lab in f.vertex_labels.items()}
        k = 2 * f.valence - 2 * p - 2
    elif parity == "even":
        vlab = {v: 2 * lab for v, lab in f.vertex_labels.items()}
        k = 2 * f.valence - 2 * p - 1
    else:
        raise InvalidInput(f"parity must be 'odd' or 'even', got {parity!r}")
    elab = {e: k - vlab[e[0]] - vlab[e[1]] for e in f.graph.edges}
    result = verify(f.graph, vlab, elab)
    assert result.valence == k
    return result


def star_loop_labeling(n: int, r: int) -> TotalLabeling:
    """Label the looped star with r on the center and the rest ascending on leaves.

    Any bijection works here; this deterministic choice has valence r + 2n + 3.
    """
    if n < 1:
        raise InvalidInput(f"star needs n >= 1 leaves, got {n}")
    if not 1 <= r <= n + 1:
        raise InvalidInput(f"center label must lie in 1..{n + 1}, got {r}")
    leaf_labels = [x for x in range(1, n + 2) if x != r]
    labels = {1: r}
    for leaf, lab in zip(range(2, n + 2), leaf_labels):
        labels[leaf] = lab
    result = extend_sem(VertexLabeling(star_loop_graph(n), labels))
    assert result.valence == r + 2 * n + 3
    return result
