"""Digraph composition that places a labeled pattern over every arc of an outer digraph.

Family members are super-edge-magic digraphs whose vertex names coincide with
their labels and whose arc sums are consecutive; putting one over each arc of a
labeled outer digraph yields a labeled product whose valence follows a closed
formula: p(val(f) - 3) + k + p, for member order p and minimum arc sum k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exceptions import InvalidInput
from .graph_core import Digraph, Graph, directed_cycle, is_single_cycle, underlying
from .labeling import (
    SUPER_EDGE_MAGIC,
    TotalLabeling,
    VertexLabeling,
    extend_sem,
    verify,
)


@dataclass(frozen=True)
class FamilyMember:
    """Digraph on {1..p} with |E| = p whose names are its labels; arc sums consecutive."""

    digraph: Digraph
    min_sum: int

    def __post_init__(self):
        p = self.digraph.vertex_count
        if len(self.digraph.arcs) != p:
            raise InvalidInput(
                f"family member needs |E| = |V|, got {len(self.digraph.arcs)} arcs on {p} vertices"
            )
        sums = sorted(i + j for i, j in self.digraph.arcs)
        if sums != list(range(sums[0], sums[0] + p)):
            raise InvalidInput(f"member arc sums are not consecutive: {sums}")
        if sums[0] != self.min_sum:
            raise InvalidInput(f"declared min_sum {self.min_sum} but arcs start at {sums[0]}")
        if self.digraph.is_one_regular() and self.min_sum != (p + 3) // 2:
            raise InvalidInput("1-regular members must have min sum (p+3)/2")

    @classmethod
    def from_digraph(cls, d: Digraph) -> "FamilyMember":
        return cls(d, min(i + j for i, j in d.arcs))

    @property
    def order(self) -> int:
        return self.digraph.vertex_count


def cycle_member(f: TotalLabeling, sign: str) -> FamilyMember:
    """Orient a super-edge-magic labeled cycle and rename its vertices by label.

    Sign '+' walks from the vertex labeled 1 toward its larger-labeled
    neighbor, '-' is the reversal.  On the canonical labeling this reproduces
    exactly the two strong orientations whose arc differences are (m+1)/2 and
    (m-1)/2 mod m.
    """
    if f.kind != SUPER_EDGE_MAGIC:
        raise InvalidInput("cycle member needs a super-edge-magic labeling")
    if not is_single_cycle(f.graph):
        raise InvalidInput("cycle member needs a single-cycle graph")
    if sign not in ("+", "-"):
        raise InvalidInput(f"sign must be '+' or '-', got {sign!r}")
    m = f.order
    by_label = {lab: v for v, lab in f.vertex_labels.items()}
    start = by_label[1]
    nbrs = f.graph.neighbors(start)
    first = max(nbrs, key=lambda w: f.vertex_labels[w])
    order = [start, first]
    while len(order) < m:
        nxt = [w for w in f.graph.neighbors(order[-1]) if w != order[-2]]
        order.append(nxt[0])
    arcs = tuple(
        (f.vertex_labels[order[t]], f.vertex_labels[order[(t + 1) % m]])
        for t in range(m)
    )
    d = Digraph(m, arcs)
    if sign == "-":
        d = d.reversed()
    return FamilyMember(d, (m + 3) // 2)


def star_member(n: int, r: int) -> FamilyMember:
    """Looped star renamed by the labeling with r on the center; min arc sum r+1."""
    if not 1 <= r <= n + 1:
        raise InvalidInput(f"center label must lie in 1..{n + 1}, got {r}")
    arcs = [(r, r)] + [(r, j) for j in range(1, n + 2) if j != r]
    return FamilyMember(Digraph(n + 1, tuple(arcs)), r + 1)


@dataclass(frozen=True)
class ArcAssignment:
    """Choice of a family member for every arc of an outer digraph."""

    mapping: dict[tuple[int, int], FamilyMember]

    @classmethod
    def constant(cls, d: Digraph, member: FamilyMember) -> "ArcAssignment":
        return cls({arc: member for arc in d.arcs})

    def common_order_and_min_sum(self, d: Digraph) -> tuple[int, int]:
        """The shared (p, k) of all images, validating totality and consistency."""
        if set(self.mapping.keys()) != set(d.arcs):
            raise InvalidInput("arc assignment must cover exactly the arcs of the outer digraph")
        orders = {m.order for m in self.mapping.values()}
        if len(orders) != 1:
            raise InvalidInput(f"family members have mismatched vertex sets: orders {sorted(orders)}")
        sums = {m.min_sum for m in self.mapping.values()}
        if len(sums) != 1:
            raise InvalidInput(f"family members have mismatched minimum sums: {sorted(sums)}")
        return orders.pop(), sums.pop()


def h_product(d: Digraph, h: ArcAssignment) -> Digraph:
    """Arc-indexed product digraph, with vertex (a,i) renamed p(a-1)+i."""
    p, _ = h.common_order_and_min_sum(d)
    arcs = []
    for (a, b), member in sorted(h.mapping.items()):
        for i, j in member.digraph.arcs:
            arcs.append((p * (a - 1) + i, p * (b - 1) + j))
    return Digraph(d.vertex_count * p, tuple(arcs))


def induced_product_labeling(
    d: Digraph, f: TotalLabeling, h: ArcAssignment
) -> TotalLabeling:
    """Labeling of the product induced by a labeling f of the outer digraph.

    Vertex (a,i) gets p(f(a)-1)+i and the arc over the outer arc labeled e gets
    p(e-1)+(k+p)-(i+j); the result verifies with valence p(val(f)-3)+k+p and
    keeps f's kind.
    """
    if underlying(d).edges != f.graph.edges or d.vertex_count != f.order:
        raise InvalidInput("labeling does not belong to the outer digraph")
    p, k = h.common_order_and_min_sum(d)

    def pid(a: int, i: int) -> int:
        return p * (a - 1) + i

    vertex_labels = {}
    for a in d.vertices:
        la = f.vertex_labels[a]
        for i in range(1, p + 1):
            vertex_labels[pid(a, i)] = p * (la - 1) + i

    edges = []
    edge_labels = {}
    for (a, b), member in h.mapping.items():
        e = f.label_of_edge(a, b)
        for i, j in member.digraph.arcs:
            u, v = pid(a, i), pid(b, j)
            key = (u, v) if u <= v else (v, u)
            edges.append(key)
            edge_labels[key] = p * (e - 1) + (k + p) - (i + j)

    graph = Graph(d.vertex_count * p, tuple(set(edges)))
    result = verify(graph, vertex_labels, edge_labels)
    expected = p * (f.valence - 3) + k + p
    if result.valence != expected:
        raise InvalidInput(
            f"product valence {result.valence} does not match the formula {expected}"
        )
    if result.kind != f.kind:
        raise InvalidInput("product did not preserve the labeling kind")
    return result


def oriented_identity_cycle(m: int, sign: str = "+") -> tuple[Digraph, TotalLabeling]:
    """directed_cycle(m, sign) together with its identity-label total labeling."""
    d = directed_cycle(m, sign)
    labeling = extend_sem(
        VertexLabeling(underlying(d), {v: v for v in d.vertices})
    )
    return d, labeling


def product_cycle_labeling(q: int, p: int) -> TotalLabeling:
    """Composite-cycle labeling from coprime odd lengths (outer q, inner p)."""
    for x in (q, p):
        if x < 3 or x % 2 == 0:
            raise InvalidInput(f"cycle lengths must be odd and >= 3, got {x}")
    if gcd(p, q) != 1:
        raise InvalidInput(f"cycle lengths must be coprime, got {p} and {q}")
    outer_d, outer_f = oriented_identity_cycle(q, "+")
    member = FamilyMember(directed_cycle(p, "-"), (p + 3) // 2)
    h = ArcAssignment.constant(outer_d, member)
    result = induced_product_labeling(outer_d, outer_f, h)
    if not is_single_cycle(result.graph):
        raise InvalidInput(
            f"product of coprime cycles {q} x {p} did not yield a single cycle"
        )
    return result


def _is_odd_prime(x: int) -> bool:
    if x < 3 or x % 2 == 0:
        return False
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def product_cycle_sem(q: int, p: int) -> TotalLabeling:
    """Super-edge-magic labeling of the pq-cycle for distinct odd primes.

    Induced by combining the canonically labeled q-cycle (forward orientation)
    with the reversed p-cycle; the underlying graph is checked to be one
    pq-cycle and the minimum edge sum is (pq+3)/2.
    """
    if not _is_odd_prime(q) or not _is_odd_prime(p):
        raise InvalidInput(f"cycle lengths must be distinct odd primes, got {q} and {p}")
    if p == q:
        raise InvalidInput("cycle lengths must be distinct")
    result = product_cycle_labeling(q, p)
    min_sum = min(
        result.vertex_labels[u] + result.vertex_labels[v] for u, v in result.graph.edges
    )
    assert min_sum == (p * q + 3) // 2
    return result
