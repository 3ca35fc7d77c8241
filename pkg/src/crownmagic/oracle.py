"""Exhaustive ground truth for small instances.

Vertex labels are enumerated by backtracking; for the edge-magic search the
edge labels are never enumerated, they are forced by the target valence, which
cuts the space from (p+q)! to C(p+q, p) * p!.  Enumeration order is
deterministic, so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .coverage import em_interval
from .exceptions import EmptyInterval, GuardExceeded, InvalidInput
from .graph_core import Graph
from .labeling import TotalLabeling, VertexLabeling, extend_sem, verify

SEM = "sem"
EM = "em"


@dataclass(frozen=True)
class SpectrumReport:
    """Valence spectrum of a graph with one re-verified witness per valence."""

    graph: Graph
    mode: str
    spectrum: tuple[int, ...]
    witnesses: dict[int, TotalLabeling]
    search_space_size: int
    exhaustive: bool


def _assignment_order(g: Graph) -> list[int]:
    """Vertex order that closes edges as early as possible (greedy, id tie-break)."""
    degs = g.degrees()
    order = [max(g.vertices, key=lambda v: (degs[v], -v))]
    placed = {order[0]}
    while len(order) < g.vertex_count:
        best = None
        best_key = None
        for v in g.vertices:
            if v in placed:
                continue
            closed = sum(1 for w in g.neighbors(v) if w in placed)
            key = (closed, degs[v], -v)
            if best is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    return order


def _closing_edges(g: Graph, order: list[int]) -> list[list[tuple[int, int]]]:
    """For each assignment step, the edges whose endpoints are now all placed."""
    pos = {v: i for i, v in enumerate(order)}
    steps: list[list[tuple[int, int]]] = [[] for _ in order]
    for u, v in g.edges:
        steps[max(pos[u], pos[v])].append((u, v))
    return steps


def brute_sem_spectrum(g: Graph, guard: int = 10) -> SpectrumReport:
    """All super-edge-magic valences of g by exhausting vertex bijections.

    Keeps the bijections whose edge sums are q distinct values inside a window
    of width q-1 (hence consecutive); valence is p + q + min(sums).
    """
    p, q = g.order, g.size
    if q == 0:
        raise InvalidInput("spectrum needs at least one edge")
    if p > guard:
        raise GuardExceeded(factorial(p), factorial(guard))
    order = _assignment_order(g)
    steps = _closing_edges(g, order)

    labels: dict[int, int] = {}
    used = [False] * (p + 1)
    witnesses: dict[int, TotalLabeling] = {}

    def rec(depth: int, sums: set[int], lo: int, hi: int):
        if depth == p:
            valence = p + q + lo
            if valence not in witnesses:
                witnesses[valence] = extend_sem(VertexLabeling(g, dict(labels)))
            return
        v = order[depth]
        for lab in range(1, p + 1):
            if used[lab]:
                continue
            added = []
            nlo, nhi = lo, hi
            ok = True
            for a, b in steps[depth]:
                la = lab if a == v else labels[a]
                lb = lab if b == v else labels[b]
                s = la + lb
                if s in sums:
                    ok = False
                    break
                nlo, nhi = min(nlo, s), max(nhi, s)
                if nhi - nlo > q - 1:
                    ok = False
                    break
                sums.add(s)
                added.append(s)
            if ok:
                used[lab] = True
                labels[v] = lab
                rec(depth + 1, sums, nlo, nhi)
                used[lab] = False
                del labels[v]
            for s in added:
                sums.remove(s)

    rec(0, set(), 4 * p + 1, 0)
    return SpectrumReport(
        graph=g,
        mode=SEM,
        spectrum=tuple(sorted(witnesses)),
        witnesses=witnesses,
        search_space_size=factorial(p),
        exhaustive=True,
    )


def _em_search(
    g: Graph,
    valence: int,
    limit: int,
    order: list[int],
    steps: list[list[tuple[int, int]]],
) -> list[TotalLabeling]:
    """Up to limit edge-magic labelings of g with the given valence."""
    p, q = g.order, g.size
    total = p + q
    labels: dict[int, int] = {}
    edge_labels: dict[tuple[int, int], int] = {}
    used = [False] * (total + 1)
    found: list[TotalLabeling] = []

    def rec(depth: int):
        if depth == p:
            found.append(verify(g, dict(labels), dict(edge_labels)))
            return
        v = order[depth]
        for lab in range(1, total + 1):
            if used[lab]:
                continue
            used[lab] = True
            labels[v] = lab
            forced = []
            ok = True
            for a, b in steps[depth]:
                el = valence - labels[a] - labels[b]
                if el < 1 or el > total or used[el]:
                    ok = False
                    break
                used[el] = True
                forced.append(((a, b), el))
            if ok:
                for key, el in forced:
                    edge_labels[key] = el
                rec(depth + 1)
                for key, _ in forced:
                    del edge_labels[key]
            for _, el in forced:
                used[el] = False
            used[lab] = False
            del labels[v]
            if len(found) >= limit:
                return

    rec(0)
    return found


def _em_guard(g: Graph, guard: int) -> int:
    estimate = comb(g.order + g.size, g.order) * factorial(g.order)
    if estimate > guard:
        raise GuardExceeded(estimate, guard)
    return estimate


def brute_em_spectrum(g: Graph, guard: int = 10**9) -> SpectrumReport:
    """All edge-magic valences of g.

    Each candidate valence in the magic interval is searched separately with
    forced edge labels until one witness is found; absence after a full search
    is a proof of absence.
    """
    if g.size == 0:
        raise InvalidInput("spectrum needs at least one edge")
    estimate = _em_guard(g, guard)
    order = _assignment_order(g)
    steps = _closing_edges(g, order)
    witnesses: dict[int, TotalLabeling] = {}
    try:
        candidates = list(em_interval(g).values())
    except EmptyInterval:
        candidates = []
    for k in candidates:
        hits = _em_search(g, k, 1, order, steps)
        if hits:
            witnesses[k] = hits[0]
    return SpectrumReport(
        graph=g,
        mode=EM,
        spectrum=tuple(sorted(witnesses)),
        witnesses=witnesses,
        search_space_size=estimate,
        exhaustive=True,
    )


def brute_em_labelings(
    g: Graph, valence: int, limit: int = 1, guard: int = 8
) -> list[TotalLabeling]:
    """Up to limit distinct edge-magic labelings of g with exactly this valence.

    Guarded by graph order (default 8); pass a larger guard explicitly for
    bigger searches.
    """
    if g.size == 0:
        raise InvalidInput("search needs at least one edge")
    if limit < 1:
        raise InvalidInput(f"limit must be >= 1, got {limit}")
    if g.order > guard:
        raise GuardExceeded(factorial(g.order), factorial(guard))
    order = _assignment_order(g)
    steps = _closing_edges(g, order)
    return _em_search(g, valence, limit, order, steps)
