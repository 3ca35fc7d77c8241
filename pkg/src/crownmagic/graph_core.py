"""Digraphs and graphs with loops, plus the graph families used everywhere else.

Vertices are always named 1..N.  In the labeled constructions of the other
modules a vertex's name doubles as its label, so no separate name-to-label
map exists anywhere.  Loops are allowed and contribute 2 to a vertex degree;
parallel arcs/edges are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .exceptions import InvalidInput, NotACrownShape


def _check_arc_range(n: int, pairs: Iterable[tuple[int, int]], what: str):
    for u, v in pairs:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidInput(f"{what} ({u},{v}) out of vertex range 1..{n}")


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices 1..vertex_count; loops allowed, no parallel arcs."""

    vertex_count: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidInput("digraph needs at least one vertex")
        arcs = tuple(sorted((int(u), int(v)) for u, v in self.arcs))
        if len(set(arcs)) != len(arcs):
            raise InvalidInput("parallel arcs are not supported")
        _check_arc_range(self.vertex_count, arcs, "arc")
        object.__setattr__(self, "arcs", arcs)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def out_neighbors(self, u: int) -> list[int]:
        return [b for a, b in self.arcs if a == u]

    def in_neighbors(self, v: int) -> list[int]:
        return [a for a, b in self.arcs if b == v]

    def reversed(self) -> "Digraph":
        return Digraph(self.vertex_count, tuple((v, u) for u, v in self.arcs))

    def is_one_regular(self) -> bool:
        outs = [0] * (self.vertex_count + 1)
        ins = [0] * (self.vertex_count + 1)
        for u, v in self.arcs:
            outs[u] += 1
            ins[v] += 1
        return all(outs[w] == 1 and ins[w] == 1 for w in self.vertices)

    def is_strongly_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        fwd = {w: [] for w in self.vertices}
        bwd = {w: [] for w in self.vertices}
        for u, v in self.arcs:
            fwd[u].append(v)
            bwd[v].append(u)

        def reach(adj):
            seen = {1}
            stack = [1]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            return len(seen) == self.vertex_count

        return reach(fwd) and reach(bwd)


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 1..vertex_count; loops allowed (degree 2 each)."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidInput("graph needs at least one vertex")
        edges = tuple(sorted(_norm_edge(int(u), int(v)) for u, v in self.edges))
        if len(set(edges)) != len(edges):
            raise InvalidInput("parallel edges are not supported")
        _check_arc_range(self.vertex_count, edges, "edge")
        object.__setattr__(self, "edges", edges)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def order(self) -> int:
        return self.vertex_count

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def degrees(self) -> dict[int, int]:
        d = {w: 0 for w in self.vertices}
        for a, b in self.edges:
            d[a] += 1
            d[b] += 1
        return d

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in set(self.edges)


@dataclass(frozen=True)
class CrownSpec:
    """Cycle length m and number of pendant leaves n per cycle vertex."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 3:
            raise InvalidInput(f"crown cycle length must be >= 3, got {self.m}")
        if self.n < 1:
            raise InvalidInput(f"crown needs >= 1 leaf per core vertex, got {self.n}")

    @property
    def order(self) -> int:
        return self.m * (self.n + 1)

    @property
    def size(self) -> int:
        return self.m * (self.n + 1)


def directed_cycle(m: int, sign: str) -> Digraph:
    """Strong orientation of the canonically labeled odd cycle.

    Vertices are named 1..m by their canonical labels; an arc (a, b) is present
    exactly when b - a is congruent to (m+1)/2 mod m for sign '+', and to
    (m-1)/2 mod m for sign '-'.
    """
    if m < 3 or m % 2 == 0:
        raise InvalidInput(f"directed_cycle needs odd m >= 3, got {m}")
    if sign not in ("+", "-"):
        raise InvalidInput(f"sign must be '+' or '-', got {sign!r}")
    step = (m + 1) // 2 if sign == "+" else (m - 1) // 2
    arcs = tuple((a, (a - 1 + step) % m + 1) for a in range(1, m + 1))
    return Digraph(m, arcs)


def star_loop(n: int) -> Digraph:
    """Star with a loop at the center, all arcs leaving the center.

    Vertex 1 is the center (with the loop); vertices 2..n+1 are the leaves,
    each with indegree 1.
    """
    if n < 1:
        raise InvalidInput(f"star needs n >= 1 leaves, got {n}")
    arcs = [(1, 1)] + [(1, j) for j in range(2, n + 2)]
    return Digraph(n + 1, tuple(arcs))


def cycle_graph(m: int) -> Graph:
    """Plain cycle on vertices 1..m in consecutive order."""
    if m < 3:
        raise InvalidInput(f"cycle needs m >= 3, got {m}")
    edges = [(i, i + 1) for i in range(1, m)] + [(m, 1)]
    return Graph(m, tuple(edges))


def star_loop_graph(n: int) -> Graph:
    """Underlying graph of star_loop(n): K_{1,n} plus a loop at the center."""
    return underlying(star_loop(n))


def build_crown(spec: CrownSpec, sign: str = "+") -> Digraph:
    """Oriented crown: core cycle on 1..m plus n private leaves per core vertex.

    For odd m the core follows the directed_cycle(m, sign) convention; for even
    m (structural use only) the core is oriented 1 -> 2 -> ... -> m -> 1 for '+'
    and reversed for '-'.  Leaf j of core vertex i is vertex m + (i-1)n + j.
    """
    m, n = spec.m, spec.n
    if sign not in ("+", "-"):
        raise InvalidInput(f"sign must be '+' or '-', got {sign!r}")
    if m % 2 == 1:
        core = directed_cycle(m, sign).arcs
    else:
        fwd = [(i, i % m + 1) for i in range(1, m + 1)]
        core = tuple(fwd) if sign == "+" else tuple((b, a) for a, b in fwd)
    arcs = list(core)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            arcs.append((i, m + (i - 1) * n + j))
    return Digraph(m * (n + 1), tuple(arcs))


def underlying(d: Digraph) -> Graph:
    """Forget orientation; a loop arc becomes a loop edge, opposite arcs merge."""
    edges = {_norm_edge(u, v) for u, v in d.arcs}
    return Graph(d.vertex_count, tuple(edges))


@dataclass(frozen=True)
class CrownShape:
    """Decomposition of a graph as (2-regular core) plus n pendants per core vertex."""

    core: tuple[int, ...]
    leaf_map: dict[int, tuple[int, ...]] = field(compare=False)
    n: int
    single_cycle: bool


def crown_shape(g: Graph) -> CrownShape:
    """Decompose g as H with n pendant leaves per H-vertex, for a 2-regular H.

    Succeeds iff removing the degree-1 vertices leaves a 2-regular graph
    (loops count twice) and every core vertex carries the same number n >= 1
    of pendants.  single_cycle reports whether the core is one loopless cycle.
    """
    deg = g.degrees()
    leaves = {v for v in g.vertices if deg[v] == 1}
    core = [v for v in g.vertices if v not in leaves]
    if not core or not leaves:
        raise NotACrownShape("graph has no pendant vertices or no core")
    core_set = set(core)

    leaf_map: dict[int, list[int]] = {c: [] for c in core}
    core_deg = {c: 0 for c in core}
    core_adj: dict[int, list[int]] = {c: [] for c in core}
    for a, b in g.edges:
        a_in, b_in = a in core_set, b in core_set
        if a_in and b_in:
            core_deg[a] += 1
            core_deg[b] += 1
            if a != b:
                core_adj[a].append(b)
                core_adj[b].append(a)
        elif a_in and not b_in:
            leaf_map[a].append(b)
        elif b_in and not a_in:
            leaf_map[b].append(a)
        else:
            raise NotACrownShape(f"edge {a},{b} joins two pendant vertices")

    counts = {len(v) for v in leaf_map.values()}
    if len(counts) != 1:
        raise NotACrownShape(f"uneven pendant counts per core vertex: {sorted(counts)}")
    n = counts.pop()
    if n < 1:
        raise NotACrownShape("core vertices carry no pendants")
    if any(core_deg[c] != 2 for c in core):
        bad = next(c for c in core if core_deg[c] != 2)
        raise NotACrownShape(f"core vertex {bad} has core degree {core_deg[bad]} != 2")

    # One loopless cycle through all core vertices?
    single = all(len(core_adj[c]) == 2 for c in core)
    if single:
        seen = {core[0]}
        prev, cur = None, core[0]
        while True:
            prev, cur = cur, next(w for w in core_adj[cur] if w != prev)
            if cur in seen:
                break
            seen.add(cur)
        single = len(seen) == len(core)

    return CrownShape(
        core=tuple(sorted(core)),
        leaf_map={c: tuple(sorted(ls)) for c, ls in leaf_map.items()},
        n=n,
        single_cycle=single,
    )


def is_single_cycle(g: Graph) -> bool:
    """True iff g is one loopless cycle through all its vertices."""
    deg = g.degrees()
    if any(deg[v] != 2 for v in g.vertices) or g.size != g.order:
        return False
    if any(a == b for a, b in g.edges):
        return False
    seen = {1}
    stack = [1]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count
