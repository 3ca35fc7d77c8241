"""Serialized certificate and report documents (pydantic models) and their codecs.

Vertex id scheme, stable across versions:
  crown:     core "c0".."c{m-1}" in cycle order, leaf j of core i is "l{i}_{j}"
  cycle:     "v1".."vm" in cycle order
  star_loop: center "c", leaves "l1".."ln"

A certificate carries the full labeling, so a third party can re-check the
magic-sum property without trusting this package.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel

from .coverage import ValenceCover
from .exceptions import (
    CrownMagicError,
    InvalidCertificate,
    InvalidInput,
    NonConstantValence,
)
from .graph_core import Graph, crown_shape
from .labeling import TotalLabeling, verify
from .oracle import SpectrumReport as OracleSpectrum

Family = Literal["crown", "cycle", "star_loop"]
Kind = Literal["super-edge-magic", "edge-magic"]
Mode = Literal["sem", "em"]


class GraphSpec(BaseModel):
    family: Family
    m: Optional[int] = None
    n: Optional[int] = None


class VertexEntry(BaseModel):
    id: str
    label: int


class EdgeEntry(BaseModel):
    u: str
    v: str
    label: int


class Certificate(BaseModel):
    graph: GraphSpec
    kind: Kind
    valence: int
    vertices: list[VertexEntry]
    edges: list[EdgeEntry]


class CoverReport(BaseModel):
    graph: GraphSpec
    mode: Mode
    interval: tuple[int, int]
    achieved: list[int]
    missing: list[int]
    certificates: list[Certificate]


class SpectrumDocument(BaseModel):
    graph: GraphSpec
    mode: Mode
    spectrum: list[int]
    witnesses: list[Certificate]
    search_space_size: int
    exhaustive: bool


class BezoutDocument(BaseModel):
    p: int
    q: int
    alpha: int
    beta: int
    x: int
    x_prime: int
    alpha_prime: int
    beta_prime: int


def family_layout(spec: GraphSpec) -> tuple[list[str], list[tuple[str, str]]]:
    """Canonical vertex ids and edge list for a graph family spec."""
    if spec.family == "crown":
        if spec.m is None or spec.n is None or spec.m < 3 or spec.n < 1:
            raise InvalidInput(f"crown spec needs m >= 3 and n >= 1, got {spec}")
        m, n = spec.m, spec.n
        ids = [f"c{i}" for i in range(m)]
        ids += [f"l{i}_{j}" for i in range(m) for j in range(1, n + 1)]
        edges = [(f"c{i}", f"c{(i + 1) % m}") for i in range(m)]
        edges += [(f"c{i}", f"l{i}_{j}") for i in range(m) for j in range(1, n + 1)]
        return ids, edges
    if spec.family == "cycle":
        if spec.m is None or spec.m < 3:
            raise InvalidInput(f"cycle spec needs m >= 3, got {spec}")
        m = spec.m
        ids = [f"v{i}" for i in range(1, m + 1)]
        edges = [(f"v{i}", f"v{i + 1}") for i in range(1, m)] + [(f"v{m}", "v1")]
        return ids, edges
    if spec.family == "star_loop":
        if spec.n is None or spec.n < 1:
            raise InvalidInput(f"star spec needs n >= 1, got {spec}")
        n = spec.n
        ids = ["c"] + [f"l{j}" for j in range(1, n + 1)]
        edges = [("c", "c")] + [("c", f"l{j}") for j in range(1, n + 1)]
        return ids, edges
    raise InvalidInput(f"unknown family {spec.family!r}")


def family_graph(spec: GraphSpec) -> Graph:
    """Internal graph for a family spec, vertices numbered in layout order."""
    ids, edges = family_layout(spec)
    index = {vid: i + 1 for i, vid in enumerate(ids)}
    return Graph(len(ids), tuple((index[a], index[b]) for a, b in edges))


def _cycle_walk(graph: Graph, members: list[int]) -> list[int]:
    """Walk a cycle through the given vertices: start at the smallest id, then
    its smaller neighbor."""
    inside = set(members)
    adj = {v: [] for v in members}
    for a, b in graph.edges:
        if a in inside and b in inside and a != b:
            adj[a].append(b)
            adj[b].append(a)
    start = min(members)
    order = [start, min(adj[start])]
    while len(order) < len(members):
        nxt = [w for w in adj[order[-1]] if w != order[-2]]
        order.append(nxt[0])
    return order


def _crown_id_map(labeling: TotalLabeling) -> dict[int, str]:
    shape = crown_shape(labeling.graph)
    if not shape.single_cycle:
        raise InvalidInput("core is not a single cycle; cannot serialize as a crown")
    order = _cycle_walk(labeling.graph, list(shape.core))
    ids = {}
    for i, c in enumerate(order):
        ids[c] = f"c{i}"
        for j, leaf in enumerate(shape.leaf_map[c], start=1):
            ids[leaf] = f"l{i}_{j}"
    return ids


def _cycle_id_map(labeling: TotalLabeling) -> dict[int, str]:
    order = _cycle_walk(labeling.graph, list(labeling.graph.vertices))
    return {v: f"v{i}" for i, v in enumerate(order, start=1)}


def _star_id_map(labeling: TotalLabeling) -> dict[int, str]:
    degs = labeling.graph.degrees()
    centers = [v for v in labeling.graph.vertices if degs[v] != 1]
    if len(centers) != 1:
        raise InvalidInput("graph is not a star with a loop")
    ids = {centers[0]: "c"}
    leaves = sorted(v for v in labeling.graph.vertices if v != centers[0])
    for j, leaf in enumerate(leaves, start=1):
        ids[leaf] = f"l{j}"
    return ids


def certificate_from_labeling(labeling: TotalLabeling, spec: GraphSpec) -> Certificate:
    """Serialize a verified labeling under the canonical id scheme of its family."""
    if spec.family == "crown":
        id_map = _crown_id_map(labeling)
    elif spec.family == "cycle":
        id_map = _cycle_id_map(labeling)
    else:
        id_map = _star_id_map(labeling)

    layout_ids, layout_edges = family_layout(spec)
    if sorted(id_map.values()) != sorted(layout_ids):
        raise InvalidInput(f"labeling does not match the {spec.family} layout")

    by_id = {vid: v for v, vid in id_map.items()}
    vertices = [
        VertexEntry(id=vid, label=labeling.vertex_labels[by_id[vid]])
        for vid in layout_ids
    ]
    edges = [
        EdgeEntry(u=a, v=b, label=labeling.label_of_edge(by_id[a], by_id[b]))
        for a, b in layout_edges
    ]
    return Certificate(
        graph=spec,
        kind=labeling.kind,
        valence=labeling.valence,
        vertices=vertices,
        edges=edges,
    )


def labeling_from_certificate(cert: Certificate) -> TotalLabeling:
    """Re-verify a certificate; raises InvalidCertificate naming the offender."""
    layout_ids, layout_edges = family_layout(cert.graph)
    index = {vid: i + 1 for i, vid in enumerate(layout_ids)}

    seen_ids = [v.id for v in cert.vertices]
    if sorted(seen_ids) != sorted(layout_ids):
        extra = set(seen_ids) - set(layout_ids)
        missing = set(layout_ids) - set(seen_ids)
        raise InvalidCertificate(
            f"vertex ids do not match the {cert.graph.family} layout"
            + (f"; unexpected {sorted(extra)}" if extra else "")
            + (f"; missing {sorted(missing)}" if missing else "")
        )

    def norm(a: str, b: str) -> tuple[str, str]:
        return (a, b) if a <= b else (b, a)

    expected_edges = {norm(a, b) for a, b in layout_edges}
    seen_edges = {}
    for e in cert.edges:
        if e.u not in index or e.v not in index:
            raise InvalidCertificate(f"edge ({e.u},{e.v}) uses an unknown vertex id")
        key = norm(e.u, e.v)
        if key in seen_edges:
            raise InvalidCertificate(f"edge ({e.u},{e.v}) appears twice")
        seen_edges[key] = e.label
    if set(seen_edges) != expected_edges:
        off = set(seen_edges) ^ expected_edges
        raise InvalidCertificate(
            f"edge set does not match the {cert.graph.family} layout; offending: {sorted(off)}"
        )

    graph = family_graph(cert.graph)
    vertex_labels = {index[v.id]: v.label for v in cert.vertices}
    edge_labels = {}
    for (a, b), lab in seen_edges.items():
        u, v = index[a], index[b]
        edge_labels[(u, v) if u <= v else (v, u)] = lab

    rev = {i: vid for vid, i in index.items()}
    try:
        labeling = verify(graph, vertex_labels, edge_labels)
    except NonConstantValence as exc:
        ea = (rev[exc.edge_a[0]], rev[exc.edge_a[1]])
        eb = (rev[exc.edge_b[0]], rev[exc.edge_b[1]])
        raise InvalidCertificate(
            f"edge {ea} has sum {exc.sum_a} but edge {eb} has sum {exc.sum_b}"
        ) from exc
    except CrownMagicError as exc:
        raise InvalidCertificate(str(exc)) from exc

    if labeling.kind != cert.kind:
        raise InvalidCertificate(
            f"certificate claims {cert.kind} but labeling is {labeling.kind}"
        )
    if labeling.valence != cert.valence:
        raise InvalidCertificate(
            f"certificate claims valence {cert.valence} but edges sum to {labeling.valence}"
        )
    return labeling


def cover_report(cover: ValenceCover) -> CoverReport:
    spec = GraphSpec(family="crown", m=cover.m, n=cover.n)
    achieved = sorted(cover.achieved)
    certificates = [
        certificate_from_labeling(cover.achieved[k], spec) for k in achieved
    ]
    return CoverReport(
        graph=spec,
        mode=cover.mode,
        interval=(cover.interval.lo, cover.interval.hi),
        achieved=achieved,
        missing=cover.missing,
        certificates=certificates,
    )


def spectrum_document(report: OracleSpectrum, spec: GraphSpec) -> SpectrumDocument:
    witnesses = [
        certificate_from_labeling(report.witnesses[k], spec) for k in report.spectrum
    ]
    return SpectrumDocument(
        graph=spec,
        mode=report.mode,
        spectrum=list(report.spectrum),
        witnesses=witnesses,
        search_space_size=report.search_space_size,
        exhaustive=report.exhaustive,
    )
