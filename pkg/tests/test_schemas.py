import pytest

from crownmagic.coverage import perfect_em_cover
from crownmagic.exceptions import InvalidCertificate, InvalidInput
from crownmagic.graph_core import cycle_graph, star_loop_graph
from crownmagic.labeling import star_loop_labeling
from crownmagic.oracle import brute_em_spectrum
from crownmagic.product import product_cycle_sem
from crownmagic.schemas import (
    Certificate,
    GraphSpec,
    certificate_from_labeling,
    cover_report,
    family_graph,
    family_layout,
    labeling_from_certificate,
    spectrum_document,
)


def crown_cert(valence=71):
    cover = perfect_em_cover(3, 5, 1)
    spec = GraphSpec(family="crown", m=15, n=1)
    return certificate_from_labeling(cover.achieved[valence], spec)


def test_family_layout_ids():
    ids, edges = family_layout(GraphSpec(family="crown", m=3, n=2))
    assert ids == ["c0", "c1", "c2", "l0_1", "l0_2", "l1_1", "l1_2", "l2_1", "l2_2"]
    assert ("c2", "c0") in edges
    ids, edges = family_layout(GraphSpec(family="star_loop", n=2))
    assert ids == ["c", "l1", "l2"]
    assert ("c", "c") in edges
    ids, _ = family_layout(GraphSpec(family="cycle", m=4))
    assert ids == ["v1", "v2", "v3", "v4"]


def test_family_layout_validation():
    with pytest.raises(InvalidInput):
        family_layout(GraphSpec(family="crown", m=3))
    with pytest.raises(InvalidInput):
        family_layout(GraphSpec(family="cycle"))


def test_family_graph_matches_builders():
    assert family_graph(GraphSpec(family="cycle", m=5)).edges == cycle_graph(5).edges
    assert (
        family_graph(GraphSpec(family="star_loop", n=3)).edges
        == star_loop_graph(3).edges
    )


def test_crown_certificate_round_trip():
    cert = crown_cert()
    again = Certificate.model_validate(cert.model_dump(mode="json"))
    labeling = labeling_from_certificate(again)
    assert labeling.valence == 71
    assert labeling.kind == "super-edge-magic"


def test_cycle_certificate_round_trip():
    spec = GraphSpec(family="cycle", m=15)
    cert = certificate_from_labeling(product_cycle_sem(5, 3), spec)
    assert [v.id for v in cert.vertices] == [f"v{i}" for i in range(1, 16)]
    assert labeling_from_certificate(cert).valence == 39


def test_star_certificate_round_trip():
    spec = GraphSpec(family="star_loop", n=4)
    cert = certificate_from_labeling(star_loop_labeling(4, 2), spec)
    assert cert.valence == 13
    assert labeling_from_certificate(cert).valence == 13


def test_spectrum_document_witnesses_verify():
    spec = GraphSpec(family="star_loop", n=2)
    doc = spectrum_document(brute_em_spectrum(family_graph(spec)), spec)
    assert doc.spectrum == list(range(8, 14))
    for cert in doc.witnesses:
        labeling_from_certificate(cert)


def test_cover_report_shape():
    report = cover_report(perfect_em_cover(3, 5, 1))
    assert report.interval == (69, 114)
    assert report.achieved == list(range(69, 115))
    assert report.missing == []
    assert len(report.certificates) == 46
    assert [c.valence for c in report.certificates] == report.achieved


def test_certificate_rejects_tampered_label():
    cert = crown_cert()
    cert.vertices[0].label = 99
    with pytest.raises(InvalidCertificate):
        labeling_from_certificate(cert)


def test_certificate_rejects_swapped_edge_labels():
    cert = crown_cert()
    cert.edges[0].label, cert.edges[5].label = cert.edges[5].label, cert.edges[0].label
    with pytest.raises(InvalidCertificate) as err:
        labeling_from_certificate(cert)
    assert "sum" in str(err.value)


def test_certificate_rejects_wrong_kind_or_valence():
    cert = crown_cert()
    data = cert.model_dump(mode="json")
    data["valence"] = 72
    with pytest.raises(InvalidCertificate):
        labeling_from_certificate(Certificate.model_validate(data))
    data = cert.model_dump(mode="json")
    data["kind"] = "edge-magic"
    with pytest.raises(InvalidCertificate):
        labeling_from_certificate(Certificate.model_validate(data))


def test_certificate_rejects_foreign_edges():
    cert = crown_cert()
    data = cert.model_dump(mode="json")
    data["edges"][0]["u"] = "c7"  # not adjacent to c1 in the layout
    with pytest.raises(InvalidCertificate) as err:
        labeling_from_certificate(Certificate.model_validate(data))
    assert "edge set" in str(err.value) or "twice" in str(err.value)


def test_certificate_rejects_unknown_vertex_id():
    cert = crown_cert()
    data = cert.model_dump(mode="json")
    data["vertices"][0]["id"] = "zz"
    with pytest.raises(InvalidCertificate):
        labeling_from_certificate(Certificate.model_validate(data))
