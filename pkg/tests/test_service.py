import pytest
from fastapi.testclient import TestClient

from crownmagic.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_healthz(client):
    assert client.get("/healthz").json() == {"status": "ok"}


def test_intervals_endpoint(client):
    r = client.post("/intervals", json={"family": "crown", "m": 15, "n": 1, "mode": "em"})
    assert r.status_code == 200
    assert r.json()["interval"] == [69, 114]


def test_intervals_empty_is_400(client):
    r = client.post("/intervals", json={"family": "cycle", "m": 4, "mode": "sem"})
    assert r.status_code == 400


def test_cover_endpoint_complete(client):
    r = client.post("/cover", json={"p": 3, "q": 5, "n": 1, "mode": "sem"})
    assert r.status_code == 200
    body = r.json()
    assert body["achieved"] == list(range(69, 85))
    assert body["missing"] == []


def test_cover_endpoint_experiment_reports_missing(client):
    r = client.post("/cover", json={"p": 9, "q": 5, "n": 1, "mode": "sem"})
    assert r.status_code == 200
    assert r.json()["missing"] == [206, 217, 221, 232, 236, 247]


def test_cover_endpoint_rejects_even(client):
    r = client.post("/cover", json={"p": 4, "q": 5, "n": 1, "mode": "sem"})
    assert r.status_code == 400


def test_generate_then_verify(client):
    r = client.post("/generate", json={"m": 15, "n": 1, "valence": 84})
    assert r.status_code == 200
    cert = r.json()
    assert cert["valence"] == 84
    v = client.post("/verify", json=cert).json()
    assert v["valid"] is True
    assert v["kind"] == "super-edge-magic"


def test_generate_unreachable_is_404(client):
    r = client.post("/generate", json={"m": 45, "n": 1, "valence": 206})
    assert r.status_code == 404


def test_verify_rejects_tampered(client):
    cert = client.post("/generate", json={"m": 15, "n": 1, "valence": 84}).json()
    cert["edges"][2]["label"] = cert["edges"][3]["label"]
    v = client.post("/verify", json=cert).json()
    assert v["valid"] is False
    assert v["error"]


def test_spectrum_endpoint(client):
    r = client.post("/spectrum", json={"family": "star_loop", "n": 3, "mode": "sem"})
    assert r.status_code == 200
    assert r.json()["spectrum"] == [10, 11, 12, 13]


def test_spectrum_guard_is_422(client):
    r = client.post("/spectrum", json={"family": "crown", "m": 15, "n": 1, "mode": "sem"})
    assert r.status_code == 422


def test_bezout_endpoint(client):
    r = client.post("/bezout", json={"p": 5, "q": 7})
    body = r.json()
    assert (body["alpha"], body["beta"], body["x"], body["x_prime"]) == (3, -2, 15, 21)


def test_conflicts_endpoint(client):
    r = client.post("/conflicts", json={"p": 3, "k": 1, "q": 5})
    assert r.json() == {"modulus": 15, "values": [6, 10]}


def test_bound_endpoint(client):
    assert client.post("/bound", json={"m": 15, "n": 2}).json() == {"bound": 9}
    assert client.post("/bound", json={"m": 12, "cycle": True}).json() == {"bound": 2}
    assert client.post("/bound", json={"m": 12}).status_code == 400
