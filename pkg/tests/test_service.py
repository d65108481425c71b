"""HTTP service endpoints and error handling."""

import pytest
from fastapi.testclient import TestClient

from fanoforge.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_tables(client):
    payload = client.get("/tables/2").json()
    assert len(payload["rows"]) == 10
    assert client.get("/tables/9").status_code == 400


def test_invariants(client):
    payload = client.get("/invariants", params={"r": 2, "a": 1, "e": 2}).json()
    assert payload["x_form"] == "P^3"
    assert payload["link"]["B3"] == "7/3"
    assert client.get("/invariants", params={"r": 1, "a": 1, "e": 1}).status_code == 400


def test_terminal(client):
    payload = client.post("/terminal", json={"singularity": "1/3(1,1,1)"}).json()
    assert payload["terminal"] is False
    assert client.post("/terminal", json={"singularity": "junk"}).status_code == 400


def test_hilbert(client):
    payload = client.post(
        "/hilbert", json={"kind": "lemma1", "r": 3, "a": 1, "e": 3, "order": 4}
    ).json()
    assert payload["identity_ok"] is True
    assert payload["expansion"][0] == "1"
    missing = client.post("/hilbert", json={"kind": "lemma1"})
    assert missing.status_code == 400


def test_classify(client):
    payload = client.post(
        "/classify", json={"r": 2, "expression": "alpha^3 + beta^3"}
    ).json()
    assert payload["type"] == "Gamma(3)"
    syntax = client.post("/classify", json={"r": 2, "expression": "alpha +*"})
    assert syntax.status_code == 422


def test_moduli(client):
    rows = client.get("/moduli").json()["rows"]
    assert [r["dimension"] for r in rows] == [36, 34, 31]


def test_verify(client):
    payload = client.post(
        "/verify", json={"target": "curves", "seed": 0, "trials": 1}
    ).json()
    assert payload["ok"] is True
    assert payload["target"] == "curves"
    assert client.post("/verify", json={"target": "junk"}).status_code == 400


def test_parse(client):
    payload = client.post(
        "/parse",
        json={"expression": "x*z - y^2", "variables": ["x", "y", "z"],
              "weights": [1, 2, 3]},
    ).json()
    assert payload["canonical"] == "x*z - y^2"
    assert payload["homogeneous"] is True
