"""HTTP session service: wire behavior, error codes, replay fidelity."""

import time

import pytest
from fastapi.testclient import TestClient

from clusterkit.builders import build_family
from clusterkit.seed import seed_to_json
from clusterkit.server import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def create_session(client, body):
    r = client.post("/session", json=body)
    assert r.status_code == 201
    return r.json()


def test_create_from_family_and_read_back(client):
    state = create_session(client, {"family": {"name": "rank2", "a": 1}})
    assert state["seed"]["vars"] == ["x1", "x2"]
    assert state["history"] == 0
    r = client.get(f"/session/{state['id']}")
    assert r.status_code == 200
    assert r.json() == state


def test_create_from_seed_json(client):
    seed = build_family("unitriangular", n=3)
    state = create_session(client, {"seed": seed_to_json(seed)})
    assert state["seed"]["frozen"] == [4, 5, 6]


def test_mutate_returns_the_new_variable(client):
    state = create_session(client, {"family": {"name": "rank2", "a": 1}})
    r = client.post(f"/session/{state['id']}/mutate", json={"k": 1})
    assert r.status_code == 200
    body = r.json()
    assert body["new_var"] == "x1^-1 + x1^-1*x2"
    assert body["history"] == 1
    assert body["seed"]["vars"] == ["x1^-1 + x1^-1*x2", "x2"]


def test_mutation_involution_over_the_wire(client):
    state = create_session(client, {"family": {"name": "rank2", "a": 1}})
    sid = state["id"]
    client.post(f"/session/{sid}/mutate", json={"k": 1})
    r = client.post(f"/session/{sid}/mutate", json={"k": 1})
    assert r.json()["seed"]["vars"] == state["seed"]["vars"]


def test_frozen_vertex_conflict(client):
    state = create_session(client, {"family": {"name": "unitriangular", "n": 3}})
    r = client.post(f"/session/{state['id']}/mutate", json={"k": 4})
    assert r.status_code == 409


def test_out_of_range_vertex_unprocessable(client):
    state = create_session(client, {"family": {"name": "rank2", "a": 1}})
    assert client.post(f"/session/{state['id']}/mutate",
                       json={"k": 7}).status_code == 422


def test_unknown_session_is_404(client):
    assert client.get("/session/nope").status_code == 404
    assert client.post("/session/nope/mutate", json={"k": 1}).status_code == 404
    assert client.delete("/session/nope").status_code == 404


def test_malformed_seed_is_422(client):
    assert client.post("/session", json={"seed": {"n": 2}}).status_code == 422
    assert client.post("/session", json={}).status_code == 422
    assert client.post("/session", json={"family": {"name": "bogus"}}).status_code == 422


def test_undo_walks_the_history(client):
    state = create_session(client, {"family": {"name": "rank2", "a": 1}})
    sid = state["id"]
    client.post(f"/session/{sid}/mutate", json={"k": 1})
    after_one = client.get(f"/session/{sid}").json()
    client.post(f"/session/{sid}/mutate", json={"k": 2})
    r = client.post(f"/session/{sid}/undo")
    assert r.json()["seed"] == after_one["seed"]
    client.post(f"/session/{sid}/undo")
    assert client.post(f"/session/{sid}/undo").status_code == 409


def test_delete_session(client):
    state = create_session(client, {"family": {"name": "rank2", "a": 1}})
    assert client.delete(f"/session/{state['id']}").status_code == 204
    assert client.get(f"/session/{state['id']}").status_code == 404


def test_session_state_matches_the_library_replay(client):
    """mutate 1, mutate 2, undo, mutate 2 equals the direct computation."""
    state = create_session(client, {"family": {"name": "rank2", "a": 1}})
    sid = state["id"]
    for k in (1, 2):
        client.post(f"/session/{sid}/mutate", json={"k": k})
    client.post(f"/session/{sid}/undo")
    wire = client.post(f"/session/{sid}/mutate", json={"k": 2}).json()

    lib = build_family("rank2", a=1).mutate(0).mutate(1)
    assert wire["seed"] == seed_to_json(lib)
    assert wire["history"] == 2


def test_sessions_expire_after_idle(tmp_path):
    client = TestClient(create_app(idle_seconds=0.01))
    state = client.post("/session",
                        json={"family": {"name": "rank2", "a": 1}}).json()
    time.sleep(0.05)
    assert client.get(f"/session/{state['id']}").status_code == 404


def test_snapshots_written_and_removed(tmp_path):
    client = TestClient(create_app(state_dir=str(tmp_path)))
    state = client.post("/session",
                        json={"family": {"name": "rank2", "a": 1}}).json()
    sid = state["id"]
    client.post(f"/session/{sid}/mutate", json={"k": 1})
    snap = tmp_path / f"{sid}.json"
    assert snap.exists()
    import json as _json
    assert len(_json.loads(snap.read_text())["history"]) == 2
    client.delete(f"/session/{sid}")
    assert not snap.exists()
