#!/usr/bin/env python3
"""Record HTTP transcripts from the real session service for the UI tests.

Regenerate with:  python3 frontend/scripts/record_fixtures.py

The replay test feeds these recorded responses to the client through a
fake fetch, so the UI is checked against exactly what the engine computes
without spawning a server from vitest.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from clusterkit.builders import build_family
from clusterkit.seed import seed_to_json
from clusterkit.server import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def record_rank2_replay() -> dict:
    client = TestClient(create_app())
    steps = []

    def call(method: str, path: str, body=None):
        response = client.request(method, path, json=body)
        steps.append({
            "method": method,
            "path": path,
            "body": body,
            "status": response.status_code,
            "response": response.json() if response.content else None,
        })
        return response.json()

    created = call("POST", "/session", {"family": {"name": "rank2", "a": 1}})
    sid = created["id"]
    call("POST", f"/session/{sid}/mutate", {"k": 1})
    call("POST", f"/session/{sid}/mutate", {"k": 2})
    call("POST", f"/session/{sid}/undo")
    call("POST", f"/session/{sid}/mutate", {"k": 2})

    # The same click sequence applied directly through the library.
    expected = build_family("rank2", a=1).mutate(0).mutate(1)
    return {"steps": steps, "library_final_seed": seed_to_json(expected)}


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    replay = record_rank2_replay()
    (FIXTURES / "rank2_replay.json").write_text(json.dumps(replay, indent=2))
    sl4 = seed_to_json(build_family("unitriangular", n=3))
    (FIXTURES / "sl4_seed.json").write_text(json.dumps(sl4, indent=2))
    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
