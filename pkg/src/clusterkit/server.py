"""JSON-over-HTTP session service backing the interactive explorer.

A session holds a seed history; mutation and undo walk it.  Sessions live
in memory, are locked individually (one mutation at a time per session),
expire after a configurable idle time, and can optionally be snapshotted
to files for inspection.

  POST   /session                {"seed": {...}} or {"family": {...}}
  GET    /session/{id}           current seed + history length
  POST   /session/{id}/mutate    {"k": 1-based vertex}
  POST   /session/{id}/undo
  DELETE /session/{id}

Errors: 404 unknown session, 409 frozen vertex or empty history,
422 malformed seed or family spec.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .builders import build_family
from .errors import ClusterError, FrozenVertex
from .seed import Seed, seed_from_json, seed_to_json


class CreateSession(BaseModel):
    seed: Optional[dict] = None
    family: Optional[dict] = None


class MutateBody(BaseModel):
    k: int


class _Session:
    def __init__(self, seed: Seed):
        self.history: list[Seed] = [seed]
        self.lock = threading.Lock()
        self.last_used = time.monotonic()

    @property
    def seed(self) -> Seed:
        return self.history[-1]


def create_app(state_dir: Optional[str] = None,
               idle_seconds: float = 3600.0) -> FastAPI:
    app = FastAPI(title="clusterkit session service")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    sessions: dict[str, _Session] = {}
    registry_lock = threading.Lock()
    snapshot_dir = Path(state_dir) if state_dir else None
    if snapshot_dir:
        snapshot_dir.mkdir(parents=True, exist_ok=True)

    def sweep() -> None:
        now = time.monotonic()
        with registry_lock:
            stale = [sid for sid, s in sessions.items()
                     if now - s.last_used > idle_seconds]
            for sid in stale:
                del sessions[sid]

    def get_session(sid: str) -> _Session:
        sweep()
        with registry_lock:
            session = sessions.get(sid)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        session.last_used = time.monotonic()
        return session

    def snapshot(sid: str, session: _Session) -> None:
        if snapshot_dir is None:
            return
        data = {"id": sid, "history": [seed_to_json(s) for s in session.history]}
        (snapshot_dir / f"{sid}.json").write_text(json.dumps(data, indent=2),
                                                  encoding="utf-8")

    def state_payload(sid: str, session: _Session) -> dict:
        return {"id": sid,
                "seed": seed_to_json(session.seed),
                "history": len(session.history) - 1}

    @app.post("/session", status_code=201)
    def create(body: CreateSession):
        if (body.seed is None) == (body.family is None):
            raise HTTPException(status_code=422,
                                detail="provide exactly one of seed or family")
        try:
            if body.seed is not None:
                seed = seed_from_json(body.seed)
            else:
                spec = dict(body.family)
                seed = build_family(spec.pop("name"), **spec)
        except (ClusterError, ValueError, KeyError, TypeError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        sid = uuid.uuid4().hex
        session = _Session(seed)
        with registry_lock:
            sessions[sid] = session
        snapshot(sid, session)
        return state_payload(sid, session)

    @app.get("/session/{sid}")
    def read(sid: str):
        session = get_session(sid)
        with session.lock:
            return state_payload(sid, session)

    @app.post("/session/{sid}/mutate")
    def mutate(sid: str, body: MutateBody):
        session = get_session(sid)
        with session.lock:
            seed = session.seed
            if not 1 <= body.k <= seed.n:
                raise HTTPException(status_code=422,
                                    detail=f"vertex {body.k} out of range")
            try:
                new_seed = seed.mutate(body.k - 1)
            except FrozenVertex as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            session.history.append(new_seed)
            snapshot(sid, session)
            payload = state_payload(sid, session)
            payload["k"] = body.k
            payload["new_var"] = str(new_seed.vars[body.k - 1])
            return payload

    @app.post("/session/{sid}/undo")
    def undo(sid: str):
        session = get_session(sid)
        with session.lock:
            if len(session.history) <= 1:
                raise HTTPException(status_code=409, detail="nothing to undo")
            session.history.pop()
            snapshot(sid, session)
            return state_payload(sid, session)

    @app.delete("/session/{sid}", status_code=204)
    def remove(sid: str):
        get_session(sid)
        with registry_lock:
            sessions.pop(sid, None)
        if snapshot_dir is not None:
            (snapshot_dir / f"{sid}.json").unlink(missing_ok=True)
        return None

    return app
