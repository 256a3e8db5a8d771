"""HTTP API for playing the reduction game against the engine.

The human plays proponent; whenever a move hands the turn to the
adversary, the engine answers immediately (preferring a bounded-false
component, which is minimax-perfect for the bounded game), so clients
only ever see proponent-to-move states.  All legality is decided by
`finitary.game`; the server never re-implements move rules.

Endpoints (JSON):

* ``POST /api/game`` ``{"sentence": str, "bound": int}`` -> game view
* ``GET  /api/game/{id}`` -> game view
* ``POST /api/game/{id}/move`` ``{"move": {...}}`` -> game view
* ``GET  /api/game/{id}/hint`` -> recommended move when a reduction exists

Unknown ids give 404; illegal moves give 409 with a reason.  When a
built frontend bundle exists it is served statically at /.
"""

import itertools
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import game
from .formulas import FormulaSyntaxError, free_vars, nnf, parse_formula, print_formula
from .ordinals import render_cnf

SCHEMA_VERSION = 1
HINT_DEPTH = 64

#: Default location of the built browser client, relative to the repo root.
FRONTEND_DIST = Path(__file__).resolve().parents[2] / "frontend" / "dist"


class NewGame(BaseModel):
    sentence: str
    bound: int


class MoveBody(BaseModel):
    move: dict


@dataclass
class Session:
    game_id: str
    state: game.GameState
    history: list = field(default_factory=list)


class Registry:
    def __init__(self):
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self._counter = itertools.count(1)

    def create(self, state: game.GameState) -> Session:
        with self._lock:
            game_id = f"g{next(self._counter)}"
            session = Session(game_id, state)
            self._sessions[game_id] = session
            return session

    def get(self, game_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(game_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown game {game_id}")
        return session


def _outcome(state: game.GameState) -> str:
    if game.win_check(state) is not None:
        return "won"
    if state.turn == game.PROPONENT and not game.legal_moves(state):
        return "dead"
    return "open"


def _view(session: Session) -> dict:
    state = session.state
    win = game.win_check(state)
    return {
        "schema_version": SCHEMA_VERSION,
        "game_id": session.game_id,
        "bound": state.bound,
        "turn": state.turn,
        "board": [print_formula(s) for s in state.board],
        "degrees": [render_cnf(game.degree(s)) for s in state.board],
        "legal_moves": [game.move_to_payload(m) for m in game.legal_moves(state)],
        "outcome": _outcome(state),
        "winning_index": win,
        "history": list(session.history),
    }


def _engine_answer(state: game.GameState) -> game.Move:
    return game.spoiler_adversary(state, None)


def create_app(static_dir: Optional[Path] = FRONTEND_DIST) -> FastAPI:
    """The game API app; pass static_dir=None to skip UI hosting."""
    app = FastAPI(title="reduction game")
    registry = Registry()

    @app.post("/api/game")
    def new_game(body: NewGame):
        try:
            sentence = nnf(parse_formula(body.sentence))
            if free_vars(sentence):
                raise ValueError("the sentence must be closed")
            state = game.initial_state([sentence], body.bound)
        except (FormulaSyntaxError, ValueError) as err:
            raise HTTPException(status_code=422, detail=str(err))
        session = registry.create(state)
        return _view(session)

    @app.get("/api/game/{game_id}")
    def get_game(game_id: str):
        return _view(registry.get(game_id))

    @app.post("/api/game/{game_id}/move")
    def post_move(game_id: str, body: MoveBody):
        session = registry.get(game_id)
        try:
            move = game.move_from_payload(body.move)
        except (ValueError, KeyError) as err:
            raise HTTPException(status_code=422, detail=f"bad move payload: {err}")
        if isinstance(move, game.Answer):
            raise HTTPException(status_code=409,
                                detail="the engine plays the adversary")
        try:
            state = game.apply_move(session.state, move)
        except game.IllegalMove as err:
            raise HTTPException(status_code=409, detail=str(err))
        session.history.append({"player": game.PROPONENT,
                                "move": game.move_to_payload(move)})
        while state.turn == game.ADVERSARY:
            answer = _engine_answer(state)
            state = game.apply_move(state, answer)
            session.history.append({"player": game.ADVERSARY,
                                    "move": game.move_to_payload(answer)})
        session.state = state
        return _view(session)

    @app.get("/api/game/{game_id}/hint")
    def hint(game_id: str):
        session = registry.get(game_id)
        state = session.state
        win = game.win_check(state)
        if win is not None:
            return {"kind": "win", "index": win,
                    "message": f"claim win at index {win}"}
        tree = game.synthesize_reduction(state, HINT_DEPTH)
        if tree is None:
            return {"kind": "none", "message": "no reduction exists at this bound"}
        if isinstance(tree, game.AdversaryNode):
            move = game.PointAt(tree.index)
        else:
            move = tree.move
        return {"kind": "move", "move": game.move_to_payload(move),
                "message": f"play {game.move_to_payload(move)}"}

    if static_dir is not None and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def serve(port: int = 8741, host: str = "127.0.0.1") -> int:
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port)
    return 0
