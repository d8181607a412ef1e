"""JSON-over-HTTP API for interactive play and position analysis.

Sessions are held in memory with LRU eviction; nothing is persisted.  The
human always moves the biggest coin (the move payload carries only a target
square); the engine replies with perfect play, falling back to a deterministic
stalling move when it is lost.  Analysis endpoints are stateless.

Endpoints::

    POST /api/games                     create a session
    GET  /api/games/{id}                fetch current state
    POST /api/games/{id}/moves          human plays the biggest coin to a target
    POST /api/games/{id}/engine-move    engine replies (optionally annotated)
    GET  /api/analyze                   stateless position analysis
"""

from __future__ import annotations

import secrets
import threading
from collections import OrderedDict
from dataclasses import dataclass, field

from fastapi import Body, FastAPI, HTTPException

from .closedform import (
    corollary_value,
    has_value_one_misere,
    has_value_one_normal,
    is_p_position_misere,
    is_p_position_normal,
    winning_move_closed_form,
)
from .core import (
    Convention,
    InvalidPositionError,
    Position,
    Ruleset,
    apply_move,
    empty_squares_below,
    is_terminal,
    legal_moves,
)
from .grundy import GrundyOracle, shared_oracle
from .reductions import canonicalize

DEFAULT_SESSION_CAP = 1024

HUMAN = "human"
ENGINE = "engine"


def engine_choice(
    position: Position,
    ruleset: Ruleset,
    convention: Convention,
    oracle: GrundyOracle | None = None,
) -> tuple[int, int]:
    """The engine's move: a winning move when one exists, else the longest stall.

    Winning moves come from the closed-form synthesis for normal Max-Welter
    with at least two coins (no search needed there), otherwise from the
    oracle.  In lost positions the engine plays the legal move with the
    largest target, an arbitrary but fixed policy that keeps games long.
    """
    oracle = oracle or shared_oracle()
    winning = oracle.optimal_moves(position, ruleset, convention)
    if winning:
        if (
            ruleset is Ruleset.MAX_WELTER
            and convention is Convention.NORMAL
            and len(position) >= 2
        ):
            return winning_move_closed_form(position)
        return winning[0]
    return max(legal_moves(position, ruleset), key=lambda move: (move[1], move[0]))


@dataclass
class GameSession:
    id: str
    position: Position
    ruleset: Ruleset
    convention: Convention
    to_move: str
    initial: Position
    history: list[tuple[int, int]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """Thread-safe LRU map of live sessions."""

    def __init__(self, cap: int = DEFAULT_SESSION_CAP):
        self._cap = cap
        self._sessions: OrderedDict[str, GameSession] = OrderedDict()
        self._lock = threading.Lock()

    def add(self, session: GameSession) -> None:
        with self._lock:
            self._sessions[session.id] = session
            while len(self._sessions) > self._cap:
                self._sessions.popitem(last=False)

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail=f"no game with id {session_id!r}")
            self._sessions.move_to_end(session_id)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def _other(player: str) -> str:
    return ENGINE if player == HUMAN else HUMAN


def _state(session: GameSession) -> dict:
    position = session.position
    terminal = is_terminal(position, session.ruleset)
    if terminal:
        targets: list[int] = []
        # Normal play: the player unable to move loses.  Misere: they win.
        if session.convention is Convention.NORMAL:
            winner = _other(session.to_move)
        else:
            winner = session.to_move
    else:
        targets = empty_squares_below(position, position.biggest)
        winner = None
    return {
        "squares": list(position.squares),
        "to_move": session.to_move,
        "terminal": terminal,
        "legal_targets": targets,
        "winner": winner,
    }


def _parse_squares(raw) -> Position:
    if not isinstance(raw, list) or not raw:
        raise HTTPException(status_code=400, detail="squares must be a non-empty list of integers")
    for value in raw:
        if not isinstance(value, int) or isinstance(value, bool):
            raise HTTPException(status_code=400, detail=f"square {value!r} is not an integer")
    try:
        return Position(raw)
    except InvalidPositionError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _parse_enum(kind, raw, fallback):
    if raw is None:
        return fallback
    try:
        return kind(raw)
    except ValueError:
        valid = ", ".join(member.value for member in kind)
        raise HTTPException(status_code=400, detail=f"{raw!r} is not one of: {valid}")


def create_app(
    session_cap: int = DEFAULT_SESSION_CAP,
    oracle: GrundyOracle | None = None,
    static_dir: str | None = None,
) -> FastAPI:
    """Build the application; ``static_dir`` optionally serves the web UI bundle."""
    oracle = oracle or shared_oracle()
    store = SessionStore(session_cap)
    app = FastAPI(title="maxwelter", docs_url=None, redoc_url=None)

    @app.post("/api/games")
    def create_game(payload: dict = Body(...)):
        position = _parse_squares(payload.get("squares"))
        ruleset = _parse_enum(Ruleset, payload.get("ruleset"), Ruleset.MAX_WELTER)
        convention = _parse_enum(Convention, payload.get("convention"), Convention.NORMAL)
        human_first = payload.get("human_plays_first", True)
        if not isinstance(human_first, bool):
            raise HTTPException(status_code=400, detail="human_plays_first must be a boolean")
        session = GameSession(
            id=secrets.token_urlsafe(9),
            position=position,
            ruleset=ruleset,
            convention=convention,
            to_move=HUMAN if human_first else ENGINE,
            initial=position,
        )
        store.add(session)
        return {"id": session.id, "state": _state(session)}

    @app.get("/api/games/{session_id}")
    def get_game(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return {"state": _state(session)}

    @app.post("/api/games/{session_id}/moves")
    def human_move(session_id: str, payload: dict = Body(...)):
        session = store.get(session_id)
        target = payload.get("target")
        if not isinstance(target, int) or isinstance(target, bool):
            raise HTTPException(status_code=422, detail="target must be an integer square")
        with session.lock:
            if session.to_move != HUMAN:
                raise HTTPException(status_code=409, detail="it is not the human's turn")
            position = session.position
            if is_terminal(position, session.ruleset) or target not in empty_squares_below(
                position, position.biggest
            ):
                raise HTTPException(
                    status_code=422,
                    detail=f"target {target} is not a legal square for the biggest coin",
                )
            origin = position.biggest
            session.position = apply_move(position, origin, target)
            session.history.append((origin, target))
            session.to_move = ENGINE
            return {"state": _state(session)}

    @app.post("/api/games/{session_id}/engine-move")
    def engine_move(session_id: str, annotate: bool = False):
        session = store.get(session_id)
        with session.lock:
            if session.to_move != ENGINE:
                raise HTTPException(status_code=409, detail="it is not the engine's turn")
            position = session.position
            if is_terminal(position, session.ruleset):
                raise HTTPException(status_code=409, detail="the game is already over")
            annotation = None
            if annotate:
                annotation = {
                    "grundy": oracle.grundy(position, session.ruleset, session.convention),
                    "outcome": oracle.outcome(position, session.ruleset, session.convention).value,
                }
            origin, target = engine_choice(position, session.ruleset, session.convention, oracle)
            session.position = apply_move(position, origin, target)
            session.history.append((origin, target))
            session.to_move = HUMAN
            response = {"move": {"from": origin, "to": target}, "state": _state(session)}
            if annotation is not None:
                response["annotation"] = annotation
            return response

    @app.get("/api/analyze")
    def analyze(squares: str, ruleset: str | None = None, convention: str | None = None):
        try:
            position = Position.parse(squares)
        except InvalidPositionError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        chosen_ruleset = _parse_enum(Ruleset, ruleset, Ruleset.MAX_WELTER)
        chosen_convention = _parse_enum(Convention, convention, Convention.NORMAL)

        value = oracle.grundy(position, chosen_ruleset, chosen_convention)
        verdict = oracle.outcome(position, chosen_ruleset, chosen_convention)
        if is_terminal(position, chosen_ruleset):
            winning_targets: list[int] = []
        else:
            winning_targets = sorted(
                {target for _, target in oracle.optimal_moves(position, chosen_ruleset, chosen_convention)}
            )

        # Closed forms only speak about the max-coin ruleset with >= 2 coins;
        # the exact-value formula and the canonical form only under normal play.
        p_match = value1_match = exact = None
        canonical = None
        if chosen_ruleset is Ruleset.MAX_WELTER and len(position) >= 2:
            if chosen_convention is Convention.NORMAL:
                p_match = is_p_position_normal(position)
                value1_match = has_value_one_normal(position)
                exact = corollary_value(position) if len(position) >= 3 else None
            else:
                p_match = is_p_position_misere(position)
                value1_match = has_value_one_misere(position)
        if chosen_ruleset is Ruleset.MAX_WELTER and chosen_convention is Convention.NORMAL:
            canonical = list(canonicalize(position).squares)

        return {
            "grundy": value,
            "outcome": verdict.value,
            "winning_targets": winning_targets,
            "closed_form": {
                "p_match": p_match,
                "value1_match": value1_match,
                "corollary_value": exact,
            },
            "canonical_form": canonical,
        }

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def serve(
    port: int = 8080,
    static_dir: str | None = None,
    host: str = "127.0.0.1",
    session_cap: int = DEFAULT_SESSION_CAP,
) -> None:
    """Run the API (and optionally the web UI) under uvicorn; blocks until stopped."""
    import uvicorn

    uvicorn.run(create_app(session_cap=session_cap, static_dir=static_dir), host=host, port=port)
