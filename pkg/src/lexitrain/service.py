"""HTTP facade over the session engine.

The service is a thin shell: every endpoint delegates to the engine's
pure transition functions, persists the matching progress events before
responding, and renders steps and feedback as JSON documents. Sessions
live in memory keyed by id; durable progress lives in the event log, so
a restarted service keeps gating and review lists but drops live
sessions.

Step and answer endpoints accept an ``Idempotency-Key`` header. A
request replayed with the key of the previous call returns the recorded
response without advancing the session, so flaky clients cannot skip
content or double-answer.
"""

from __future__ import annotations

import threading
import uuid
from pathlib import Path
from typing import Mapping

from fastapi import FastAPI, Header, Request
from fastapi.responses import FileResponse, JSONResponse
from pydantic import BaseModel, Field

from . import engine, feedback
from .driver import record_session_started
from .engine import (
    CategoryCompleteStep,
    LevelCompleteStep,
    PresentStep,
    QuizStep,
    SchedulePolicy,
    Session,
    Step,
)
from .errors import LexitrainError
from .feedback import FeedbackMessage, FeedbackModality, Timing
from .lexicon import LevelRank, LexiconPack, item_to_dict, list_categories, load_pack
from .progress import (
    AnswerSubmitted,
    CategoryCompleted,
    ItemPresented,
    ProgressStore,
)

_STATUS_BY_CODE = {
    "LEVEL_LOCKED": 409,
    "UNKNOWN_CATEGORY": 404,
    "INVALID_MODALITY": 422,
    "SESSION_COMPLETE": 410,
    "SESSION_NOT_COMPLETE": 409,
    "OUT_OF_ORDER_ANSWER": 409,
    "UNKNOWN_QUESTION": 404,
    "INSUFFICIENT_DISTRACTORS": 422,
    "PACK_SYNTAX": 400,
    "PACK_SCHEMA": 400,
}


class ApiError(Exception):
    """An error already shaped for the wire: status, stable code, detail."""

    def __init__(self, status: int, code: str, message: str, detail: dict | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail
        super().__init__(message)

    def response(self) -> JSONResponse:
        return JSONResponse(
            status_code=self.status,
            content={"code": self.code, "message": self.message, "detail": self.detail},
        )


def _wrap_domain_error(exc: LexitrainError) -> ApiError:
    detail = None
    prerequisite = getattr(exc, "prerequisite", None)
    if prerequisite is not None:
        detail = {"prerequisiteLevel": prerequisite[0], "prerequisiteCategory": prerequisite[1]}
    return ApiError(
        status=_STATUS_BY_CODE.get(exc.code, 500),
        code=exc.code,
        message=str(exc),
        detail=detail,
    )


# --- request bodies ----------------------------------------------------------

class PolicyBody(BaseModel):
    blockSize: int = 5
    quizLength: int = 3
    quizToggle: bool = True


class ModalityBody(BaseModel):
    type: str = "KR"
    level: str = "Task"
    timing: str = "Immediate"


class CreateSessionBody(BaseModel):
    learnerId: str
    packId: str
    level: str
    category: str
    policy: PolicyBody | None = None
    modality: ModalityBody | None = None
    seed: int | None = None


class AnswerBody(BaseModel):
    questionId: str
    selectedIndex: int = Field(ge=0, le=3)


# --- document rendering ------------------------------------------------------

def step_doc(step: Step) -> dict:
    if isinstance(step, PresentStep):
        return {
            "type": "present",
            "item": item_to_dict(step.item),
            "position": step.position,
            "total": step.total,
        }
    if isinstance(step, QuizStep):
        # The correct index never leaves the server; verdicts come from
        # the answer endpoint.
        return {
            "type": "quiz",
            "question": {
                "questionId": step.question.question_id,
                "prompt": step.question.prompt_text,
                "options": list(step.question.options),
            },
        }
    if isinstance(step, CategoryCompleteStep):
        return {"type": "categoryComplete", "report": step.report.to_dict()}
    if isinstance(step, LevelCompleteStep):
        return {
            "type": "levelComplete",
            "reviewList": [item_to_dict(i) for i in step.review_list],
        }
    raise TypeError(f"unknown step {step!r}")


def feedback_doc(question_id: str, message: FeedbackMessage) -> dict:
    return {
        "questionId": question_id,
        "verdict": message.verdict.value,
        "highlight": message.highlight.value,
        "body": message.body,
        "levelNote": message.level_note,
        "advisory": message.advisory,
    }


# --- app ---------------------------------------------------------------------

class _ServiceState:
    def __init__(self, packs: Mapping[str, LexiconPack], store: ProgressStore,
                 packs_dir: Path | None):
        self.packs = dict(packs)
        self.store = store
        self.packs_dir = packs_dir
        self.sessions: dict[str, Session] = {}
        self.step_cache: dict[str, tuple[str, dict]] = {}
        self.answer_cache: dict[str, tuple[str, dict]] = {}
        self.lock = threading.Lock()

    def pack(self, pack_id: str) -> LexiconPack:
        pack = self.packs.get(pack_id)
        if pack is None:
            raise ApiError(404, "UNKNOWN_PACK", f"no pack '{pack_id}' loaded")
        return pack

    def session(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            raise ApiError(404, "UNKNOWN_SESSION", f"no session '{session_id}'")
        return session


def load_packs_dir(packs_dir: str | Path) -> dict[str, LexiconPack]:
    packs = {}
    for path in sorted(Path(packs_dir).glob("*.json")):
        pack = load_pack(path)
        packs[pack.pack_id] = pack
    return packs


def create_app(
    packs: Mapping[str, LexiconPack],
    store: ProgressStore,
    *,
    packs_dir: str | Path | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="lexitrain", version="0.1.0")
    state = _ServiceState(packs, store, Path(packs_dir) if packs_dir else None)
    app.state.trainer = state

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError):
        return exc.response()

    @app.exception_handler(LexitrainError)
    async def _domain_error(_request: Request, exc: LexitrainError):
        return _wrap_domain_error(exc).response()

    def _persist_step_events(session: Session, step: Step) -> None:
        if isinstance(step, PresentStep):
            state.store.append_event(
                session.learner_id,
                ItemPresented(
                    session_id=session.session_id,
                    item_id=step.item.item_id,
                    timestamp=state.store.now(),
                ),
            )
        elif isinstance(step, CategoryCompleteStep):
            state.store.append_event(
                session.learner_id,
                CategoryCompleted(
                    session_id=session.session_id,
                    report=step.report.to_dict(),
                    timestamp=state.store.now(),
                ),
            )

    @app.post("/v1/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        pack = state.pack(body.packId)
        try:
            level_rank = LevelRank(body.level)
        except ValueError:
            raise ApiError(422, "INVALID_LEVEL", f"unknown level '{body.level}'") from None
        policy = (
            SchedulePolicy(
                block_size=body.policy.blockSize,
                quiz_length=body.policy.quizLength,
                quiz_toggle=body.policy.quizToggle,
            )
            if body.policy
            else engine.DEFAULT_POLICY
        )
        if body.modality:
            try:
                modality = FeedbackModality.from_strings(
                    body.modality.type, body.modality.level, body.modality.timing
                )
            except ValueError as exc:
                raise ApiError(422, "INVALID_MODALITY", str(exc)) from None
        else:
            modality = feedback.DEFAULT_MODALITY

        with state.lock:
            progress = state.store.replay(body.learnerId)
            session = engine.start_session(
                body.learnerId,
                pack,
                level_rank,
                body.category,
                policy=policy,
                modality=modality,
                seed=body.seed if body.seed is not None else 0,
                progress=progress,
                session_id=f"s-{uuid.uuid4().hex[:12]}",
            )
            record_session_started(state.store, session)
            step, session = engine.next_step(session)
            _persist_step_events(session, step)
            state.sessions[session.session_id] = session
        return {"sessionId": session.session_id, "firstStep": step_doc(step)}

    @app.get("/v1/sessions/{session_id}/step")
    def next_step(
        session_id: str,
        idempotency_key: str | None = Header(default=None, alias="Idempotency-Key"),
    ):
        with state.lock:
            cached = state.step_cache.get(session_id)
            if idempotency_key is not None and cached is not None:
                token, payload = cached
                if token == idempotency_key:
                    return payload
            session = state.session(session_id)
            step, session = engine.next_step(session)
            _persist_step_events(session, step)
            state.sessions[session_id] = session
            payload = step_doc(step)
            if idempotency_key is not None:
                state.step_cache[session_id] = (idempotency_key, payload)
        return payload

    @app.post("/v1/sessions/{session_id}/answer")
    def answer(
        session_id: str,
        body: AnswerBody,
        idempotency_key: str | None = Header(default=None, alias="Idempotency-Key"),
    ):
        with state.lock:
            cached = state.answer_cache.get(session_id)
            if idempotency_key is not None and cached is not None:
                token, payload = cached
                if token == idempotency_key:
                    return payload
            session = state.session(session_id)
            before = session
            message, session = engine.submit_answer(
                session, body.questionId, body.selectedIndex
            )
            question = before.current_question
            assert question is not None
            state.store.append_event(
                session.learner_id,
                AnswerSubmitted(
                    session_id=session.session_id,
                    question_id=body.questionId,
                    subject_item_id=question.subject_item_id,
                    correct=body.selectedIndex == question.correct_index,
                    timestamp=state.store.now(),
                ),
            )
            block_feedback = None
            if (
                session.modality.timing is Timing.DELAYED
                and engine.block_just_finished(before, session)
            ):
                question_ids = [d.question.question_id for d in session.deferred]
                messages, session = feedback.flush_delayed(session)
                block_feedback = [
                    feedback_doc(qid, msg) for qid, msg in zip(question_ids, messages)
                ]
            state.sessions[session_id] = session
            payload = {
                "questionId": body.questionId,
                "feedback": feedback_doc(body.questionId, message),
                "blockFeedback": block_feedback,
            }
            if idempotency_key is not None:
                state.answer_cache[session_id] = (idempotency_key, payload)
        return payload

    @app.get("/v1/sessions/{session_id}/report")
    def report(session_id: str):
        session = state.session(session_id)
        if session.report is None:
            raise ApiError(
                409,
                "SESSION_NOT_COMPLETE",
                f"session '{session_id}' has not completed its category",
            )
        return session.report.to_dict()

    @app.get("/v1/packs")
    def packs():
        return [
            {
                "packId": pack.pack_id,
                "packVersion": pack.pack_version,
                "language": pack.language.value,
                "levels": [
                    {
                        "rank": lvl.rank.value,
                        "categories": [
                            {"name": name, "itemCount": count}
                            for name, count in list_categories(pack, lvl.rank)
                        ],
                    }
                    for lvl in pack.levels
                ],
            }
            for pack in state.packs.values()
        ]

    @app.get("/v1/packs/{pack_id}/categories")
    def pack_categories(pack_id: str, level: str):
        pack = state.pack(pack_id)
        try:
            rank = LevelRank(level)
        except ValueError:
            raise ApiError(422, "INVALID_LEVEL", f"unknown level '{level}'") from None
        return [
            {"name": name, "itemCount": count}
            for name, count in list_categories(pack, rank)
        ]

    @app.get("/v1/learners/{learner_id}/progress")
    def learner_progress(learner_id: str):
        record = state.store.replay(learner_id)
        unlocked = {
            pack_id: sorted(
                (r.value for r in engine.unlock_state(record, pack).unlocked),
                key=lambda v: [lr.value for lr in engine.LEVEL_ORDER].index(v),
            )
            for pack_id, pack in state.packs.items()
        }
        return {
            "learnerId": learner_id,
            "completedCategories": [
                {"level": rank.value, "category": name}
                for rank, name in sorted(
                    record.completed_categories, key=lambda rc: (rc[0].value, rc[1])
                )
            ],
            "seenByLevel": {
                rank.value: list(ids) for rank, ids in record.seen_by_level.items()
            },
            "totals": {
                "points": record.points,
                "questionsAsked": record.questions_asked,
                "questionsCorrect": record.questions_correct,
                "wordsSeen": record.words_seen,
            },
            "unlockedLevels": unlocked,
        }

    @app.get("/v1/audio/{pack_id}/{audio_path:path}")
    def audio(pack_id: str, audio_path: str):
        state.pack(pack_id)
        if state.packs_dir is None:
            raise ApiError(404, "AUDIO_NOT_FOUND", "no pack directory configured")
        base = state.packs_dir.resolve()
        target = (base / audio_path).resolve()
        if not target.is_relative_to(base) or not target.is_file():
            raise ApiError(404, "AUDIO_NOT_FOUND", f"no audio file '{audio_path}'")
        return FileResponse(target)

    if ui_dir is not None:
        # Mounted last so the /v1 routes keep precedence.
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
