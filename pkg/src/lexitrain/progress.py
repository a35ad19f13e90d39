"""Durable per-learner progress as an append-only event log.

Each learner has one log file of line-framed JSON records under
``<root>/learners/<learnerId>.log``. Every line carries an explicit
offset and a CRC32 checksum of its own payload, so replay can detect
truncated writes, edits, and gaps. Replay folds the stream into a
:class:`ProgressRecord`; the fold is deterministic and total on any
prefix of a valid stream, which is what makes level gating auditable
and crash-safe.
"""

from __future__ import annotations

import json
import os
import time
import zlib
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterator, Mapping

from .errors import CorruptStreamError, OrderingViolationError, StorageFailureError
from .lexicon import LevelRank
from .scoring import POINTS_PER_CORRECT


# --- events ------------------------------------------------------------------

@dataclass(frozen=True)
class SessionStarted:
    session_id: str
    pack_id: str
    level_rank: LevelRank
    category_name: str
    policy: dict
    modality: dict
    seed: int
    timestamp: float

    TYPE = "sessionStarted"


@dataclass(frozen=True)
class ItemPresented:
    session_id: str
    item_id: str
    timestamp: float

    TYPE = "itemPresented"


@dataclass(frozen=True)
class AnswerSubmitted:
    session_id: str
    question_id: str
    subject_item_id: str
    correct: bool
    timestamp: float

    TYPE = "answerSubmitted"


@dataclass(frozen=True)
class CategoryCompleted:
    session_id: str
    report: dict
    timestamp: float

    TYPE = "categoryCompleted"


ProgressEvent = SessionStarted | ItemPresented | AnswerSubmitted | CategoryCompleted


def event_to_payload(event: ProgressEvent) -> dict:
    if isinstance(event, SessionStarted):
        return {
            "type": event.TYPE,
            "sessionId": event.session_id,
            "packId": event.pack_id,
            "level": event.level_rank.value,
            "category": event.category_name,
            "policy": event.policy,
            "modality": event.modality,
            "seed": event.seed,
            "ts": event.timestamp,
        }
    if isinstance(event, ItemPresented):
        return {
            "type": event.TYPE,
            "sessionId": event.session_id,
            "itemId": event.item_id,
            "ts": event.timestamp,
        }
    if isinstance(event, AnswerSubmitted):
        return {
            "type": event.TYPE,
            "sessionId": event.session_id,
            "questionId": event.question_id,
            "subjectItemId": event.subject_item_id,
            "correct": event.correct,
            "ts": event.timestamp,
        }
    if isinstance(event, CategoryCompleted):
        return {
            "type": event.TYPE,
            "sessionId": event.session_id,
            "report": event.report,
            "ts": event.timestamp,
        }
    raise TypeError(f"unknown event {event!r}")


def event_from_payload(payload: Mapping, offset: int) -> ProgressEvent:
    try:
        etype = payload["type"]
        if etype == SessionStarted.TYPE:
            return SessionStarted(
                session_id=payload["sessionId"],
                pack_id=payload["packId"],
                level_rank=LevelRank(payload["level"]),
                category_name=payload["category"],
                policy=payload["policy"],
                modality=payload["modality"],
                seed=payload["seed"],
                timestamp=payload["ts"],
            )
        if etype == ItemPresented.TYPE:
            return ItemPresented(
                session_id=payload["sessionId"],
                item_id=payload["itemId"],
                timestamp=payload["ts"],
            )
        if etype == AnswerSubmitted.TYPE:
            return AnswerSubmitted(
                session_id=payload["sessionId"],
                question_id=payload["questionId"],
                subject_item_id=payload["subjectItemId"],
                correct=payload["correct"],
                timestamp=payload["ts"],
            )
        if etype == CategoryCompleted.TYPE:
            return CategoryCompleted(
                session_id=payload["sessionId"],
                report=payload["report"],
                timestamp=payload["ts"],
            )
    except (KeyError, ValueError) as exc:
        raise CorruptStreamError(f"undecodable event: {exc}", offset) from exc
    raise CorruptStreamError(f"unknown event type '{etype}'", offset)


# --- replayed record ---------------------------------------------------------

@dataclass(frozen=True)
class ProgressRecord:
    """The fold of one learner's event stream.

    Carries the session registry (session id to level/category) so that
    folding a single further event is possible without rereading the
    stream: ``replay(stream + [e]) == fold_event(replay(stream), e)``.
    """

    learner_id: str
    completed_categories: frozenset[tuple[LevelRank, str]] = frozenset()
    seen_by_level: Mapping[LevelRank, tuple[str, ...]] = field(default_factory=dict)
    points: int = 0
    questions_asked: int = 0
    questions_correct: int = 0
    sessions: Mapping[str, tuple[LevelRank, str]] = field(default_factory=dict)

    @property
    def words_seen(self) -> int:
        return sum(len(ids) for ids in self.seen_by_level.values())

    @classmethod
    def empty(cls, learner_id: str) -> "ProgressRecord":
        return cls(learner_id=learner_id)


def fold_event(
    record: ProgressRecord,
    event: ProgressEvent,
    *,
    points_per_correct: int = POINTS_PER_CORRECT,
) -> ProgressRecord:
    """Apply one event to a replayed record.

    Pure; raises :class:`CorruptStreamError` if the event references a
    session the record has never seen start, which cannot happen on any
    prefix of a stream written through :class:`ProgressStore`.
    """
    if isinstance(event, SessionStarted):
        sessions = dict(record.sessions)
        sessions[event.session_id] = (event.level_rank, event.category_name)
        return replace(record, sessions=sessions)

    located = record.sessions.get(event.session_id)
    if located is None:
        raise CorruptStreamError(
            f"event references unknown session '{event.session_id}'"
        )
    level_rank, category_name = located

    if isinstance(event, ItemPresented):
        seen = dict(record.seen_by_level)
        current = seen.get(level_rank, ())
        if event.item_id not in current:
            seen[level_rank] = current + (event.item_id,)
        return replace(record, seen_by_level=seen)

    if isinstance(event, AnswerSubmitted):
        return replace(
            record,
            points=record.points + (points_per_correct if event.correct else 0),
            questions_asked=record.questions_asked + 1,
            questions_correct=record.questions_correct + (1 if event.correct else 0),
        )

    if isinstance(event, CategoryCompleted):
        return replace(
            record,
            completed_categories=record.completed_categories
            | {(level_rank, category_name)},
        )

    raise TypeError(f"unknown event {event!r}")


# --- the store ---------------------------------------------------------------

@dataclass
class _StreamTail:
    """In-memory view of a learner stream's end, for append-time checks."""

    next_offset: int = 0
    last_timestamp: float = float("-inf")
    known_sessions: set[str] = field(default_factory=set)


class ProgressStore:
    """Append-only, single-writer-per-learner event log on disk.

    Appends are durable (flushed and fsynced) before returning. Reads
    replay the whole file and may run concurrently with appends; they
    observe a prefix of the stream.
    """

    def __init__(
        self,
        root: str | Path,
        *,
        clock: Callable[[], float] = time.time,
        points_per_correct: int = POINTS_PER_CORRECT,
    ):
        self.root = Path(root)
        self.clock = clock
        self.points_per_correct = points_per_correct
        self._tails: dict[str, _StreamTail] = {}

    def path_for(self, learner_id: str) -> Path:
        if "/" in learner_id or "\\" in learner_id or learner_id in ("", ".", ".."):
            raise ValueError(f"invalid learner id {learner_id!r}")
        return self.root / "learners" / f"{learner_id}.log"

    def now(self) -> float:
        return self.clock()

    def _tail(self, learner_id: str) -> _StreamTail:
        tail = self._tails.get(learner_id)
        if tail is None:
            tail = _StreamTail()
            for offset, event in self._iter_decoded(learner_id):
                tail.next_offset = offset + 1
                tail.last_timestamp = max(tail.last_timestamp, event.timestamp)
                if isinstance(event, SessionStarted):
                    tail.known_sessions.add(event.session_id)
            self._tails[learner_id] = tail
        return tail

    def append_event(self, learner_id: str, event: ProgressEvent) -> int:
        """Append one event, returning its stream offset.

        Rejects events that would break the stream invariants: an event
        for a session whose start was never logged, a duplicate session
        start, or a timestamp running backwards.
        """
        tail = self._tail(learner_id)
        if event.timestamp < tail.last_timestamp:
            raise OrderingViolationError(
                f"timestamp {event.timestamp} precedes stream tail "
                f"{tail.last_timestamp}"
            )
        if isinstance(event, SessionStarted):
            if event.session_id in tail.known_sessions:
                raise OrderingViolationError(
                    f"session '{event.session_id}' already started"
                )
        elif event.session_id not in tail.known_sessions:
            raise OrderingViolationError(
                f"event for session '{event.session_id}' before its start"
            )

        offset = tail.next_offset
        line = _encode_line(offset, event)
        path = self.path_for(learner_id)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())
        except OSError as exc:
            raise StorageFailureError(f"cannot append to {path}: {exc}") from exc

        tail.next_offset = offset + 1
        tail.last_timestamp = event.timestamp
        if isinstance(event, SessionStarted):
            tail.known_sessions.add(event.session_id)
        return offset

    def _iter_decoded(self, learner_id: str) -> Iterator[tuple[int, ProgressEvent]]:
        path = self.path_for(learner_id)
        if not path.exists():
            return
        with open(path, encoding="utf-8") as fh:
            for index, raw_line in enumerate(fh):
                raw_line = raw_line.rstrip("\n")
                if not raw_line:
                    raise CorruptStreamError("blank line in stream", index)
                yield index, _decode_line(raw_line, index)

    def iter_events(self, learner_id: str) -> Iterator[ProgressEvent]:
        for _, event in self._iter_decoded(learner_id):
            yield event

    def replay(self, learner_id: str) -> ProgressRecord:
        """Fold the learner's stream into a :class:`ProgressRecord`.

        Deterministic: the same stream always produces the same record.
        """
        record = ProgressRecord.empty(learner_id)
        for offset, event in self._iter_decoded(learner_id):
            try:
                record = fold_event(
                    record, event, points_per_correct=self.points_per_correct
                )
            except CorruptStreamError as exc:
                raise CorruptStreamError(str(exc), offset) from exc
        return record


# --- line framing ------------------------------------------------------------

def _checksum(text: str) -> str:
    return format(zlib.crc32(text.encode("utf-8")), "08x")


def _encode_line(offset: int, event: ProgressEvent) -> str:
    record = {"offset": offset, **event_to_payload(event)}
    body = json.dumps(record, sort_keys=True, ensure_ascii=False)
    record["sum"] = _checksum(body)
    return json.dumps(record, sort_keys=True, ensure_ascii=False)


def _decode_line(line: str, expected_offset: int) -> ProgressEvent:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorruptStreamError(f"undecodable line: {exc.msg}", expected_offset) from exc
    if not isinstance(record, dict) or "sum" not in record:
        raise CorruptStreamError("missing checksum", expected_offset)
    claimed = record.pop("sum")
    body = json.dumps(record, sort_keys=True, ensure_ascii=False)
    if _checksum(body) != claimed:
        raise CorruptStreamError("checksum mismatch", expected_offset)
    offset = record.pop("offset", None)
    if offset != expected_offset:
        raise CorruptStreamError(
            f"offset gap: found {offset}, expected {expected_offset}", expected_offset
        )
    return event_from_payload(record, expected_offset)
