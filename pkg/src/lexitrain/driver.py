"""Non-interactive session driving, with optional progress recording.

Used by the CLI's scripted runs and by tests that need whole sessions
played out. The driver mirrors exactly what the HTTP layer does per
request: present or quiz via the engine, persist the matching event,
answer via a chooser callback, and flush delayed feedback at block
boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import engine, feedback
from .engine import (
    CategoryCompleteStep,
    LevelCompleteStep,
    PresentStep,
    QuizStep,
    Session,
    Step,
)
from .feedback import FeedbackMessage, QuizQuestion, Timing
from .lexicon import LexiconPack, LevelRank
from .progress import (
    AnswerSubmitted,
    CategoryCompleted,
    ItemPresented,
    ProgressStore,
    SessionStarted,
)

AnswerChooser = Callable[[QuizQuestion], int]


def always_correct(question: QuizQuestion) -> int:
    return question.correct_index


def always_wrong(question: QuizQuestion) -> int:
    return (question.correct_index + 1) % len(question.options)


def scripted(entries: Sequence[int | str]) -> AnswerChooser:
    """Build a chooser from a script of option indexes.

    Entries may be literal option indexes or the strings ``correct`` and
    ``wrong``. The script is consumed one entry per question and cycles
    when exhausted, so short scripts can drive long sessions.
    """
    if not entries:
        raise ValueError("answer script is empty")
    state = {"i": 0}

    def choose(question: QuizQuestion) -> int:
        entry = entries[state["i"] % len(entries)]
        state["i"] += 1
        if entry == "correct":
            return question.correct_index
        if entry == "wrong":
            return (question.correct_index + 1) % len(question.options)
        return int(entry)

    return choose


@dataclass
class SessionTranscript:
    """Everything that happened while driving one session."""

    steps: list[Step] = field(default_factory=list)
    feedback: list[tuple[str, FeedbackMessage]] = field(default_factory=list)
    block_feedback: list[list[FeedbackMessage]] = field(default_factory=list)

    @property
    def step_tags(self) -> list[str]:
        tags = []
        for step in self.steps:
            if isinstance(step, PresentStep):
                tags.append("P")
            elif isinstance(step, QuizStep):
                tags.append("Q")
            elif isinstance(step, CategoryCompleteStep):
                tags.append("C")
            elif isinstance(step, LevelCompleteStep):
                tags.append("L")
        return tags


def record_session_started(store: ProgressStore, session: Session) -> None:
    store.append_event(
        session.learner_id,
        SessionStarted(
            session_id=session.session_id,
            pack_id=session.pack.pack_id,
            level_rank=session.level_rank,
            category_name=session.category_name,
            policy=session.policy.to_dict(),
            modality={
                "type": session.modality.f_type.value,
                "level": session.modality.f_level.value,
                "timing": session.modality.timing.value,
            },
            seed=session.rng_seed,
            timestamp=store.now(),
        ),
    )


def run_session(
    session: Session,
    choose: AnswerChooser,
    *,
    store: ProgressStore | None = None,
) -> tuple[Session, SessionTranscript]:
    """Drive a session from its current state to completion.

    When a store is given, the same events the HTTP layer would persist
    are appended as the session advances (the session-start event must
    already have been recorded via :func:`record_session_started`).
    """
    transcript = SessionTranscript()
    while session.phase is not engine.Phase.COMPLETE:
        step, session = engine.next_step(session)
        transcript.steps.append(step)

        if isinstance(step, PresentStep):
            if store is not None:
                store.append_event(
                    session.learner_id,
                    ItemPresented(
                        session_id=session.session_id,
                        item_id=step.item.item_id,
                        timestamp=store.now(),
                    ),
                )
        elif isinstance(step, QuizStep):
            question = step.question
            selected = choose(question)
            before = session
            message, session = engine.submit_answer(
                session, question.question_id, selected
            )
            transcript.feedback.append((question.question_id, message))
            if store is not None:
                store.append_event(
                    session.learner_id,
                    AnswerSubmitted(
                        session_id=session.session_id,
                        question_id=question.question_id,
                        subject_item_id=question.subject_item_id,
                        correct=selected == question.correct_index,
                        timestamp=store.now(),
                    ),
                )
            if (
                session.modality.timing is Timing.DELAYED
                and engine.block_just_finished(before, session)
            ):
                messages, session = feedback.flush_delayed(session)
                transcript.block_feedback.append(messages)
        elif isinstance(step, CategoryCompleteStep):
            if store is not None:
                store.append_event(
                    session.learner_id,
                    CategoryCompleted(
                        session_id=session.session_id,
                        report=step.report.to_dict(),
                        timestamp=store.now(),
                    ),
                )
    return session, transcript


def run_full_session(
    store: ProgressStore | None,
    learner_id: str,
    pack: LexiconPack,
    level_rank: LevelRank,
    category_name: str,
    choose: AnswerChooser,
    *,
    policy: engine.SchedulePolicy = engine.DEFAULT_POLICY,
    modality: feedback.FeedbackModality = feedback.DEFAULT_MODALITY,
    seed: int = 0,
    session_id: str | None = None,
) -> tuple[Session, SessionTranscript]:
    """Start a session against the learner's persisted progress and run it."""
    progress = store.replay(learner_id) if store is not None else None
    session = engine.start_session(
        learner_id,
        pack,
        level_rank,
        category_name,
        policy=policy,
        modality=modality,
        seed=seed,
        progress=progress,
        session_id=session_id,
    )
    if store is not None:
        record_session_started(store, session)
    return run_session(session, choose, store=store)
