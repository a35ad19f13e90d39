"""The training session engine.

A session walks one category of one level: items are presented in pack
order, and after every ``blockSize`` presentations (default 5) a quiz
block of ``quizLength`` questions (default 3) about the just-seen items
fires, provided the quiz toggle is on. A category whose size is not a
multiple of the block size ends with a truncated quiz over the leftover
items. Finishing the final category of a level additionally yields a
review step listing every word studied across the level, which is what
unlocks the next level.

All transitions are pure: they take a session value and return a new
one, so a caller that serializes calls per session needs no further
locking, and replaying the same inputs always yields the same steps.
"""

from __future__ import annotations

import random
import uuid
from dataclasses import dataclass, field, replace
from enum import Enum

from . import scoring
from .errors import (
    LevelLockedError,
    OutOfOrderAnswerError,
    SessionCompleteError,
    UnknownCategoryError,
    UnknownQuestionError,
    InvalidModalityError,
)
from .feedback import (
    DEFAULT_MODALITY,
    DeferredAnswer,
    FeedbackMessage,
    FeedbackModality,
    QuizQuestion,
    Timing,
    generate_question,
    render_feedback,
    validate_modality,
)
from .lexicon import LEVEL_ORDER, LevelRank, LexiconPack, TrainingItem
from .progress import ProgressRecord
from .scoring import CompletionReport, ScoreState


@dataclass(frozen=True)
class SchedulePolicy:
    """How presentations and quiz blocks interleave."""

    block_size: int = 5
    quiz_length: int = 3
    quiz_toggle: bool = True

    def __post_init__(self):
        if self.block_size < 1:
            raise ValueError("block_size must be >= 1")
        if self.quiz_length < 1:
            raise ValueError("quiz_length must be >= 1")

    def to_dict(self) -> dict:
        return {
            "blockSize": self.block_size,
            "quizLength": self.quiz_length,
            "quizToggle": self.quiz_toggle,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "SchedulePolicy":
        return cls(
            block_size=raw.get("blockSize", 5),
            quiz_length=raw.get("quizLength", 3),
            quiz_toggle=raw.get("quizToggle", True),
        )


DEFAULT_POLICY = SchedulePolicy()


class Phase(str, Enum):
    PRESENTING = "Presenting"
    QUIZZING = "Quizzing"
    LEVEL_REVIEW = "LevelReview"
    COMPLETE = "Complete"


# --- steps -------------------------------------------------------------------

@dataclass(frozen=True)
class PresentStep:
    item: TrainingItem
    position: int
    total: int


@dataclass(frozen=True)
class QuizStep:
    question: QuizQuestion


@dataclass(frozen=True)
class CategoryCompleteStep:
    report: CompletionReport


@dataclass(frozen=True)
class LevelCompleteStep:
    review_list: tuple[TrainingItem, ...]


Step = PresentStep | QuizStep | CategoryCompleteStep | LevelCompleteStep


@dataclass(frozen=True)
class LevelAccess:
    unlocked: frozenset[LevelRank]


@dataclass(frozen=True)
class Session:
    """Live training state for one learner in one category."""

    session_id: str
    learner_id: str
    pack: LexiconPack
    level_rank: LevelRank
    category_name: str
    policy: SchedulePolicy
    modality: FeedbackModality
    rng_seed: int
    prior_progress: ProgressRecord

    cursor: int = 0
    seen_item_ids: tuple[str, ...] = ()
    items_since_quiz: int = 0
    phase: Phase = Phase.PRESENTING
    pending_questions: tuple[QuizQuestion, ...] = ()
    head_emitted: bool = False
    issued_question_ids: tuple[str, ...] = ()
    score: ScoreState = field(default_factory=ScoreState)
    deferred: tuple[DeferredAnswer, ...] = ()
    question_serial: int = 0
    block_serial: int = 0
    report: CompletionReport | None = None

    @property
    def items(self) -> tuple[TrainingItem, ...]:
        category = self.pack.level(self.level_rank).category(self.category_name)
        assert category is not None
        return category.items

    @property
    def current_question(self) -> QuizQuestion | None:
        if self.phase is Phase.QUIZZING and self.pending_questions:
            return self.pending_questions[0]
        return None


# --- gating ------------------------------------------------------------------

def unlock_state(progress: ProgressRecord, pack: LexiconPack) -> LevelAccess:
    """Compute which levels the learner may start sessions in.

    Basic is always open; each later level opens once every category of
    the level before it has been completed.
    """
    unlocked = {LevelRank.BASIC}
    for prerequisite, gated in zip(LEVEL_ORDER, LEVEL_ORDER[1:]):
        done = all(
            (prerequisite, cat.name) in progress.completed_categories
            for cat in pack.level(prerequisite).categories
        )
        if done:
            unlocked.add(gated)
    return LevelAccess(unlocked=frozenset(unlocked))


def _first_locked_prerequisite(
    progress: ProgressRecord, pack: LexiconPack, target: LevelRank
) -> tuple[LevelRank, str] | None:
    for rank in LEVEL_ORDER:
        if rank is target:
            return None
        for cat in pack.level(rank).categories:
            if (rank, cat.name) not in progress.completed_categories:
                return rank, cat.name
    return None


# --- session construction ----------------------------------------------------

def start_session(
    learner_id: str,
    pack: LexiconPack,
    level_rank: LevelRank,
    category_name: str,
    *,
    policy: SchedulePolicy = DEFAULT_POLICY,
    modality: FeedbackModality = DEFAULT_MODALITY,
    seed: int = 0,
    progress: ProgressRecord | None = None,
    session_id: str | None = None,
) -> Session:
    """Open a session on an unlocked level's category.

    ``progress`` is the learner's replayed record; without one the
    learner is treated as fresh and only Basic is open.
    """
    if progress is None:
        progress = ProgressRecord.empty(learner_id)
    access = unlock_state(progress, pack)
    if level_rank not in access.unlocked:
        prerequisite = _first_locked_prerequisite(progress, pack, level_rank)
        assert prerequisite is not None
        raise LevelLockedError(
            f"level {level_rank.value} is locked; complete "
            f"{prerequisite[0].value}/{prerequisite[1]} first",
            prerequisite=(prerequisite[0].value, prerequisite[1]),
        )
    if pack.level(level_rank).category(category_name) is None:
        raise UnknownCategoryError(
            f"no category '{category_name}' in level {level_rank.value} "
            f"of pack {pack.pack_id}"
        )
    status = validate_modality(modality)
    if not status.valid:
        raise InvalidModalityError(
            f"{modality.f_type.value} feedback cannot target the "
            f"{modality.f_level.value} level"
        )
    return Session(
        session_id=session_id or f"s-{uuid.uuid4().hex[:12]}",
        learner_id=learner_id,
        pack=pack,
        level_rank=level_rank,
        category_name=category_name,
        policy=policy,
        modality=modality,
        rng_seed=seed,
        prior_progress=progress,
    )


# --- transitions -------------------------------------------------------------

def _begin_quiz_block(session: Session) -> tuple[Step, Session]:
    """Generate a block of questions and emit the first one.

    The draw pool is the items seen since the last quiz, widened to the
    whole seen list when that recent pool is smaller than the configured
    quiz length. Subjects are drawn without replacement, so the block
    size is capped by the pool; a leftover partial block at category end
    asks at most as many questions as it has fresh items.
    """
    policy = session.policy
    since = session.items_since_quiz
    full_block = since >= policy.block_size
    base_count = policy.quiz_length if full_block else min(policy.quiz_length, since)

    recent = list(session.seen_item_ids[-since:])
    pool = recent if len(recent) >= policy.quiz_length else list(session.seen_item_ids)
    count = min(base_count, len(pool))

    rng = random.Random(f"{session.rng_seed}:{session.block_serial}")
    questions: list[QuizQuestion] = []
    for i in range(count):
        question = generate_question(
            session.pack,
            pool,
            rng,
            question_id=f"q{session.question_serial + i + 1:04d}",
        )
        pool.remove(question.subject_item_id)
        questions.append(question)

    new = replace(
        session,
        phase=Phase.QUIZZING,
        pending_questions=tuple(questions),
        head_emitted=True,
        issued_question_ids=session.issued_question_ids + (questions[0].question_id,),
        items_since_quiz=0,
        question_serial=session.question_serial + count,
        block_serial=session.block_serial + 1,
    )
    return QuizStep(questions[0]), new


def _level_categories(session: Session) -> list[str]:
    return [cat.name for cat in session.pack.level(session.level_rank).categories]


def _review_item_ids(session: Session) -> tuple[str, ...]:
    prior = session.prior_progress.seen_by_level.get(session.level_rank, ())
    ordered = list(prior)
    for item_id in session.seen_item_ids:
        if item_id not in ordered:
            ordered.append(item_id)
    return tuple(ordered)


def _complete_category(session: Session) -> tuple[Step, Session]:
    report = scoring.build_report(
        session.level_rank, session.category_name, session.score
    )
    completed_after = set(session.prior_progress.completed_categories)
    completed_after.add((session.level_rank, session.category_name))
    level_done = all(
        (session.level_rank, name) in completed_after
        for name in _level_categories(session)
    )
    new = replace(
        session,
        phase=Phase.LEVEL_REVIEW if level_done else Phase.COMPLETE,
        report=report,
    )
    return CategoryCompleteStep(report), new


def next_step(session: Session) -> tuple[Step, Session]:
    """Advance the session by exactly one step.

    Deterministic in (session state, seed). While a quiz question is
    awaiting its answer, calling this again re-serves the same question
    without advancing, so a retried poll cannot skip content.
    """
    if session.phase is Phase.COMPLETE:
        raise SessionCompleteError(f"session {session.session_id} is complete")

    if session.phase is Phase.LEVEL_REVIEW:
        review = tuple(session.pack.item(i) for i in _review_item_ids(session))
        return LevelCompleteStep(review), replace(session, phase=Phase.COMPLETE)

    if session.phase is Phase.QUIZZING:
        head = session.pending_questions[0]
        if session.head_emitted:
            return QuizStep(head), session
        new = replace(
            session,
            head_emitted=True,
            issued_question_ids=session.issued_question_ids + (head.question_id,),
        )
        return QuizStep(head), new

    # Presenting.
    items = session.items
    policy = session.policy
    if policy.quiz_toggle and session.items_since_quiz >= policy.block_size:
        return _begin_quiz_block(session)
    if session.cursor < len(items):
        item = items[session.cursor]
        new = replace(
            session,
            cursor=session.cursor + 1,
            seen_item_ids=session.seen_item_ids + (item.item_id,),
            items_since_quiz=session.items_since_quiz + 1,
            score=scoring.see_word(session.score),
        )
        return PresentStep(item, position=session.cursor, total=len(items)), new
    if policy.quiz_toggle and session.items_since_quiz > 0:
        return _begin_quiz_block(session)
    return _complete_category(session)


def submit_answer(
    session: Session, question_id: str, selected_option: int
) -> tuple[FeedbackMessage, Session]:
    """Answer the question currently at the head of the quiz block.

    The score is updated either way; the returned message honors the
    session's feedback modality, so under delayed timing it is only a
    deferred marker and the content arrives at end of block via
    :func:`lexitrain.feedback.flush_delayed`.
    """
    head = session.current_question
    if head is None or head.question_id != question_id:
        known = question_id in session.issued_question_ids or any(
            q.question_id == question_id for q in session.pending_questions
        )
        if known:
            raise OutOfOrderAnswerError(
                f"question '{question_id}' is not awaiting an answer"
            )
        raise UnknownQuestionError(f"question '{question_id}' was never issued")
    if not 0 <= selected_option < len(head.options):
        raise ValueError(f"selected option {selected_option} out of range")

    item = session.pack.item(head.subject_item_id)
    correct = selected_option == head.correct_index
    message = render_feedback(head, selected_option, session.modality, item)

    issued = session.issued_question_ids
    if question_id not in issued:
        issued = issued + (question_id,)
    deferred = session.deferred
    if session.modality.timing is Timing.DELAYED:
        deferred = deferred + (DeferredAnswer(head, selected_option, item),)

    remaining = session.pending_questions[1:]
    new = replace(
        session,
        score=scoring.score_answer(session.score, correct),
        pending_questions=remaining,
        head_emitted=False,
        issued_question_ids=issued,
        deferred=deferred,
        phase=session.phase if remaining else Phase.PRESENTING,
    )
    return message, new


def block_just_finished(before: Session, after: Session) -> bool:
    """True when an answer closed out a quiz block."""
    return before.phase is Phase.QUIZZING and after.phase is not Phase.QUIZZING
