"""Feedback modalities, quiz question generation, and feedback rendering.

A feedback modality is a (type, level, timing) triple. The type says how
much the message carries: verdict only (KR), verdict plus the correct
answer (KCR), or an elaborated message with study material (EF). The
level says what the message is about: the task, the learner's process,
their self-regulation, or the learner personally. KR and KCR attach only
to the task level; EF may target any of the four, though aiming it at
the person is flagged as ineffective rather than rejected. Timing is
per-answer (immediate) or withheld until the quiz block finishes
(delayed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

from .errors import (
    InsufficientDistractorsError,
    InvalidModalityError,
    NothingDeferredError,
)
from .lexicon import LexiconPack, TrainingItem


class FeedbackType(str, Enum):
    KR = "KR"
    KCR = "KCR"
    EF = "EF"


class FeedbackLevel(str, Enum):
    SELF = "Self"
    TASK = "Task"
    PROCESS = "Process"
    REGULATION = "Regulation"


class Timing(str, Enum):
    IMMEDIATE = "Immediate"
    DELAYED = "Delayed"


SELF_LEVEL_ADVISORY = (
    "Feedback aimed at the learner personally carries no information about "
    "the task and is considered ineffective for learning; prefer the task, "
    "process, or regulation level."
)

GENERIC_STUDY_POINTER = (
    "Revisit this word in its category list before the next quiz block."
)


@dataclass(frozen=True)
class FeedbackModality:
    f_type: FeedbackType = FeedbackType.KR
    f_level: FeedbackLevel = FeedbackLevel.TASK
    timing: Timing = Timing.IMMEDIATE

    @classmethod
    def from_strings(cls, f_type: str, f_level: str, timing: str) -> "FeedbackModality":
        return cls(FeedbackType(f_type), FeedbackLevel(f_level), Timing(timing))


DEFAULT_MODALITY = FeedbackModality()


@dataclass(frozen=True)
class ModalityStatus:
    valid: bool
    advisory: str | None = None


def validate_modality(m: FeedbackModality) -> ModalityStatus:
    """Check a modality against the allowed (type, level) pairs.

    Invalidity is data, not an exception: KR and KCR are valid only at
    the task level; EF is valid at all four levels, with an advisory
    attached when aimed at the self level.
    """
    if m.f_type in (FeedbackType.KR, FeedbackType.KCR):
        return ModalityStatus(valid=m.f_level is FeedbackLevel.TASK)
    if m.f_level is FeedbackLevel.SELF:
        return ModalityStatus(valid=True, advisory=SELF_LEVEL_ADVISORY)
    return ModalityStatus(valid=True)


@dataclass(frozen=True)
class QuizQuestion:
    """A four-option multiple-choice question, English prompt to translation."""

    question_id: str
    subject_item_id: str
    prompt_text: str
    options: tuple[str, str, str, str]
    correct_index: int


class Verdict(str, Enum):
    CORRECT = "Correct"
    INCORRECT = "Incorrect"
    DEFERRED = "Deferred"


class Highlight(str, Enum):
    GREEN = "Green"
    RED = "Red"
    NONE = "None"


@dataclass(frozen=True)
class FeedbackMessage:
    verdict: Verdict
    highlight: Highlight
    body: str | None = None
    level_note: str | None = None
    advisory: str | None = None


@dataclass(frozen=True)
class DeferredAnswer:
    """One buffered answer awaiting end-of-block feedback delivery."""

    question: QuizQuestion
    selected_index: int
    item: TrainingItem


def _distractor_translations(pack: LexiconPack, item: TrainingItem) -> list[str]:
    """Candidate wrong options for an item, nearest scope first.

    Starts with the item's own category, widens to its level, then to the
    whole pack, deduplicating while preserving pack order and never
    including the subject's own translation.
    """
    rank, category_name = pack.location_of(item.item_id)
    level = pack.level(rank)
    category = level.category(category_name)
    assert category is not None

    scopes = [
        category.items,
        tuple(i for cat in level.categories for i in cat.items),
        tuple(pack.iter_items()),
    ]
    candidates: list[str] = []
    seen: set[str] = {item.translation}
    for scope in scopes:
        for other in scope:
            if other.translation not in seen:
                seen.add(other.translation)
                candidates.append(other.translation)
        if len(candidates) >= 3:
            break
    return candidates


def generate_question(
    pack: LexiconPack,
    pool: Sequence[str],
    rng: random.Random,
    *,
    question_id: str,
) -> QuizQuestion:
    """Draw one question about an item from ``pool``.

    The subject is chosen uniformly from the pool; three distractor
    translations come from the subject's category, widening scope only
    when the category cannot seat them. Option order is shuffled from
    the caller's random stream, so a fixed seed and pool reproduce the
    question exactly.
    """
    if not pool:
        raise ValueError("question pool is empty")
    if len(pack.distinct_translations()) < 4:
        raise InsufficientDistractorsError(
            f"pack {pack.pack_id} has fewer than 4 distinct translations"
        )
    subject_id = pool[rng.randrange(len(pool))]
    item = pack.item(subject_id)
    candidates = _distractor_translations(pack, item)
    distractors = rng.sample(candidates, 3)
    options = [item.translation, *distractors]
    rng.shuffle(options)
    return QuizQuestion(
        question_id=question_id,
        subject_item_id=subject_id,
        prompt_text=item.english,
        options=tuple(options),
        correct_index=options.index(item.translation),
    )


def _elaboration(item: TrainingItem) -> list[str]:
    parts = []
    if item.mnemonic:
        parts.append(f"Mnemonic: {item.mnemonic}")
    if item.sample_sentence:
        parts.append(f"Example: {item.sample_sentence}")
    return parts


def _level_note(modality: FeedbackModality, item: TrainingItem) -> str | None:
    if modality.f_type is not FeedbackType.EF:
        return None
    if modality.f_level is FeedbackLevel.PROCESS:
        if item.mnemonic:
            return f"Strategy: recall the mnemonic before choosing. {item.mnemonic}"
        return "Strategy: tie the word to a familiar image or sound before choosing."
    if modality.f_level is FeedbackLevel.REGULATION:
        return "Check yourself: could you have recalled this without seeing the options?"
    if modality.f_level is FeedbackLevel.SELF:
        return "You are putting in the work. Keep going."
    return None


def _render_full(
    question: QuizQuestion,
    selected_index: int,
    modality: FeedbackModality,
    item: TrainingItem,
) -> FeedbackMessage:
    """Render the complete message, ignoring timing.

    Used directly for immediate delivery and by the delayed-feedback
    flush, so the two timings produce pointwise-identical content.
    """
    correct = selected_index == question.correct_index
    verdict = Verdict.CORRECT if correct else Verdict.INCORRECT
    highlight = Highlight.GREEN if correct else Highlight.RED

    body: str | None = None
    if modality.f_type is FeedbackType.KCR:
        body = None if correct else item.translation
    elif modality.f_type is FeedbackType.EF:
        parts = [] if correct else [f"Correct answer: {item.translation}"]
        elaboration = _elaboration(item)
        parts.extend(elaboration if elaboration else [GENERIC_STUDY_POINTER])
        body = "\n".join(parts)

    status = validate_modality(modality)
    return FeedbackMessage(
        verdict=verdict,
        highlight=highlight,
        body=body,
        level_note=_level_note(modality, item),
        advisory=status.advisory,
    )


def render_feedback(
    question: QuizQuestion,
    selected_index: int,
    modality: FeedbackModality,
    item: TrainingItem,
) -> FeedbackMessage:
    """Render the feedback for one answered question.

    Under delayed timing this returns only a deferred marker; the full
    message is produced later by :func:`flush_delayed`.
    """
    status = validate_modality(modality)
    if not status.valid:
        raise InvalidModalityError(
            f"{modality.f_type.value} feedback cannot target the "
            f"{modality.f_level.value} level"
        )
    if not 0 <= selected_index < len(question.options):
        raise ValueError(f"selected index {selected_index} out of range")
    if modality.timing is Timing.DELAYED:
        return FeedbackMessage(verdict=Verdict.DEFERRED, highlight=Highlight.NONE)
    return _render_full(question, selected_index, modality, item)


def flush_delayed(session) -> tuple[list[FeedbackMessage], object]:
    """Deliver the buffered block feedback, in answer order.

    Returns the messages plus a copy of the session with the buffer
    cleared. Raises :class:`NothingDeferredError` when called on an
    immediate-timing session or with nothing buffered, which indicates a
    caller sequencing bug.
    """
    if session.modality.timing is not Timing.DELAYED or not session.deferred:
        raise NothingDeferredError(
            f"session {session.session_id} has no deferred feedback to flush"
        )
    messages = [
        _render_full(d.question, d.selected_index, session.modality, d.item)
        for d in session.deferred
    ]
    return messages, replace(session, deferred=())
