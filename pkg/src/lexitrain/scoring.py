"""Running score state and the per-category completion report.

Scoring is flat: a fixed number of points per correct answer (default 10),
nothing for incorrect ones. Accuracy divides correct answers by questions
asked, never by words seen. The proficiency label is assigned from
accuracy quartiles, with a no-evidence floor: a learner who was never
quizzed is a newbie regardless of anything else. Both the points value
and the band table are configuration; the defaults below are what the
reports record.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import SessionNotCompleteError
from .lexicon import LevelRank

POINTS_PER_CORRECT = 10


class Classification(str, Enum):
    NEWBIE = "Newbie"
    BEGINNER = "Beginner"
    AVERAGE = "Average"
    ADVANCED = "Advanced"


# (lower bound inclusive, label), scanned from the top.
DEFAULT_BANDS: tuple[tuple[float, Classification], ...] = (
    (0.75, Classification.ADVANCED),
    (0.50, Classification.AVERAGE),
    (0.25, Classification.BEGINNER),
    (0.00, Classification.NEWBIE),
)


@dataclass(frozen=True)
class ScoreState:
    points_earned: int = 0
    questions_asked: int = 0
    questions_correct: int = 0
    words_seen: int = 0

    @property
    def accuracy(self) -> float:
        if self.questions_asked == 0:
            return 0.0
        return self.questions_correct / self.questions_asked


def score_answer(
    state: ScoreState, correct: bool, *, points_per_correct: int = POINTS_PER_CORRECT
) -> ScoreState:
    """Fold one answer outcome into the score state."""
    return ScoreState(
        points_earned=state.points_earned + (points_per_correct if correct else 0),
        questions_asked=state.questions_asked + 1,
        questions_correct=state.questions_correct + (1 if correct else 0),
        words_seen=state.words_seen,
    )


def see_word(state: ScoreState) -> ScoreState:
    """Count one newly presented word."""
    return ScoreState(
        points_earned=state.points_earned,
        questions_asked=state.questions_asked,
        questions_correct=state.questions_correct,
        words_seen=state.words_seen + 1,
    )


def classify(
    accuracy: float,
    questions_asked: int,
    *,
    bands: tuple[tuple[float, Classification], ...] = DEFAULT_BANDS,
) -> Classification:
    """Map an accuracy ratio to a proficiency label.

    With zero questions asked there is no evidence, so the result is
    Newbie no matter the accuracy argument.
    """
    if not 0.0 <= accuracy <= 1.0:
        raise ValueError(f"accuracy must be in [0, 1], got {accuracy}")
    if questions_asked == 0:
        return Classification.NEWBIE
    for lower, label in bands:
        if accuracy >= lower:
            return label
    return Classification.NEWBIE


@dataclass(frozen=True)
class CompletionReport:
    """What a learner takes away from a finished category."""

    level_rank: LevelRank
    category_name: str
    points_earned: int
    accuracy: float
    words_seen: int
    classification: Classification
    # The band table the classification was drawn from, recorded so the
    # report is self-describing even if the configuration changes later.
    bands: tuple[tuple[float, Classification], ...] = DEFAULT_BANDS

    def to_dict(self) -> dict:
        return {
            "level": self.level_rank.value,
            "category": self.category_name,
            "pointsEarned": self.points_earned,
            "accuracy": self.accuracy,
            "wordsSeen": self.words_seen,
            "classification": self.classification.value,
            "bands": [
                {"lower": lower, "label": label.value} for lower, label in self.bands
            ],
        }


def build_report(
    level_rank: LevelRank,
    category_name: str,
    score: ScoreState,
    *,
    bands: tuple[tuple[float, Classification], ...] = DEFAULT_BANDS,
) -> CompletionReport:
    return CompletionReport(
        level_rank=level_rank,
        category_name=category_name,
        points_earned=score.points_earned,
        accuracy=score.accuracy,
        words_seen=score.words_seen,
        classification=classify(score.accuracy, score.questions_asked, bands=bands),
        bands=bands,
    )


def completion_report(session) -> CompletionReport:
    """Return the report of a finished session.

    The report is built when the category-complete step is emitted;
    calling this earlier raises :class:`SessionNotCompleteError`.
    """
    report = getattr(session, "report", None)
    if report is None:
        raise SessionNotCompleteError(
            f"session {session.session_id} has not completed its category"
        )
    return report
