"""Interactive foreign-language vocabulary trainer.

Content ships as per-language packs (three levels of categorized items
with translations, mnemonics, and audio references). The session engine
presents items sequentially and fires short quiz blocks on a schedule;
feedback honors a configurable (type, level, timing) modality; finished
categories yield a points/accuracy/words-seen report with a proficiency
label. Progress persists as an append-only event log that gates level
access, and a statistics module covers the Likert banding and one-way
ANOVA used to evaluate trainers like this one.
"""

from .engine import (
    DEFAULT_POLICY,
    LevelAccess,
    Phase,
    SchedulePolicy,
    Session,
    next_step,
    start_session,
    submit_answer,
    unlock_state,
)
from .feedback import (
    DEFAULT_MODALITY,
    FeedbackLevel,
    FeedbackMessage,
    FeedbackModality,
    FeedbackType,
    ModalityStatus,
    QuizQuestion,
    Timing,
    Verdict,
    flush_delayed,
    generate_question,
    render_feedback,
    validate_modality,
)
from .lexicon import (
    Category,
    Language,
    Level,
    LevelRank,
    LexiconPack,
    TrainingItem,
    ValidationMode,
    ValidationReport,
    list_categories,
    load_pack,
    parse_pack,
    serialize_pack,
    validate_pack,
)
from .progress import ProgressRecord, ProgressStore, fold_event
from .scoring import (
    Classification,
    CompletionReport,
    ScoreState,
    classify,
    completion_report,
    score_answer,
)
from .stats import (
    AnovaResult,
    GroupSummary,
    anova_from_summary,
    f_cdf,
    likert_band,
    one_way_anova,
    weighted_mean,
)

__version__ = "0.1.0"

__all__ = [
    "AnovaResult",
    "Category",
    "Classification",
    "CompletionReport",
    "DEFAULT_MODALITY",
    "DEFAULT_POLICY",
    "FeedbackLevel",
    "FeedbackMessage",
    "FeedbackModality",
    "FeedbackType",
    "GroupSummary",
    "Language",
    "Level",
    "LevelAccess",
    "LevelRank",
    "LexiconPack",
    "ModalityStatus",
    "Phase",
    "ProgressRecord",
    "ProgressStore",
    "QuizQuestion",
    "SchedulePolicy",
    "ScoreState",
    "Session",
    "Timing",
    "TrainingItem",
    "ValidationMode",
    "ValidationReport",
    "Verdict",
    "anova_from_summary",
    "classify",
    "completion_report",
    "f_cdf",
    "flush_delayed",
    "fold_event",
    "generate_question",
    "likert_band",
    "list_categories",
    "load_pack",
    "next_step",
    "one_way_anova",
    "parse_pack",
    "render_feedback",
    "score_answer",
    "serialize_pack",
    "start_session",
    "submit_answer",
    "unlock_state",
    "validate_modality",
    "validate_pack",
    "weighted_mean",
]
