"""Acceptance criteria, one test per criterion.

Each test prints a single PASS line on success so a full run reads as a
checklist. Tolerances and runtime budgets are asserted inside the tests
themselves.
"""

from __future__ import annotations

import itertools
import random
import time

import numpy as np
import pytest
import scipy.integrate
import scipy.special
from fastapi.testclient import TestClient

from lexitrain import driver, engine, evaldata, feedback, stats
from lexitrain.engine import SchedulePolicy
from lexitrain.feedback import (
    FeedbackLevel,
    FeedbackModality,
    FeedbackType,
    Timing,
    validate_modality,
)
from lexitrain.lexicon import LevelRank
from lexitrain.progress import ProgressStore
from lexitrain.service import create_app

from conftest import build_pack
from test_service import drive_http_session


def expected_quiz_steps(n: int, policy: SchedulePolicy) -> int:
    if not policy.quiz_toggle:
        return 0
    return policy.quiz_length * (n // policy.block_size) + min(
        policy.quiz_length, n % policy.block_size
    )


def test_scheduler_law_holds_across_random_configurations():
    rng = random.Random(20260808)
    started = time.perf_counter()
    for trial in range(200):
        n = rng.randint(1, 50)
        block_size = rng.randint(1, 10)
        quiz_length = rng.randint(1, block_size)
        toggle = rng.random() < 0.5
        policy = SchedulePolicy(block_size=block_size, quiz_length=quiz_length,
                                quiz_toggle=toggle)
        pack = build_pack(basic=(n, 4))
        session = engine.start_session(
            "lea", pack, LevelRank.BASIC, "b0", seed=trial, policy=policy
        )
        _, transcript = driver.run_session(session, driver.always_correct)
        assert transcript.step_tags.count("Q") == expected_quiz_steps(n, policy), (
            n, block_size, quiz_length, toggle,
        )

    # The default schedule on a five-item category: five presentations,
    # a three-question block, then the category report.
    pack = build_pack(basic=(5, 4))
    session = engine.start_session("lea", pack, LevelRank.BASIC, "b0", seed=0)
    _, transcript = driver.run_session(session, driver.always_correct)
    assert transcript.step_tags == ["P", "P", "P", "P", "P", "Q", "Q", "Q", "C"]

    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"scheduler sweep took {elapsed:.2f}s"
    print(f"\nACCEPTANCE PASS: scheduler law over 200 random configurations "
          f"({elapsed:.2f}s)")


def test_feedback_matrix_and_timing_equivalence():
    # Exact validity/advisory table over all 24 combinations.
    for f_type, f_level, timing in itertools.product(
        FeedbackType, FeedbackLevel, Timing
    ):
        status = validate_modality(FeedbackModality(f_type, f_level, timing))
        should_be_valid = f_type is FeedbackType.EF or f_level is FeedbackLevel.TASK
        assert status.valid == should_be_valid, (f_type, f_level, timing)
        should_advise = f_type is FeedbackType.EF and f_level is FeedbackLevel.SELF
        assert (status.advisory is not None) == should_advise, (f_type, f_level, timing)

    pack = build_pack(basic=(8, 5))
    script = ["correct", "wrong", "correct", "wrong", "wrong", "correct"]

    # KR bodies always empty; KCR bodies present exactly on misses.
    for f_type in (FeedbackType.KR, FeedbackType.KCR):
        session = engine.start_session(
            "lea", pack, LevelRank.BASIC, "b0", seed=13,
            modality=FeedbackModality(f_type, FeedbackLevel.TASK, Timing.IMMEDIATE),
        )
        _, transcript = driver.run_session(session, driver.scripted(script))
        assert len(transcript.feedback) == 6
        for _, message in transcript.feedback:
            if f_type is FeedbackType.KR:
                assert message.body is None
            else:
                assert (message.body is not None) == (
                    message.verdict is feedback.Verdict.INCORRECT
                )

    # Delayed rendering is pointwise identical to immediate rendering
    # for the same answers and seed, only the delivery position moves.
    for f_type, f_level in (
        (FeedbackType.KCR, FeedbackLevel.TASK),
        (FeedbackType.EF, FeedbackLevel.PROCESS),
    ):
        outcomes = {}
        for timing in (Timing.IMMEDIATE, Timing.DELAYED):
            session = engine.start_session(
                "lea", pack, LevelRank.BASIC, "b0", seed=31,
                modality=FeedbackModality(f_type, f_level, timing),
            )
            final, transcript = driver.run_session(session, driver.scripted(script))
            if timing is Timing.IMMEDIATE:
                outcomes[timing] = [message for _, message in transcript.feedback]
            else:
                assert all(
                    message.verdict is feedback.Verdict.DEFERRED
                    for _, message in transcript.feedback
                )
                outcomes[timing] = [
                    message for block in transcript.block_feedback for message in block
                ]
        assert outcomes[Timing.IMMEDIATE] == outcomes[Timing.DELAYED], f_type

    print("\nACCEPTANCE PASS: feedback matrix (24 combinations), KR/KCR body "
          "rules, delayed == immediate pointwise")


def test_gating_review_list_and_log_truncation(tmp_path):
    counter = itertools.count()
    store = ProgressStore(tmp_path, clock=lambda: float(next(counter)))
    pack = build_pack(basic=(7, 6), intermediate=(5,), advanced=(4,))

    presented: list[str] = []
    final_sessions = []
    for seed, category in enumerate(("b0", "b1")):
        final, transcript = driver.run_full_session(
            store, "lea", pack, LevelRank.BASIC, category,
            driver.scripted(["correct", "wrong"]), seed=seed,
        )
        final_sessions.append(final)
        presented.extend(
            step.item.item_id
            for step in transcript.steps
            if isinstance(step, engine.PresentStep)
        )
        review_steps = [
            step for step in transcript.steps
            if isinstance(step, engine.LevelCompleteStep)
        ]

    # Replay of the event log is the unlock oracle.
    record = store.replay("lea")
    access = engine.unlock_state(record, pack)
    assert LevelRank.INTERMEDIATE in access.unlocked
    assert LevelRank.ADVANCED not in access.unlocked
    engine.start_session("lea", pack, LevelRank.INTERMEDIATE, "i0", progress=record)

    # The review list equals the union of presented items, in order.
    assert len(review_steps) == 1
    review_ids = [item.item_id for item in review_steps[0].review_list]
    assert review_ids == presented
    assert record.seen_by_level[LevelRank.BASIC] == tuple(presented)

    # Truncating the log at any event boundary still replays cleanly.
    path = store.path_for("lea")
    lines = path.read_text(encoding="utf-8").splitlines()
    rng = random.Random(99)
    fresh = ProgressStore(tmp_path)
    for _ in range(100):
        cut = rng.randint(0, len(lines))
        path.write_text("".join(line + "\n" for line in lines[:cut]), encoding="utf-8")
        partial = fresh.replay("lea")
        seen = partial.seen_by_level.get(LevelRank.BASIC, ())
        assert len(seen) == len(set(seen))
        assert list(seen) == presented[: len(seen)]
        assert partial.questions_correct <= partial.questions_asked
        assert partial.points == 10 * partial.questions_correct
        for rank, name in partial.completed_categories:
            assert (rank, name) in {(LevelRank.BASIC, "b0"), (LevelRank.BASIC, "b1")}

    print("\nACCEPTANCE PASS: gating unlock via log replay, ordered review "
          "list, 100 random log truncations")


def test_likert_banding_matches_published_scale():
    # The five published overall means all band as Very Good.
    for criterion, (mean, _sd) in evaldata.OVERALL.items():
        assert stats.likert_band(mean) == "Very Good", criterion

    # Band edges, plus the printed-gap case under the documented
    # greatest-lower-bound convention.
    for edge, label in [
        (4.60, "Excellent"),
        (3.60, "Very Good"),
        (2.60, "Good"),
        (1.60, "Fair"),
        (1.00, "Poor"),
    ]:
        assert stats.likert_band(edge) == label
    assert stats.likert_band(4.595) == "Very Good"

    print("\nACCEPTANCE PASS: Likert banding (published pairs, band edges, "
          "gap convention)")


def _anova_longdouble(groups):
    arrays = [np.asarray(g, dtype=np.longdouble) for g in groups]
    n_total = sum(a.size for a in arrays)
    grand = sum(a.sum() for a in arrays) / n_total
    ss_b = sum(a.size * (a.mean() - grand) ** 2 for a in arrays)
    ss_w = sum(((a - a.mean()) ** 2).sum() for a in arrays)
    return float((ss_b / (len(arrays) - 1)) / (ss_w / (n_total - len(arrays))))


def _f_cdf_quadrature(x, d1, d2):
    a, b = d1 / 2.0, d2 / 2.0
    beta = scipy.special.beta(a, b)

    def density(u):
        return (d1 / d2) ** a * u ** (a - 1.0) * (1.0 + d1 * u / d2) ** (-(a + b)) / beta

    value, _ = scipy.integrate.quad(density, 0.0, x, epsabs=1e-12, limit=400)
    return value


def test_anova_oracle_equivalence():
    started = time.perf_counter()
    rng = random.Random(55)
    for _ in range(500):
        k = rng.randint(2, 6)
        groups = [
            [rng.uniform(0, 10) for _ in range(rng.randint(2, 50))] for _ in range(k)
        ]
        result = stats.one_way_anova(groups)
        oracle_f = _anova_longdouble(groups)
        assert abs(result.f_statistic - oracle_f) <= 1e-9 * max(abs(oracle_f), 1e-30)

        summary = stats.anova_from_summary([stats.summarize(g) for g in groups])
        assert abs(summary.f_statistic - result.f_statistic) <= 1e-9 * abs(
            result.f_statistic
        )
        assert (summary.df_between, summary.df_within) == (
            result.df_between,
            result.df_within,
        )

    # F tail probabilities against a numeric-integration oracle.
    grid_rng = random.Random(77)
    grid = [(grid_rng.uniform(0.05, 50), grid_rng.randint(1, 120), grid_rng.randint(2, 120))
            for _ in range(50)]
    for x, d1, d2 in grid:
        assert abs(stats.f_cdf(x, d1, d2) - _f_cdf_quadrature(x, d1, d2)) <= 1e-8

    # The survey design: three groups, 105 respondents, df (2, 102).
    sizes = (59, 25, 21)
    groups = [[rng.uniform(1, 5) for _ in range(n)] for n in sizes]
    design = stats.one_way_anova(groups)
    assert (design.df_between, design.df_within) == (2, 102)
    assert design.df_between + design.df_within == 104

    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"ANOVA sweep took {elapsed:.2f}s"
    print(f"\nACCEPTANCE PASS: ANOVA oracle equivalence, 500 datasets at 1e-9, "
          f"f_cdf vs quadrature at 1e-8 ({elapsed:.2f}s)")


def test_published_anova_values_do_not_reproduce():
    # Negative reproduction: the published group summaries yield F values
    # that disagree with the published F column; the recomputed values
    # are recorded in docs/evaluation_notes.md as the baseline.
    recomputed = {}
    for criterion in ("Functionality", "Reliability", "Efficiency"):
        result = stats.anova_from_summary(list(evaldata.GROUPS[criterion]))
        assert (result.df_between, result.df_within) == (2, 102)
        published = evaldata.PUBLISHED_F[criterion]
        assert abs(result.f_statistic - published) > 0.4, criterion
        recomputed[criterion] = result.f_statistic

    assert recomputed["Functionality"] == pytest.approx(3.262, abs=5e-4)
    assert recomputed["Reliability"] == pytest.approx(4.867, abs=5e-4)
    assert recomputed["Efficiency"] == pytest.approx(3.783, abs=5e-4)

    from pathlib import Path

    notes = Path(__file__).resolve().parent.parent / "docs" / "evaluation_notes.md"
    text = notes.read_text(encoding="utf-8")
    for published in ("4.480", "4.183", "5.906"):
        assert published in text
    for baseline in ("3.262", "4.867", "3.783"):
        assert baseline in text

    print("\nACCEPTANCE PASS: documented non-reproduction of published F "
          "values (recomputed 3.262 / 4.867 / 3.783 at df (2, 102))")


def test_http_session_differentially_equal_to_engine(tmp_path):
    pack = build_pack(basic=(8, 5), pack_id="diff-pack")
    counter = itertools.count()
    store = ProgressStore(tmp_path, clock=lambda: float(next(counter)))
    app = create_app({pack.pack_id: pack}, store)
    client = TestClient(app)

    pattern = lambda i: i not in (1, 4)  # two wrong answers out of six
    session_id, steps, answers, report = drive_http_session(
        client, pack, seed=2024, answer_pattern=pattern,
        modality={"type": "KCR", "level": "Task", "timing": "Immediate"},
    )
    http_final = app.state.trainer.sessions[session_id]

    ordinal = itertools.count()
    def choose(question):
        return (
            question.correct_index
            if pattern(next(ordinal))
            else (question.correct_index + 1) % 4
        )

    local = engine.start_session(
        "lea", pack, LevelRank.BASIC, "b0",
        modality=FeedbackModality(FeedbackType.KCR, FeedbackLevel.TASK, Timing.IMMEDIATE),
        seed=2024, session_id=session_id,
    )
    local_final, _ = driver.run_session(local, choose)

    assert http_final == local_final
    assert report.status_code == 200
    assert report.json() == local_final.report.to_dict()

    body = report.json()
    correct = sum(1 for a in answers if a["feedback"]["verdict"] == "Correct")
    assert body["pointsEarned"] == 10 * correct
    assert body["accuracy"] == pytest.approx(correct / len(answers))
    assert body["wordsSeen"] == 8

    print("\nACCEPTANCE PASS: HTTP-driven session equals in-process engine "
          "state; report obeys points and accuracy laws")
