from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from lexitrain import driver, engine
from lexitrain.errors import SessionNotCompleteError
from lexitrain.lexicon import LevelRank
from lexitrain.scoring import (
    Classification,
    ScoreState,
    build_report,
    classify,
    completion_report,
    score_answer,
    see_word,
)


class TestScoreAnswer:
    def test_correct_from_zero(self):
        state = score_answer(ScoreState(), True)
        assert state == ScoreState(points_earned=10, questions_asked=1, questions_correct=1)

    def test_incorrect_from_zero(self):
        state = score_answer(ScoreState(), False)
        assert state == ScoreState(points_earned=0, questions_asked=1, questions_correct=0)

    def test_six_answers_four_correct(self):
        outcomes = [True, False, True, True, False, True]
        state = ScoreState()
        for outcome in outcomes:
            state = score_answer(state, outcome)
        assert state.points_earned == 10 * sum(outcomes)
        assert state.questions_asked == 6
        assert state.accuracy == pytest.approx(4 / 6)

    def test_custom_points_value(self):
        state = score_answer(ScoreState(), True, points_per_correct=7)
        assert state.points_earned == 7

    @given(st.lists(st.booleans(), max_size=200))
    def test_points_closed_form(self, outcomes):
        state = ScoreState()
        for outcome in outcomes:
            state = score_answer(state, outcome)
        assert state.points_earned == 10 * state.questions_correct
        assert state.questions_correct <= state.questions_asked == len(outcomes)

    @given(st.lists(st.booleans(), min_size=1, max_size=60), st.randoms())
    def test_accuracy_order_independent(self, outcomes, rng):
        shuffled = outcomes[:]
        rng.shuffle(shuffled)

        def fold(seq):
            state = ScoreState()
            for outcome in seq:
                state = score_answer(state, outcome)
            return state.accuracy

        assert fold(outcomes) == fold(shuffled)


class TestClassify:
    @pytest.mark.parametrize(
        "accuracy,asked,expected",
        [
            (0.75, 4, Classification.ADVANCED),
            (0.49, 100, Classification.BEGINNER),
            (1.0, 0, Classification.NEWBIE),
            (0.0, 5, Classification.NEWBIE),
            (0.249, 1000, Classification.NEWBIE),
            (0.25, 4, Classification.BEGINNER),
            (0.5, 2, Classification.AVERAGE),
            (0.7499, 10_000, Classification.AVERAGE),
            (1.0, 3, Classification.ADVANCED),
        ],
    )
    def test_bands(self, accuracy, asked, expected):
        assert classify(accuracy, asked) is expected

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            classify(1.2, 3)

    @given(st.floats(0, 1), st.floats(0, 1))
    def test_monotone_in_accuracy(self, a, b):
        order = list(Classification)
        lo, hi = sorted((a, b))
        assert order.index(classify(lo, 10)) <= order.index(classify(hi, 10))


class TestCompletionReport:
    def test_scripted_session_all_correct(self, make_pack):
        pack = make_pack(basic=(5, 4))
        session = engine.start_session("lea", pack, LevelRank.BASIC, "b0", seed=5)
        final, transcript = driver.run_session(session, driver.always_correct)
        report = completion_report(final)
        assert report.points_earned == 30
        assert report.accuracy == 1.0
        assert report.words_seen == 5
        assert report.classification is Classification.ADVANCED
        assert (report.level_rank, report.category_name) == (LevelRank.BASIC, "b0")

    def test_all_wrong_is_newbie(self, make_pack):
        pack = make_pack(basic=(5, 4))
        session = engine.start_session("lea", pack, LevelRank.BASIC, "b0", seed=5)
        final, _ = driver.run_session(session, driver.always_wrong)
        report = completion_report(final)
        assert report.points_earned == 0
        assert report.accuracy == 0.0
        assert report.words_seen == 5
        assert report.classification is Classification.NEWBIE

    def test_toggle_off_is_newbie_with_words_seen(self, make_pack):
        pack = make_pack(basic=(7, 4))
        session = engine.start_session(
            "lea", pack, LevelRank.BASIC, "b0", seed=5,
            policy=engine.SchedulePolicy(quiz_toggle=False),
        )
        final, transcript = driver.run_session(session, driver.always_correct)
        assert transcript.step_tags.count("Q") == 0
        report = completion_report(final)
        assert (report.points_earned, report.accuracy, report.words_seen) == (0, 0.0, 7)
        assert report.classification is Classification.NEWBIE

    def test_report_unavailable_before_completion(self, make_pack):
        pack = make_pack(basic=(5, 4))
        session = engine.start_session("lea", pack, LevelRank.BASIC, "b0")
        with pytest.raises(SessionNotCompleteError):
            completion_report(session)

    def test_words_seen_tracks_presentations(self):
        state = ScoreState()
        for _ in range(4):
            state = see_word(state)
        assert state.words_seen == 4

    def test_report_records_band_table(self):
        report = build_report(LevelRank.BASIC, "cat", ScoreState(30, 3, 3, 5))
        doc = report.to_dict()
        assert doc["bands"][0] == {"lower": 0.75, "label": "Advanced"}
        assert doc["classification"] == "Advanced"
