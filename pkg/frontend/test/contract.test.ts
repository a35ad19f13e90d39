/** Contract tests against recorded API fixtures.
 *
 * The fixtures under ../fixtures are real responses captured from the
 * trainer API (see scripts/record_fixtures.py). These tests feed them
 * into the pure view functions and assert the rendered output, so any
 * drift between the server contract and the UI shows up here without a
 * browser or a live server.
 */

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import type {
  AnswerResponseDoc,
  ApiErrorDoc,
  LevelCompleteStepDoc,
  PackSummaryDoc,
  PresentStepDoc,
  ProgressDoc,
  QuizStepDoc,
  ReportDoc,
} from "../src/types.js";
import {
  renderBlockFeedback,
  renderCategoryNav,
  renderLevelReview,
  renderLockedLevel,
  renderQuizView,
  renderReport,
  renderTrainerCard,
} from "../src/views.js";

function fixture<T>(name: string): T {
  const url = new URL(`../fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

const presentStep = fixture<PresentStepDoc>("present_step");
const presentStepMinimal = fixture<PresentStepDoc>("present_step_minimal");
const quizStep = fixture<QuizStepDoc>("quiz_step");
const answerCorrectKr = fixture<AnswerResponseDoc>("answer_correct_kr");
const answerWrongKr = fixture<AnswerResponseDoc>("answer_wrong_kr");
const answerWrongKcr = fixture<AnswerResponseDoc>("answer_wrong_kcr");
const delayedBlock = fixture<AnswerResponseDoc[]>("delayed_block_answers");
const report = fixture<ReportDoc>("report");
const reportNewbie = fixture<ReportDoc>("report_newbie");
const levelComplete = fixture<LevelCompleteStepDoc>("level_complete");
const lockedError = fixture<ApiErrorDoc>("locked_error");
const packs = fixture<PackSummaryDoc[]>("packs");
const progress = fixture<ProgressDoc>("progress");

function countOccurrences(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

describe("trainer card", () => {
  it("shows english, translation, romanization, and mnemonic", () => {
    const html = renderTrainerCard(presentStep, { packId: "ko-canonical-1" });
    expect(html).toContain(presentStep.item.english);
    expect(html).toContain(presentStep.item.translation);
    expect(html).toContain(presentStep.item.romanization!);
    expect(html).toContain(presentStep.item.mnemonic!);
    expect(html).toContain("1 / 8");
  });

  it("offers audio playback exactly when the item carries audio", () => {
    const withAudio = renderTrainerCard(presentStep, { packId: "ko-canonical-1" });
    expect(withAudio).toContain("audio-play");
    expect(withAudio).toContain(
      `/v1/audio/ko-canonical-1/${presentStep.item.audio}`,
    );
    const withoutAudio = renderTrainerCard(presentStepMinimal, {
      packId: "es-minimal-1",
    });
    expect(withoutAudio).not.toContain("audio-play");
  });

  it("omits the mnemonic section when the item has none", () => {
    const html = renderTrainerCard(presentStepMinimal, { packId: "es-minimal-1" });
    expect(html).not.toContain("card-mnemonic");
  });

  it("mirrors the quiz toggle and disables it mid-block", () => {
    const free = renderTrainerCard(presentStep, { quizToggle: true, midBlock: false });
    expect(free).toContain('data-role="quiz-toggle" checked');
    expect(free).not.toContain("checked disabled");
    const locked = renderTrainerCard(presentStep, { quizToggle: true, midBlock: true });
    expect(locked).toContain("checked disabled");
  });
});

describe("quiz interaction (immediate mode)", () => {
  it("serves four options from the server, unhighlighted and enabled", () => {
    const html = renderQuizView({ step: quizStep, selection: null, response: null });
    expect(countOccurrences(html, "data-option-index")).toBe(4);
    expect(html).not.toContain("highlight-green");
    expect(html).not.toContain("highlight-red");
    expect(html).not.toContain("disabled");
    // The quiz document must not leak the correct answer.
    expect(quizStep.question).not.toHaveProperty("correctIndex");
  });

  it("renders a green highlight on the selected option for a correct answer", () => {
    expect(answerCorrectKr.feedback.verdict).toBe("Correct");
    const html = renderQuizView({
      step: quizStep,
      selection: 2,
      response: answerCorrectKr,
    });
    expect(html).toContain('data-option-index="2" disabled');
    expect(countOccurrences(html, "highlight-green")).toBe(1);
    expect(html).not.toContain("highlight-red");
    // KR carries no body, so nothing is shown beneath.
    expect(html).not.toContain("feedback-body");
  });

  it("renders a red highlight for an incorrect answer in the same view", () => {
    expect(answerWrongKr.feedback.verdict).toBe("Incorrect");
    const html = renderQuizView({
      step: quizStep,
      selection: 1,
      response: answerWrongKr,
    });
    expect(countOccurrences(html, "highlight-red")).toBe(1);
    expect(html).not.toContain("highlight-green");
  });

  it("locks every option once an answer is recorded", () => {
    const html = renderQuizView({
      step: quizStep,
      selection: 0,
      response: answerCorrectKr,
    });
    expect(countOccurrences(html, "disabled")).toBe(4);
  });

  it("shows the correct translation beneath a KCR miss", () => {
    expect(answerWrongKcr.feedback.body).toBeTruthy();
    const html = renderQuizView({
      step: quizStep,
      selection: 3,
      response: answerWrongKcr,
    });
    expect(html).toContain("feedback-body");
    expect(html).toContain(answerWrongKcr.feedback.body!);
  });

  it("derives highlighting from the server document, never locally", () => {
    // Same selection, opposite verdicts: the class tracks the server's
    // highlight field, which is the whole contract.
    const green = renderQuizView({ step: quizStep, selection: 1, response: answerCorrectKr });
    const red = renderQuizView({ step: quizStep, selection: 1, response: answerWrongKr });
    expect(green).toContain("highlight-green");
    expect(red).toContain("highlight-red");
  });
});

describe("delayed mode", () => {
  it("acknowledges each answer neutrally until the block ends", () => {
    for (const answer of delayedBlock) {
      expect(answer.feedback.verdict).toBe("Deferred");
      const html = renderQuizView({ step: quizStep, selection: 0, response: answer });
      expect(html).toContain("feedback-deferred");
      expect(html).not.toContain("highlight-green");
      expect(html).not.toContain("highlight-red");
    }
    expect(delayedBlock[0].blockFeedback).toBeNull();
    expect(delayedBlock[1].blockFeedback).toBeNull();
  });

  it("renders exactly three feedback messages after the third answer", () => {
    const block = delayedBlock[2].blockFeedback;
    expect(block).not.toBeNull();
    const html = renderBlockFeedback(block!);
    expect(countOccurrences(html, "block-feedback-item")).toBe(3);
    // The late messages carry the real verdicts and, for the miss, the
    // correct translation.
    expect(html).toContain("highlight-green");
    expect(html).toContain("highlight-red");
    const miss = block!.find((m) => m.verdict === "Incorrect")!;
    expect(html).toContain(miss.body!);
  });
});

describe("report view", () => {
  it("shows points, accuracy, words seen, and the classification", () => {
    const html = renderReport(report);
    expect(html).toContain(`data-field="pointsEarned">${report.pointsEarned}<`);
    expect(html).toContain(`data-field="wordsSeen">${report.wordsSeen}<`);
    expect(html).toContain(`data-field="accuracy">83.3%<`);
    expect(html).toContain(report.classification);
  });

  it("celebrates every label except Newbie", () => {
    expect(renderReport(report)).toContain("report-celebrate");
    expect(reportNewbie.classification).toBe("Newbie");
    expect(renderReport(reportNewbie)).not.toContain("report-celebrate");
  });
});

describe("level review", () => {
  it("lists every studied word in first-seen order", () => {
    const html = renderLevelReview(levelComplete);
    expect(countOccurrences(html, "review-item")).toBe(16);
    const order = levelComplete.reviewList.map((item) => html.indexOf(item.id));
    expect([...order].sort((a, b) => a - b)).toEqual(order);
    for (const item of levelComplete.reviewList) {
      expect(html).toContain(item.translation);
    }
  });
});

describe("navigation and locking", () => {
  it("renders locked levels as non-navigable", () => {
    const freshProgress: ProgressDoc = {
      ...progress,
      completedCategories: [],
      unlockedLevels: { "ko-canonical-1": ["Basic"] },
    };
    const html = renderCategoryNav(packs[0], freshProgress);
    expect(countOccurrences(html, "level-locked")).toBe(2);
    const locked = html.slice(html.indexOf("level-locked"));
    expect(locked).not.toContain("data-role=\"start-category\"");
  });

  it("unlocked levels expose start targets and completion marks", () => {
    const html = renderCategoryNav(packs[0], progress);
    expect(progress.unlockedLevels["ko-canonical-1"]).toContain("Intermediate");
    expect(html).toContain('data-role="start-category" data-level="Intermediate"');
    expect(countOccurrences(html, "category-complete")).toBe(2);
  });

  it("shows the server's prerequisite message for a locked level", () => {
    const html = renderLockedLevel(lockedError);
    expect(html).toContain(lockedError.message);
    expect(html).toContain("Basic");
    expect(html).toContain("alphabet");
  });
});
