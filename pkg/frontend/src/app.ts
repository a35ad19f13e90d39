/** Browser bootstrap: wires the API client to the pure views.
 *
 * One active session per tab. All state transitions wait for the
 * server's response before anything is highlighted or advanced; there
 * is no optimistic rendering of verdicts.
 */

import { ApiError, TrainerClient } from "./api.js";
import type {
  AnswerResponseDoc,
  PackSummaryDoc,
  ProgressDoc,
  QuizStepDoc,
  StepDoc,
} from "./types.js";
import {
  renderBlockFeedback,
  renderCategoryNav,
  renderLevelReview,
  renderLockedLevel,
  renderQuizView,
  renderReport,
  renderTrainerCard,
} from "./views.js";

interface AppState {
  learnerId: string;
  packs: PackSummaryDoc[];
  activePack: PackSummaryDoc | null;
  progress: ProgressDoc | null;
  sessionId: string | null;
  quizToggle: boolean;
  midBlock: boolean;
  currentQuiz: QuizStepDoc | null;
}

const client = new TrainerClient("");

const state: AppState = {
  learnerId: "local-learner",
  packs: [],
  activePack: null,
  progress: null,
  sessionId: null,
  quizToggle: true,
  midBlock: false,
  currentQuiz: null,
};

function mount(): HTMLElement {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app mount point");
  return root;
}

function show(html: string): void {
  mount().innerHTML = html;
}

function showError(error: unknown): void {
  if (error instanceof ApiError && error.doc.code === "LEVEL_LOCKED") {
    show(renderLockedLevel(error.doc) + backButton());
    return;
  }
  const message = error instanceof Error ? error.message : String(error);
  show(
    `<section class="transport-error"><p>${message}</p>` +
      `<button data-role="retry">Retry</button>${backButton()}</section>`,
  );
}

function backButton(): string {
  return `<button data-role="back-to-categories">Back to categories</button>`;
}

async function loadHome(): Promise<void> {
  state.packs = await client.listPacks();
  state.progress = await client.progress(state.learnerId);
  state.activePack = state.packs[0] ?? null;
  state.sessionId = null;
  if (!state.activePack) {
    show(`<p>No packs are loaded on the server.</p>`);
    return;
  }
  const picker = state.packs
    .map(
      (pack) =>
        `<button data-role="pick-pack" data-pack="${pack.packId}"` +
        `${pack.packId === state.activePack?.packId ? ' class="active"' : ""}>` +
        `${pack.language}</button>`,
    )
    .join(" ");
  show(
    `<header class="pack-picker">${picker}</header>` +
      renderCategoryNav(state.activePack, state.progress),
  );
}

async function startSession(level: string, category: string): Promise<void> {
  if (!state.activePack) return;
  try {
    const created = await client.createSession({
      learnerId: state.learnerId,
      packId: state.activePack.packId,
      level,
      category,
      policy: { blockSize: 5, quizLength: 3, quizToggle: state.quizToggle },
    });
    state.sessionId = created.sessionId;
    state.midBlock = false;
    renderStep(created.firstStep);
  } catch (error) {
    showError(error);
  }
}

function renderStep(step: StepDoc): void {
  state.currentQuiz = null;
  if (step.type === "present") {
    state.midBlock = false;
    show(
      renderTrainerCard(step, {
        packId: state.activePack?.packId,
        quizToggle: state.quizToggle,
        midBlock: false,
      }),
    );
  } else if (step.type === "quiz") {
    state.midBlock = true;
    state.currentQuiz = step;
    show(renderQuizView({ step, selection: null, response: null }));
  } else if (step.type === "categoryComplete") {
    show(renderReport(step.report));
  } else {
    show(renderLevelReview(step));
  }
}

async function advance(): Promise<void> {
  if (!state.sessionId) return;
  try {
    renderStep(await client.nextStep(state.sessionId));
  } catch (error) {
    if (error instanceof ApiError && error.status === 410) {
      await loadHome();
      return;
    }
    showError(error);
  }
}

async function answer(selectedIndex: number): Promise<void> {
  if (!state.sessionId || !state.currentQuiz) return;
  const quiz = state.currentQuiz;
  let response: AnswerResponseDoc;
  try {
    response = await client.submitAnswer(
      state.sessionId,
      quiz.question.questionId,
      selectedIndex,
    );
  } catch (error) {
    showError(error);
    return;
  }
  // Highlight lands in the same interaction, straight from the server.
  show(renderQuizView({ step: quiz, selection: selectedIndex, response }));
  if (response.blockFeedback) {
    window.setTimeout(() => {
      show(renderBlockFeedback(response.blockFeedback ?? []));
    }, 900);
  }
}

function onClick(event: Event): void {
  const target = (event.target as HTMLElement).closest("button, input");
  if (!(target instanceof HTMLElement)) return;

  if (target.matches("[data-role='pick-pack']")) {
    const packId = target.dataset.pack;
    state.activePack = state.packs.find((p) => p.packId === packId) ?? null;
    if (state.activePack && state.progress) {
      show(
        `<header class="pack-picker"></header>` +
          renderCategoryNav(state.activePack, state.progress),
      );
    }
    void loadHome();
  } else if (target.matches("[data-role='start-category']")) {
    void startSession(target.dataset.level ?? "", target.dataset.category ?? "");
  } else if (target.matches("[data-role='next']")) {
    void advance();
  } else if (target.matches("[data-role='back-to-categories'], [data-role='retry']")) {
    void loadHome();
  } else if (target.matches(".quiz-option:not([disabled])")) {
    void answer(Number(target.dataset.optionIndex));
  } else if (target.matches(".audio-play")) {
    const url = target.dataset.audioUrl;
    if (url) void new Audio(url).play().catch(() => undefined);
  } else if (target.matches("[data-role='quiz-toggle']")) {
    state.quizToggle = (target as HTMLInputElement).checked;
  }
}

export function start(): void {
  document.addEventListener("click", onClick);
  void loadHome().catch(showError);
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  start();
}
