/** Pure view rendering: API documents in, HTML strings out.
 *
 * Every displayed fact comes from a server document. In particular the
 * green/red option highlighting is a direct mapping of the feedback
 * document's `highlight` field; the UI has no access to the correct
 * index and never compares answers itself.
 */

import type {
  AnswerResponseDoc,
  ApiErrorDoc,
  FeedbackDoc,
  HighlightValue,
  LevelCompleteStepDoc,
  PackSummaryDoc,
  PresentStepDoc,
  ProgressDoc,
  QuizStepDoc,
  ReportDoc,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

export function highlightClass(highlight: HighlightValue): string {
  // Server-authoritative: the class is a rename of the wire value,
  // never a local correctness decision.
  if (highlight === "Green") return "highlight-green";
  if (highlight === "Red") return "highlight-red";
  return "";
}

export function renderTrainerCard(
  step: PresentStepDoc,
  opts: { audioBase?: string; packId?: string; quizToggle?: boolean; midBlock?: boolean } = {},
): string {
  const item = step.item;
  const parts: string[] = [];
  parts.push(`<article class="trainer-card" data-item-id="${escapeHtml(item.id)}">`);
  parts.push(
    `<div class="card-position">${step.position + 1} / ${step.total}</div>`,
  );
  parts.push(`<h2 class="card-english">${escapeHtml(item.english)}</h2>`);
  parts.push(`<div class="card-translation">${escapeHtml(item.translation)}</div>`);
  if (item.romanization) {
    parts.push(`<div class="card-romanization">${escapeHtml(item.romanization)}</div>`);
  }
  if (item.audio) {
    const base = opts.audioBase ?? "/v1/audio";
    const packId = opts.packId ?? "";
    const url = `${base}/${encodeURIComponent(packId)}/${item.audio}`;
    parts.push(
      `<button class="audio-play" data-audio-url="${escapeHtml(url)}">Play audio</button>`,
    );
  }
  if (item.mnemonic) {
    parts.push(`<div class="card-mnemonic">${escapeHtml(item.mnemonic)}</div>`);
  }
  if (item.sampleSentence) {
    parts.push(`<div class="card-sample">${escapeHtml(item.sampleSentence)}</div>`);
  }
  const toggle = opts.quizToggle ?? true;
  const toggleDisabled = opts.midBlock ? " disabled" : "";
  parts.push(
    `<label class="quiz-toggle"><input type="checkbox" data-role="quiz-toggle"` +
      `${toggle ? " checked" : ""}${toggleDisabled}> Quiz blocks</label>`,
  );
  parts.push(`<button class="next-step" data-role="next">Next</button>`);
  parts.push("</article>");
  return parts.join("\n");
}

export interface QuizViewState {
  step: QuizStepDoc;
  selection: number | null;
  response: AnswerResponseDoc | null;
}

export function renderQuizView(state: QuizViewState): string {
  const question = state.step.question;
  const answered = state.response !== null;
  const feedback = state.response?.feedback ?? null;
  const parts: string[] = [];
  parts.push(
    `<section class="quiz-view" data-question-id="${escapeHtml(question.questionId)}">`,
  );
  parts.push(`<h2 class="quiz-prompt">${escapeHtml(question.prompt)}</h2>`);
  parts.push(`<ol class="quiz-options">`);
  question.options.forEach((option, index) => {
    const classes = ["quiz-option"];
    if (answered && feedback && index === state.selection) {
      const cls = highlightClass(feedback.highlight);
      if (cls) classes.push(cls);
    }
    // Options lock as soon as an answer is in flight or recorded, so a
    // second click cannot race the server.
    const disabled = answered ? " disabled" : "";
    parts.push(
      `<li><button class="${classes.join(" ")}" data-option-index="${index}"` +
        `${disabled}>${escapeHtml(option)}</button></li>`,
    );
  });
  parts.push(`</ol>`);
  if (feedback) {
    parts.push(renderFeedbackDetail(feedback));
  }
  parts.push(`</section>`);
  return parts.join("\n");
}

export function renderFeedbackDetail(feedback: FeedbackDoc): string {
  const parts: string[] = [];
  if (feedback.verdict === "Deferred") {
    parts.push(`<div class="feedback-deferred">Answer recorded.</div>`);
  }
  if (feedback.body) {
    parts.push(`<div class="feedback-body">${escapeHtml(feedback.body)}</div>`);
  }
  if (feedback.levelNote) {
    parts.push(`<div class="feedback-note">${escapeHtml(feedback.levelNote)}</div>`);
  }
  if (feedback.advisory) {
    parts.push(`<div class="feedback-advisory">${escapeHtml(feedback.advisory)}</div>`);
  }
  return parts.join("\n");
}

export function renderBlockFeedback(messages: FeedbackDoc[]): string {
  const rows = messages
    .map((message) => {
      const cls = highlightClass(message.highlight);
      const body = message.body
        ? `<div class="feedback-body">${escapeHtml(message.body)}</div>`
        : "";
      return (
        `<li class="block-feedback-item ${cls}" data-question-id="` +
        `${escapeHtml(message.questionId)}">` +
        `<span class="verdict">${escapeHtml(message.verdict)}</span>${body}</li>`
      );
    })
    .join("\n");
  return (
    `<section class="block-feedback"><h2>Block results</h2>` +
    `<ol>\n${rows}\n</ol>` +
    `<button class="next-step" data-role="next">Continue</button></section>`
  );
}

export function renderReport(report: ReportDoc): string {
  const accuracyPct = (report.accuracy * 100).toFixed(1);
  const celebrate = report.classification !== "Newbie";
  const classificationClass = celebrate
    ? "report-classification report-celebrate"
    : "report-classification";
  return [
    `<section class="report-view" data-level="${escapeHtml(report.level)}"` +
      ` data-category="${escapeHtml(report.category)}">`,
    `<h2>Completion report: ${escapeHtml(report.category)}</h2>`,
    `<dl class="report-facts">`,
    `<dt>Points earned</dt><dd data-field="pointsEarned">${report.pointsEarned}</dd>`,
    `<dt>Accuracy</dt><dd data-field="accuracy">${accuracyPct}%</dd>`,
    `<dt>Words seen</dt><dd data-field="wordsSeen">${report.wordsSeen}</dd>`,
    `</dl>`,
    `<div class="${classificationClass}" data-field="classification">` +
      `${escapeHtml(report.classification)}</div>`,
    `<button class="next-step" data-role="next">Continue</button>`,
    `</section>`,
  ].join("\n");
}

export function renderLevelReview(step: LevelCompleteStepDoc): string {
  const rows = step.reviewList
    .map(
      (item) =>
        `<li class="review-item" data-item-id="${escapeHtml(item.id)}">` +
        `<span class="review-english">${escapeHtml(item.english)}</span> ` +
        `<span class="review-translation">${escapeHtml(item.translation)}</span></li>`,
    )
    .join("\n");
  return (
    `<section class="level-review"><h2>Level complete</h2>` +
    `<p>Every word you studied in this level:</p>` +
    `<ol class="review-list">\n${rows}\n</ol>` +
    `<button data-role="back-to-categories">Choose the next level</button></section>`
  );
}

export function renderLockedLevel(error: ApiErrorDoc): string {
  const detail = error.detail ?? {};
  const level = String(detail["prerequisiteLevel"] ?? "");
  const category = String(detail["prerequisiteCategory"] ?? "");
  const hint =
    level && category
      ? `<div class="locked-prerequisite">Finish ${escapeHtml(level)} / ` +
        `${escapeHtml(category)} first.</div>`
      : "";
  return (
    `<section class="locked-level">` +
    `<div class="locked-message">${escapeHtml(error.message)}</div>${hint}</section>`
  );
}

export function renderCategoryNav(
  pack: PackSummaryDoc,
  progress: ProgressDoc | null,
): string {
  const unlocked = new Set(progress?.unlockedLevels[pack.packId] ?? ["Basic"]);
  const completed = new Set(
    (progress?.completedCategories ?? []).map((c) => `${c.level}/${c.category}`),
  );
  const levels = pack.levels
    .map((level) => {
      const isUnlocked = unlocked.has(level.rank);
      const levelClass = isUnlocked ? "level" : "level level-locked";
      const items = level.categories
        .map((category) => {
          const key = `${level.rank}/${category.name}`;
          const done = completed.has(key) ? " category-complete" : "";
          // Locked levels render inert buttons: no click target data.
          const attrs = isUnlocked
            ? ` data-role="start-category" data-level="${escapeHtml(level.rank)}"` +
              ` data-category="${escapeHtml(category.name)}"`
            : " disabled";
          return (
            `<li><button class="category${done}"${attrs}>` +
            `${escapeHtml(category.name)} (${category.itemCount})</button></li>`
          );
        })
        .join("\n");
      const badge = isUnlocked ? "" : ` <span class="lock-badge">locked</span>`;
      return (
        `<section class="${levelClass}" data-rank="${escapeHtml(level.rank)}">` +
        `<h3>${escapeHtml(level.rank)}${badge}</h3><ul>\n${items}\n</ul></section>`
      );
    })
    .join("\n");
  return `<nav class="category-nav" data-pack="${escapeHtml(pack.packId)}">${levels}</nav>`;
}
