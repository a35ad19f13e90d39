/** Wire documents served by the trainer API. The UI renders these as-is
 * and never derives verdicts, scores, or gating on its own. */

export interface ItemDoc {
  id: string;
  english: string;
  translation: string;
  romanization?: string;
  mnemonic?: string;
  sampleSentence?: string;
  audio?: string;
}

export interface PresentStepDoc {
  type: "present";
  item: ItemDoc;
  position: number;
  total: number;
}

export interface QuizQuestionDoc {
  questionId: string;
  prompt: string;
  options: string[];
}

export interface QuizStepDoc {
  type: "quiz";
  question: QuizQuestionDoc;
}

export interface BandDoc {
  lower: number;
  label: string;
}

export interface ReportDoc {
  level: string;
  category: string;
  pointsEarned: number;
  accuracy: number;
  wordsSeen: number;
  classification: string;
  bands: BandDoc[];
}

export interface CategoryCompleteStepDoc {
  type: "categoryComplete";
  report: ReportDoc;
}

export interface LevelCompleteStepDoc {
  type: "levelComplete";
  reviewList: ItemDoc[];
}

export type StepDoc =
  | PresentStepDoc
  | QuizStepDoc
  | CategoryCompleteStepDoc
  | LevelCompleteStepDoc;

export type VerdictValue = "Correct" | "Incorrect" | "Deferred";
export type HighlightValue = "Green" | "Red" | "None";

export interface FeedbackDoc {
  questionId: string;
  verdict: VerdictValue;
  highlight: HighlightValue;
  body: string | null;
  levelNote: string | null;
  advisory: string | null;
}

export interface AnswerResponseDoc {
  questionId: string;
  feedback: FeedbackDoc;
  blockFeedback: FeedbackDoc[] | null;
}

export interface CategorySummaryDoc {
  name: string;
  itemCount: number;
}

export interface PackLevelDoc {
  rank: string;
  categories: CategorySummaryDoc[];
}

export interface PackSummaryDoc {
  packId: string;
  packVersion: string;
  language: string;
  levels: PackLevelDoc[];
}

export interface ProgressDoc {
  learnerId: string;
  completedCategories: { level: string; category: string }[];
  seenByLevel: Record<string, string[]>;
  totals: {
    points: number;
    questionsAsked: number;
    questionsCorrect: number;
    wordsSeen: number;
  };
  unlockedLevels: Record<string, string[]>;
}

export interface ApiErrorDoc {
  code: string;
  message: string;
  detail: Record<string, unknown> | null;
}

export interface CreateSessionResponseDoc {
  sessionId: string;
  firstStep: StepDoc;
}
