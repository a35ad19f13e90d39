/** Thin typed client for the trainer API.
 *
 * Step and answer calls carry a fresh idempotency key per logical
 * action and reuse it on transport-level retries, so a flaky network
 * cannot advance a session twice or double-submit an answer.
 */

import type {
  AnswerResponseDoc,
  ApiErrorDoc,
  CategorySummaryDoc,
  CreateSessionResponseDoc,
  PackSummaryDoc,
  ProgressDoc,
  ReportDoc,
  StepDoc,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly doc: ApiErrorDoc,
  ) {
    super(doc.message);
  }
}

function freshKey(): string {
  if (typeof crypto !== "undefined" && "randomUUID" in crypto) {
    return crypto.randomUUID();
  }
  return `k-${Date.now()}-${Math.random().toString(36).slice(2)}`;
}

export class TrainerClient {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    idempotencyKey?: string,
  ): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    if (idempotencyKey) headers["Idempotency-Key"] = idempotencyKey;

    const attempt = () =>
      fetch(`${this.baseUrl}${path}`, {
        method,
        headers,
        body: body === undefined ? undefined : JSON.stringify(body),
      });

    let response: Response;
    try {
      response = await attempt();
    } catch (transportError) {
      // One retry with the same idempotency key; the server replays the
      // recorded response instead of advancing again.
      if (!idempotencyKey) throw transportError;
      response = await attempt();
    }
    if (!response.ok) {
      const doc = (await response.json().catch(() => ({
        code: "TRANSPORT",
        message: response.statusText,
        detail: null,
      }))) as ApiErrorDoc;
      throw new ApiError(response.status, doc);
    }
    return (await response.json()) as T;
  }

  listPacks(): Promise<PackSummaryDoc[]> {
    return this.request("GET", "/v1/packs");
  }

  listCategories(packId: string, level: string): Promise<CategorySummaryDoc[]> {
    const query = new URLSearchParams({ level });
    return this.request("GET", `/v1/packs/${encodeURIComponent(packId)}/categories?${query}`);
  }

  createSession(body: {
    learnerId: string;
    packId: string;
    level: string;
    category: string;
    policy?: { blockSize: number; quizLength: number; quizToggle: boolean };
    modality?: { type: string; level: string; timing: string };
    seed?: number;
  }): Promise<CreateSessionResponseDoc> {
    return this.request("POST", "/v1/sessions", body);
  }

  nextStep(sessionId: string): Promise<StepDoc> {
    return this.request(
      "GET",
      `/v1/sessions/${encodeURIComponent(sessionId)}/step`,
      undefined,
      freshKey(),
    );
  }

  submitAnswer(
    sessionId: string,
    questionId: string,
    selectedIndex: number,
  ): Promise<AnswerResponseDoc> {
    return this.request(
      "POST",
      `/v1/sessions/${encodeURIComponent(sessionId)}/answer`,
      { questionId, selectedIndex },
      freshKey(),
    );
  }

  report(sessionId: string): Promise<ReportDoc> {
    return this.request("GET", `/v1/sessions/${encodeURIComponent(sessionId)}/report`);
  }

  progress(learnerId: string): Promise<ProgressDoc> {
    return this.request("GET", `/v1/learners/${encodeURIComponent(learnerId)}/progress`);
  }
}
