// Thin typed client for the session service. No algebra happens here or
// anywhere else in the frontend: every expression string is server-produced.

import type { FamilySpec, MutateResponse, SeedJson, SessionState } from "./types.js";

export class ApiError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + path, init);
    if (response.status === 204) {
      return undefined as T;
    }
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail = typeof body?.detail === "string" ? body.detail : response.statusText;
      throw new ApiError(response.status, detail);
    }
    return body as T;
  }

  private post<T>(path: string, payload?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
  }

  createSession(body: { family?: FamilySpec; seed?: SeedJson }): Promise<SessionState> {
    return this.post<SessionState>("/session", body);
  }

  getSession(id: string): Promise<SessionState> {
    return this.request<SessionState>(`/session/${id}`);
  }

  mutate(id: string, k: number): Promise<MutateResponse> {
    return this.post<MutateResponse>(`/session/${id}/mutate`, { k });
  }

  undo(id: string): Promise<SessionState> {
    return this.post<SessionState>(`/session/${id}/undo`);
  }

  remove(id: string): Promise<void> {
    return this.request<void>(`/session/${id}`, { method: "DELETE" });
  }
}
