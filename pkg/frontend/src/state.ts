// View state and actions. The store mirrors the last server response
// verbatim; clicks are queued so at most one request is in flight.

import { ApiClient, ApiError } from "./api.js";
import type { FamilySpec, SeedJson, SessionState } from "./types.js";

export interface ViewState {
  sessionId: string | null;
  seed: SeedJson | null;
  history: number;
  selected: number | null;   // 1-based vertex highlighted by the last mutation
  notice: string | null;
  busy: boolean;
}

export type Listener = (state: ViewState) => void;

const INITIAL: ViewState = {
  sessionId: null,
  seed: null,
  history: 0,
  selected: null,
  notice: null,
  busy: false,
};

export class ExplorerStore {
  private current: ViewState = { ...INITIAL };
  private listeners: Listener[] = [];
  private queue: Promise<void> = Promise.resolve();

  constructor(private readonly api: ApiClient) {}

  get state(): ViewState {
    return this.current;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private set(patch: Partial<ViewState>): void {
    this.current = { ...this.current, ...patch };
    for (const listener of this.listeners) {
      listener(this.current);
    }
  }

  private applyServer(state: SessionState, selected: number | null = null): void {
    this.set({
      sessionId: state.id,
      seed: state.seed,
      history: state.history,
      selected,
      notice: null,
    });
  }

  /** Displayed expressions, exactly as the server sent them. */
  variables(): string[] {
    return this.current.seed ? [...this.current.seed.vars] : [];
  }

  isFrozen(k: number): boolean {
    return this.current.seed !== null && this.current.seed.frozen.includes(k);
  }

  clickable(k: number): boolean {
    const seed = this.current.seed;
    return seed !== null && k >= 1 && k <= seed.n && !seed.frozen.includes(k);
  }

  /** Serialize actions so at most one request is outstanding. */
  private enqueue(action: () => Promise<void>): Promise<void> {
    this.queue = this.queue.then(action, action);
    return this.queue;
  }

  loadFamily(spec: FamilySpec): Promise<void> {
    return this.enqueue(async () => {
      this.set({ busy: true });
      try {
        this.applyServer(await this.api.createSession({ family: spec }));
      } catch (err) {
        this.set({ notice: describe(err) });
      } finally {
        this.set({ busy: false });
      }
    });
  }

  loadSeed(seed: SeedJson): Promise<void> {
    return this.enqueue(async () => {
      this.set({ busy: true });
      try {
        this.applyServer(await this.api.createSession({ seed }));
      } catch (err) {
        this.set({ notice: describe(err) });
      } finally {
        this.set({ busy: false });
      }
    });
  }

  clickMutate(k: number): Promise<void> {
    return this.enqueue(async () => {
      const id = this.current.sessionId;
      if (id === null) {
        this.set({ notice: "no session loaded" });
        return;
      }
      if (this.isFrozen(k)) {
        // Client-side guard: frozen vertices are not clickable.
        this.set({ notice: `vertex ${k} is frozen` });
        return;
      }
      this.set({ busy: true });
      try {
        this.applyServer(await this.api.mutate(id, k), k);
      } catch (err) {
        this.set({ notice: describe(err) });
      } finally {
        this.set({ busy: false });
      }
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      const id = this.current.sessionId;
      if (id === null) {
        this.set({ notice: "no session loaded" });
        return;
      }
      if (this.current.history < 1) {
        this.set({ notice: "nothing to undo" });
        return;
      }
      this.set({ busy: true });
      try {
        this.applyServer(await this.api.undo(id));
      } catch (err) {
        this.set({ notice: describe(err) });
      } finally {
        this.set({ busy: false });
      }
    });
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return `${err.status}: ${err.message}`;
  }
  return err instanceof Error ? err.message : String(err);
}
