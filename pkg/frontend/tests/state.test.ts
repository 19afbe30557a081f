import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import type { ApiClient } from "../src/api.js";
import { ExplorerStore } from "../src/state.js";
import type { MutateResponse, SeedJson, SessionState } from "../src/types.js";

const SL4_SEED = JSON.parse(
  readFileSync(new URL("./fixtures/sl4_seed.json", import.meta.url), "utf-8"),
) as SeedJson;

interface StubBehavior {
  create?: (body: unknown) => SessionState;
  mutate?: (id: string, k: number) => Promise<MutateResponse> | MutateResponse;
  undo?: (id: string) => SessionState;
}

function stubClient(behavior: StubBehavior): { api: ApiClient; log: string[] } {
  const log: string[] = [];
  const api = {
    createSession: async (body: unknown) => {
      log.push("create");
      if (!behavior.create) throw new Error("unexpected createSession");
      return behavior.create(body);
    },
    mutate: async (id: string, k: number) => {
      log.push(`mutate ${k}`);
      if (!behavior.mutate) throw new Error("unexpected mutate");
      return behavior.mutate(id, k);
    },
    undo: async (id: string) => {
      log.push("undo");
      if (!behavior.undo) throw new Error("unexpected undo");
      return behavior.undo(id);
    },
    getSession: async () => {
      throw new Error("unexpected getSession");
    },
    remove: async () => undefined,
  } as unknown as ApiClient;
  return { api, log };
}

function sessionWith(seed: SeedJson, history = 0): SessionState {
  return { id: "s1", seed, history };
}

describe("ExplorerStore", () => {
  it("loads a seed and exposes the variables verbatim", async () => {
    const { api } = stubClient({ create: () => sessionWith(SL4_SEED) });
    const store = new ExplorerStore(api);
    await store.loadSeed(SL4_SEED);
    expect(store.variables()).toEqual(SL4_SEED.vars);
    expect(store.state.history).toBe(0);
  });

  it("frozen vertices are not clickable and clicks never reach the service", async () => {
    const { api, log } = stubClient({ create: () => sessionWith(SL4_SEED) });
    const store = new ExplorerStore(api);
    await store.loadSeed(SL4_SEED);

    for (const k of SL4_SEED.frozen) {
      expect(store.clickable(k)).toBe(false);
    }
    expect(SL4_SEED.frozen).toEqual([4, 5, 6]);
    expect(store.clickable(1)).toBe(true);

    const before = store.state.seed;
    await store.clickMutate(4);
    expect(log).toEqual(["create"]); // no mutate call went out
    expect(store.state.notice).toContain("frozen");
    expect(store.state.seed).toBe(before);
  });

  it("undo at history zero is a local no-op with a notice", async () => {
    const { api, log } = stubClient({ create: () => sessionWith(SL4_SEED) });
    const store = new ExplorerStore(api);
    await store.loadSeed(SL4_SEED);
    await store.undo();
    expect(log).toEqual(["create"]);
    expect(store.state.notice).toBe("nothing to undo");
  });

  it("queues clicks so requests stay sequential", async () => {
    const order: string[] = [];
    let release!: () => void;
    const gate = new Promise<void>((resolve) => (release = resolve));
    const seed: SeedJson = {
      n: 2, frozen: [], arrows: [[1, 2, 1]],
      labels: ["x1", "x2"], vars: ["x1", "x2"],
    };
    const { api } = stubClient({
      create: () => sessionWith(seed),
      mutate: async (_id, k) => {
        order.push(`start ${k}`);
        if (k === 1) {
          await gate;
        }
        order.push(`end ${k}`);
        return { ...sessionWith(seed, 1), k, new_var: "v" };
      },
    });
    const store = new ExplorerStore(api);
    await store.loadSeed(seed);
    const first = store.clickMutate(1);
    const second = store.clickMutate(2);
    release();
    await Promise.all([first, second]);
    expect(order).toEqual(["start 1", "end 1", "start 2", "end 2"]);
  });

  it("service errors surface as notices without losing state", async () => {
    const seed: SeedJson = {
      n: 2, frozen: [], arrows: [[1, 2, 1]],
      labels: ["x1", "x2"], vars: ["x1", "x2"],
    };
    const { api } = stubClient({
      create: () => sessionWith(seed),
      mutate: () => {
        throw new Error("boom");
      },
    });
    const store = new ExplorerStore(api);
    await store.loadSeed(seed);
    await store.clickMutate(1);
    expect(store.state.notice).toBe("boom");
    expect(store.variables()).toEqual(["x1", "x2"]);
  });

  it("notifies subscribers on every change", async () => {
    const { api } = stubClient({ create: () => sessionWith(SL4_SEED) });
    const store = new ExplorerStore(api);
    let seen = 0;
    const unsubscribe = store.subscribe(() => {
      seen += 1;
    });
    await store.loadSeed(SL4_SEED);
    expect(seen).toBeGreaterThan(0);
    unsubscribe();
    const at = seen;
    await store.undo();
    expect(seen).toBe(at);
  });
});
