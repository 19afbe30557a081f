// Validation of user-pasted seed JSON. Shape errors are reported inline
// before anything reaches the service, so a bad paste never creates a
// session.

import type { SeedJson } from "./types.js";

export type ParseResult = { seed: SeedJson } | { error: string };

export function parseSeedInput(raw: string): ParseResult {
  let data: unknown;
  try {
    data = JSON.parse(raw);
  } catch (err) {
    return { error: `invalid JSON: ${(err as Error).message}` };
  }
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    return { error: "seed JSON must be an object" };
  }
  const seed = data as Partial<SeedJson>;
  if (!Number.isInteger(seed.n) || (seed.n as number) < 1) {
    return { error: "field n must be a positive integer" };
  }
  const n = seed.n as number;
  if (!Array.isArray(seed.vars) || seed.vars.length !== n ||
      !seed.vars.every((v) => typeof v === "string")) {
    return { error: `field vars must be ${n} polynomial strings` };
  }
  if (!Array.isArray(seed.labels) || seed.labels.length !== n ||
      !seed.labels.every((v) => typeof v === "string")) {
    return { error: `field labels must be ${n} strings` };
  }
  if (!Array.isArray(seed.frozen) ||
      !seed.frozen.every((v) => Number.isInteger(v) && v >= 1 && v <= n)) {
    return { error: "field frozen must list vertex ids in 1..n" };
  }
  if (!Array.isArray(seed.arrows) ||
      !seed.arrows.every((a) => Array.isArray(a) && a.length === 3 &&
        a.every((x) => Number.isInteger(x)))) {
    return { error: "field arrows must be [src, dst, mult] triples" };
  }
  return { seed: seed as SeedJson };
}
