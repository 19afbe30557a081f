import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { parseSeedInput } from "../src/parse.js";

const SL4_TEXT = readFileSync(
  new URL("./fixtures/sl4_seed.json", import.meta.url), "utf-8");

describe("parseSeedInput", () => {
  it("accepts a service-produced seed", () => {
    const result = parseSeedInput(SL4_TEXT);
    expect("seed" in result).toBe(true);
    if ("seed" in result) {
      expect(result.seed.n).toBe(6);
      expect(result.seed.frozen).toEqual([4, 5, 6]);
    }
  });

  it("reports broken JSON inline", () => {
    const result = parseSeedInput("{oops");
    expect("error" in result && result.error).toMatch(/invalid JSON/);
  });

  it.each([
    ["[1,2]", "object"],
    ['{"n": 0, "vars": [], "labels": [], "frozen": [], "arrows": []}', "positive integer"],
    ['{"n": 2, "vars": ["x1"], "labels": ["a","b"], "frozen": [], "arrows": []}', "vars"],
    ['{"n": 2, "vars": ["x1","x2"], "labels": ["a"], "frozen": [], "arrows": []}', "labels"],
    ['{"n": 2, "vars": ["x1","x2"], "labels": ["a","b"], "frozen": [3], "arrows": []}', "frozen"],
    ['{"n": 2, "vars": ["x1","x2"], "labels": ["a","b"], "frozen": [], "arrows": [[1,2]]}', "arrows"],
  ])("rejects malformed shape %s", (text, needle) => {
    const result = parseSeedInput(text);
    expect("error" in result && result.error).toContain(needle);
  });
});
