// Entry point: wires the family/JSON loaders to the store and renderer.

import { ApiClient } from "./api.js";
import { parseSeedInput } from "./parse.js";
import { renderInto } from "./render.js";
import { ExplorerStore } from "./state.js";
import type { FamilySpec } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function familyFromForm(): FamilySpec {
  const name = el<HTMLSelectElement>("family").value as FamilySpec["name"];
  switch (name) {
    case "rank2":
      return { name, a: Number(el<HTMLInputElement>("param-a").value || "1") };
    case "unitriangular":
      return { name, n: Number(el<HTMLInputElement>("param-n").value || "3") };
    case "gamma":
      return {
        name,
        type: el<HTMLInputElement>("param-type").value || "A2",
        ell: Number(el<HTMLInputElement>("param-ell").value || "1"),
      };
    case "dynkin":
      return { name, type: el<HTMLInputElement>("param-type").value || "A3" };
  }
}

function boot(): void {
  const base = el<HTMLInputElement>("base-url");
  base.value ||= "http://127.0.0.1:8642";
  let store = newStore(base.value);

  function newStore(url: string): ExplorerStore {
    const s = new ExplorerStore(new ApiClient(url));
    renderInto(el("view"), s);
    return s;
  }

  base.addEventListener("change", () => {
    store = newStore(base.value);
  });

  el<HTMLButtonElement>("load-family").addEventListener("click", () => {
    void store.loadFamily(familyFromForm());
  });

  el<HTMLButtonElement>("load-json").addEventListener("click", () => {
    const parsed = parseSeedInput(el<HTMLTextAreaElement>("seed-json").value);
    if ("error" in parsed) {
      el("json-error").textContent = parsed.error;
      return;
    }
    el("json-error").textContent = "";
    void store.loadSeed(parsed.seed);
  });
}

boot();
