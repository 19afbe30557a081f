// SVG rendering of the quiver plus the variable panel. Pure DOM; all the
// displayed math text comes straight out of the ViewState.

import { layoutPositions } from "./layout.js";
import type { ExplorerStore, ViewState } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 760;
const HEIGHT = 480;

export function renderInto(container: HTMLElement, store: ExplorerStore): void {
  container.innerHTML = `
    <div class="explorer">
      <svg class="quiver" width="${WIDTH}" height="${HEIGHT}"
           viewBox="0 0 ${WIDTH} ${HEIGHT}"></svg>
      <div class="side">
        <div class="controls">
          <button class="undo">undo</button>
          <span class="history"></span>
        </div>
        <div class="notice"></div>
        <ol class="variables"></ol>
      </div>
    </div>`;
  const svg = container.querySelector<SVGSVGElement>("svg.quiver")!;
  const undoButton = container.querySelector<HTMLButtonElement>("button.undo")!;
  const historySpan = container.querySelector<HTMLElement>("span.history")!;
  const noticeDiv = container.querySelector<HTMLElement>("div.notice")!;
  const variableList = container.querySelector<HTMLOListElement>("ol.variables")!;

  undoButton.addEventListener("click", () => {
    void store.undo();
  });

  const draw = (state: ViewState) => {
    svg.replaceChildren();
    noticeDiv.textContent = state.notice ?? "";
    historySpan.textContent = `history: ${state.history}`;
    undoButton.disabled = state.history < 1 || state.busy;
    variableList.replaceChildren();
    const seed = state.seed;
    if (!seed) {
      return;
    }
    const points = layoutPositions(seed, WIDTH, HEIGHT);

    ensureArrowMarker(svg);
    for (const [src, dst, mult] of seed.arrows) {
      const a = points[src - 1];
      const b = points[dst - 1];
      const line = document.createElementNS(SVG_NS, "line");
      const trimmed = shrink(a, b, 22);
      line.setAttribute("x1", String(trimmed.x1));
      line.setAttribute("y1", String(trimmed.y1));
      line.setAttribute("x2", String(trimmed.x2));
      line.setAttribute("y2", String(trimmed.y2));
      line.setAttribute("stroke", "#444");
      line.setAttribute("stroke-width", mult > 1 ? "3" : "1.5");
      line.setAttribute("marker-end", "url(#arrowhead)");
      svg.appendChild(line);
      if (mult > 1) {
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("x", String((a.x + b.x) / 2 + 6));
        label.setAttribute("y", String((a.y + b.y) / 2 - 6));
        label.setAttribute("class", "multiplicity");
        label.textContent = `${mult}`;
        svg.appendChild(label);
      }
    }

    for (let k = 1; k <= seed.n; k++) {
      const p = points[k - 1];
      const frozen = seed.frozen.includes(k);
      const group = document.createElementNS(SVG_NS, "g");
      const shape = frozen
        ? rect(p.x - 18, p.y - 14, 36, 28)
        : circle(p.x, p.y, 16);
      shape.setAttribute("fill", frozen ? "#dfe7f5" : "#fff3d6");
      shape.setAttribute("stroke", state.selected === k ? "#c0392b" : "#333");
      shape.setAttribute("stroke-width", state.selected === k ? "3" : "1.5");
      if (!frozen) {
        group.setAttribute("class", "mutable");
        group.addEventListener("click", () => {
          void store.clickMutate(k);
        });
      } else {
        group.setAttribute("class", "frozen");
      }
      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", String(p.x));
      text.setAttribute("y", String(p.y + 4));
      text.setAttribute("text-anchor", "middle");
      text.textContent = seed.labels[k - 1] ?? String(k);
      group.appendChild(shape);
      group.appendChild(text);
      svg.appendChild(group);
    }

    seed.vars.forEach((expr, i) => {
      const item = document.createElement("li");
      const frozen = seed.frozen.includes(i + 1);
      item.className = frozen ? "frozen" : "mutable";
      if (state.selected === i + 1) {
        item.classList.add("changed");
      }
      item.textContent = `${seed.labels[i]}: ${expr}`;
      variableList.appendChild(item);
    });
  };

  store.subscribe(draw);
  draw(store.state);
}

function ensureArrowMarker(svg: SVGSVGElement): void {
  const defs = document.createElementNS(SVG_NS, "defs");
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrowhead");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "7");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const path = document.createElementNS(SVG_NS, "path");
  path.setAttribute("d", "M0,0 L7,3 L0,6 Z");
  path.setAttribute("fill", "#444");
  marker.appendChild(path);
  defs.appendChild(marker);
  svg.appendChild(defs);
}

function circle(cx: number, cy: number, r: number): SVGElement {
  const el = document.createElementNS(SVG_NS, "circle");
  el.setAttribute("cx", String(cx));
  el.setAttribute("cy", String(cy));
  el.setAttribute("r", String(r));
  return el;
}

function rect(x: number, y: number, w: number, h: number): SVGElement {
  const el = document.createElementNS(SVG_NS, "rect");
  el.setAttribute("x", String(x));
  el.setAttribute("y", String(y));
  el.setAttribute("width", String(w));
  el.setAttribute("height", String(h));
  return el;
}

function shrink(a: { x: number; y: number }, b: { x: number; y: number },
                margin: number): { x1: number; y1: number; x2: number; y2: number } {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const d = Math.sqrt(dx * dx + dy * dy) || 1;
  const ux = dx / d;
  const uy = dy / d;
  return {
    x1: a.x + ux * margin,
    y1: a.y + uy * margin,
    x2: b.x - ux * margin,
    y2: b.y - uy * margin,
  };
}
