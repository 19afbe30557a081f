// Vertex placement. Builder coordinates win when the seed carries them
// (grid quivers, minor triangles); otherwise a small deterministic
// force-directed pass spreads the vertices out.

import type { SeedJson } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export function layoutPositions(seed: SeedJson, width: number, height: number,
                                padding = 48): Point[] {
  const raw = seed.layout && seed.layout.length === seed.n
    ? seed.layout.map(([x, y]) => ({ x, y }))
    : forceLayout(seed);
  return fit(raw, width, height, padding);
}

function fit(points: Point[], width: number, height: number, padding: number): Point[] {
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  return points.map((p) => ({
    x: padding + ((p.x - minX) / spanX) * (width - 2 * padding),
    y: padding + ((p.y - minY) / spanY) * (height - 2 * padding),
  }));
}

function forceLayout(seed: SeedJson, iterations = 120): Point[] {
  const n = seed.n;
  // Deterministic start: evenly spaced on a circle.
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n;
    points.push({ x: Math.cos(angle), y: Math.sin(angle) });
  }
  if (n <= 2) {
    return points;
  }
  const springs = seed.arrows.map(([src, dst]) => [src - 1, dst - 1] as const);
  for (let step = 0; step < iterations; step++) {
    const force = points.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = points[i].x - points[j].x;
        const dy = points[i].y - points[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-6);
        const push = 0.05 / d2;
        force[i].x += dx * push;
        force[i].y += dy * push;
        force[j].x -= dx * push;
        force[j].y -= dy * push;
      }
    }
    for (const [a, b] of springs) {
      const dx = points[b].x - points[a].x;
      const dy = points[b].y - points[a].y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1e-3;
      const pull = 0.08 * (d - 1);
      force[a].x += (dx / d) * pull;
      force[a].y += (dy / d) * pull;
      force[b].x -= (dx / d) * pull;
      force[b].y -= (dy / d) * pull;
    }
    const cool = 1 - step / iterations;
    for (let i = 0; i < n; i++) {
      points[i].x += force[i].x * cool;
      points[i].y += force[i].y * cool;
    }
  }
  return points;
}
