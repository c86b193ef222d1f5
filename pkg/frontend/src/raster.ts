import { PNG } from "pngjs";

import { GLYPH_H, GLYPH_W, glyph, textWidth } from "./font";
import { Primitive, RGB, Scene } from "./scene";

/** Paint a scene into an RGBA buffer and encode it as PNG. */
export function sceneToPng(scene: Scene): Buffer {
  const png = new PNG({ width: scene.width, height: scene.height });
  fillRect(png, 0, 0, scene.width, scene.height, scene.background, 1);
  for (const p of scene.prims) {
    paint(png, p);
  }
  return PNG.sync.write(png);
}

function paint(png: PNG, p: Primitive): void {
  switch (p.kind) {
    case "rect":
      fillRect(png, p.x, p.y, p.w, p.h, p.color, p.alpha ?? 1);
      return;
    case "polygon":
      fillPolygon(png, p.points, p.color, p.alpha ?? 1);
      return;
    case "polyline": {
      const w = p.width ?? 1;
      for (let i = 1; i < p.points.length; i++) {
        drawLine(png, p.points[i - 1], p.points[i], p.color, w);
      }
      return;
    }
    case "text":
      drawText(png, p.x, p.y, p.text, p.color, p.anchor ?? "start");
      return;
  }
}

function blend(png: PNG, x: number, y: number, c: RGB, alpha: number): void {
  if (x < 0 || y < 0 || x >= png.width || y >= png.height) {
    return;
  }
  const i = (png.width * y + x) << 2;
  png.data[i] = Math.round(alpha * c[0] + (1 - alpha) * png.data[i]);
  png.data[i + 1] = Math.round(alpha * c[1] + (1 - alpha) * png.data[i + 1]);
  png.data[i + 2] = Math.round(alpha * c[2] + (1 - alpha) * png.data[i + 2]);
  png.data[i + 3] = 255;
}

function fillRect(png: PNG, x: number, y: number, w: number, h: number, c: RGB, alpha: number): void {
  const x0 = Math.max(0, Math.round(x));
  const y0 = Math.max(0, Math.round(y));
  const x1 = Math.min(png.width, Math.round(x + w));
  const y1 = Math.min(png.height, Math.round(y + h));
  for (let yy = y0; yy < y1; yy++) {
    for (let xx = x0; xx < x1; xx++) {
      blend(png, xx, yy, c, alpha);
    }
  }
}

/** Even-odd scanline fill; fine for the x-monotone confidence bands. */
function fillPolygon(png: PNG, points: [number, number][], c: RGB, alpha: number): void {
  if (points.length < 3) {
    return;
  }
  let yMin = Infinity, yMax = -Infinity;
  for (const [, y] of points) {
    yMin = Math.min(yMin, y);
    yMax = Math.max(yMax, y);
  }
  const y0 = Math.max(0, Math.floor(yMin));
  const y1 = Math.min(png.height - 1, Math.ceil(yMax));
  for (let yy = y0; yy <= y1; yy++) {
    const xs: number[] = [];
    const sy = yy + 0.5;
    for (let i = 0; i < points.length; i++) {
      const [xA, yA] = points[i];
      const [xB, yB] = points[(i + 1) % points.length];
      if (yA <= sy !== yB <= sy) {
        xs.push(xA + ((sy - yA) / (yB - yA)) * (xB - xA));
      }
    }
    xs.sort((a, b) => a - b);
    for (let k = 0; k + 1 < xs.length; k += 2) {
      const xa = Math.max(0, Math.round(xs[k]));
      const xb = Math.min(png.width - 1, Math.round(xs[k + 1]));
      for (let xx = xa; xx <= xb; xx++) {
        blend(png, xx, yy, c, alpha);
      }
    }
  }
}

function drawLine(png: PNG, a: [number, number], b: [number, number], c: RGB, width: number): void {
  let x0 = Math.round(a[0]), y0 = Math.round(a[1]);
  const x1 = Math.round(b[0]), y1 = Math.round(b[1]);
  const dx = Math.abs(x1 - x0), dy = -Math.abs(y1 - y0);
  const sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
  let err = dx + dy;
  const r = Math.max(0, Math.floor(width / 2));
  for (;;) {
    for (let ox = -r; ox <= r; ox++) {
      for (let oy = -r; oy <= r; oy++) {
        blend(png, x0 + ox, y0 + oy, c, 1);
      }
    }
    if (x0 === x1 && y0 === y1) break;
    const e2 = 2 * err;
    if (e2 >= dy) { err += dy; x0 += sx; }
    if (e2 <= dx) { err += dx; y0 += sy; }
  }
}

function drawText(png: PNG, x: number, y: number, text: string, c: RGB, anchor: "start" | "middle" | "end"): void {
  const w = textWidth(text);
  let px = Math.round(anchor === "middle" ? x - w / 2 : anchor === "end" ? x - w : x);
  const py = Math.round(y) - GLYPH_H; // the y coordinate is the text baseline
  for (const ch of text) {
    const g = glyph(ch);
    for (let r = 0; r < GLYPH_H; r++) {
      for (let col = 0; col < GLYPH_W; col++) {
        if (g[r][col] === "1") {
          blend(png, px + col, py + r, c, 1);
        }
      }
    }
    px += GLYPH_W + 1;
  }
}
