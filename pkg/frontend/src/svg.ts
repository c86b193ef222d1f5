import { Primitive, RGB, Scene } from "./scene";

function rgb(c: RGB): string {
  return `rgb(${c[0]},${c[1]},${c[2]})`;
}

function pts(points: [number, number][]): string {
  return points.map(([x, y]) => `${round2(x)},${round2(y)}`).join(" ");
}

function round2(v: number): number {
  return Math.round(v * 100) / 100;
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function sceneToSvg(scene: Scene): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${scene.width}" height="${scene.height}" viewBox="0 0 ${scene.width} ${scene.height}">`
  );
  parts.push(`<rect width="${scene.width}" height="${scene.height}" fill="${rgb(scene.background)}"/>`);
  for (const p of scene.prims) {
    parts.push(primToSvg(p));
  }
  parts.push("</svg>");
  return parts.join("\n");
}

function primToSvg(p: Primitive): string {
  switch (p.kind) {
    case "rect":
      return `<rect x="${round2(p.x)}" y="${round2(p.y)}" width="${round2(p.w)}" height="${round2(p.h)}" fill="${rgb(p.color)}" fill-opacity="${p.alpha ?? 1}"/>`;
    case "polygon":
      return `<polygon points="${pts(p.points)}" fill="${rgb(p.color)}" fill-opacity="${p.alpha ?? 1}"/>`;
    case "polyline":
      return `<polyline points="${pts(p.points)}" fill="none" stroke="${rgb(p.color)}" stroke-width="${p.width ?? 1}"/>`;
    case "text": {
      const anchor = p.anchor === "end" ? "end" : p.anchor === "middle" ? "middle" : "start";
      return `<text x="${round2(p.x)}" y="${round2(p.y)}" font-family="sans-serif" font-size="${p.size ?? 11}" fill="${rgb(p.color)}" text-anchor="${anchor}">${esc(p.text)}</text>`;
    }
  }
}
