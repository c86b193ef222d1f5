import { SeriesBand, thin } from "./aggregate";
import { formatTick, linearScale, niceTicks } from "./scale";
import { BLACK, GREY, PALETTE, Primitive, Scene } from "./scene";

export interface ChartOptions {
  width?: number;
  height?: number;
  title?: string;
  xLabel?: string;
  yLabel?: string;
  logY?: boolean;
}

const MARGIN = { left: 70, right: 20, top: 34, bottom: 44 };

/** Regret curves: one mean line per algorithm with a min/max replicate band. */
export function regretChart(series: SeriesBand[], opts: ChartOptions = {}): Scene {
  if (series.length === 0) {
    throw new Error("no series to plot");
  }
  const width = opts.width ?? 900;
  const height = opts.height ?? 520;
  const plotted = series.map((s) => thin(s));
  const logY = opts.logY ?? false;

  let xMin = Infinity, xMax = -Infinity, yMin = Infinity, yMax = -Infinity;
  for (const s of plotted) {
    xMin = Math.min(xMin, s.ts[0]);
    xMax = Math.max(xMax, s.ts[s.ts.length - 1]);
    for (const v of s.lo) yMin = Math.min(yMin, v);
    for (const v of s.hi) yMax = Math.max(yMax, v);
  }
  const yFloor = logY ? Math.max(1e-12, smallestPositive(plotted)) : yMin;
  const ty = (v: number) => (logY ? Math.log10(Math.max(v, yFloor)) : v);
  const y0 = ty(logY ? yFloor : Math.min(0, yMin));
  const y1 = ty(yMax <= y0 ? y0 + 1 : yMax);

  const sx = linearScale([xMin, xMax], [MARGIN.left, width - MARGIN.right]);
  const sy = linearScale([y0, y1], [height - MARGIN.bottom, MARGIN.top]);

  const prims: Primitive[] = [];
  // axes
  prims.push({ kind: "polyline", color: BLACK, width: 1, points: [
    [MARGIN.left, MARGIN.top], [MARGIN.left, height - MARGIN.bottom], [width - MARGIN.right, height - MARGIN.bottom],
  ]});
  for (const t of niceTicks(xMin, xMax)) {
    const px = sx.map(t);
    prims.push({ kind: "polyline", color: GREY, width: 1, points: [[px, height - MARGIN.bottom], [px, height - MARGIN.bottom + 4]] });
    prims.push({ kind: "text", x: px, y: height - MARGIN.bottom + 16, text: formatTick(t), color: BLACK, size: 11, anchor: "middle" });
  }
  const yTicksSrc = logY ? logTicks(yFloor, yMax) : niceTicks(Math.min(0, yMin), yMax);
  for (const t of yTicksSrc) {
    const py = sy.map(ty(t));
    prims.push({ kind: "polyline", color: GREY, width: 1, points: [[MARGIN.left - 4, py], [MARGIN.left, py]] });
    prims.push({ kind: "text", x: MARGIN.left - 8, y: py + 4, text: formatTick(t), color: BLACK, size: 11, anchor: "end" });
  }
  prims.push({ kind: "text", x: (MARGIN.left + width - MARGIN.right) / 2, y: height - 10, text: opts.xLabel ?? "round", color: BLACK, size: 12, anchor: "middle" });
  prims.push({ kind: "text", x: 16, y: MARGIN.top - 12, text: opts.yLabel ?? "", color: BLACK, size: 12, anchor: "start" });
  if (opts.title) {
    prims.push({ kind: "text", x: (MARGIN.left + width - MARGIN.right) / 2, y: 18, text: opts.title, color: BLACK, size: 13, anchor: "middle" });
  }

  plotted.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    if (s.replicates > 1) {
      const band: [number, number][] = [];
      for (let j = 0; j < s.ts.length; j++) band.push([sx.map(s.ts[j]), sy.map(ty(s.hi[j]))]);
      for (let j = s.ts.length - 1; j >= 0; j--) band.push([sx.map(s.ts[j]), sy.map(ty(s.lo[j]))]);
      prims.push({ kind: "polygon", points: band, color, alpha: 0.18 });
    }
    prims.push({
      kind: "polyline",
      width: 2,
      color,
      points: s.ts.map((t, j) => [sx.map(t), sy.map(ty(s.mean[j]))] as [number, number]),
    });
    // legend entry
    const lx = MARGIN.left + 12;
    const lyy = MARGIN.top + 8 + i * 16;
    prims.push({ kind: "polyline", width: 3, color, points: [[lx, lyy], [lx + 22, lyy]] });
    prims.push({ kind: "text", x: lx + 28, y: lyy + 4, text: `${s.label} (final ${formatTick(s.mean[s.mean.length - 1])})`, color: BLACK, size: 11, anchor: "start" });
  });

  return { width, height, background: [255, 255, 255], prims };
}

/** Raster of restart events: one lane per (algo, replicate), a tick per event. */
export function restartRaster(
  events: Map<string, { replicate: number; t: number }[]>,
  horizon: number,
  opts: ChartOptions = {}
): Scene {
  const lanes: { label: string; color: number; events: number[] }[] = [];
  let algoIdx = 0;
  for (const [algo, evs] of [...events.entries()].sort()) {
    const reps = [...new Set(evs.map((e) => e.replicate))].sort((a, b) => a - b);
    for (const r of reps) {
      lanes.push({
        label: `${algo} r${r}`,
        color: algoIdx,
        events: evs.filter((e) => e.replicate === r).map((e) => e.t),
      });
    }
    algoIdx += 1;
  }
  const width = opts.width ?? 900;
  const laneH = 18;
  const height = MARGIN.top + Math.max(1, lanes.length) * laneH + MARGIN.bottom;
  const sx = linearScale([1, horizon], [MARGIN.left + 90, width - MARGIN.right]);
  const prims: Primitive[] = [];
  if (opts.title) {
    prims.push({ kind: "text", x: width / 2, y: 18, text: opts.title, color: BLACK, size: 13, anchor: "middle" });
  }
  lanes.forEach((lane, i) => {
    const y = MARGIN.top + i * laneH + laneH / 2;
    const color = PALETTE[lane.color % PALETTE.length];
    prims.push({ kind: "text", x: MARGIN.left + 84, y: y + 4, text: lane.label, color: BLACK, size: 10, anchor: "end" });
    prims.push({ kind: "polyline", width: 1, color: GREY, points: [[sx.map(1), y], [sx.map(horizon), y]] });
    for (const t of lane.events) {
      prims.push({ kind: "polyline", width: 2, color, points: [[sx.map(t), y - 6], [sx.map(t), y + 6]] });
    }
  });
  for (const t of niceTicks(1, horizon)) {
    prims.push({ kind: "text", x: sx.map(t), y: height - MARGIN.bottom + 16, text: formatTick(t), color: BLACK, size: 11, anchor: "middle" });
  }
  return { width, height, background: [255, 255, 255], prims };
}

/** Plain table image: one row per algorithm with final metric statistics. */
export function summaryTable(rowsIn: { label: string; cells: string[] }[], header: string[], opts: ChartOptions = {}): Scene {
  const width = opts.width ?? 760;
  const rowH = 22;
  const height = 40 + (rowsIn.length + 1) * rowH + 20;
  const cols = header.length;
  const colW = (width - 40) / cols;
  const prims: Primitive[] = [];
  if (opts.title) {
    prims.push({ kind: "text", x: width / 2, y: 22, text: opts.title, color: BLACK, size: 13, anchor: "middle" });
  }
  header.forEach((h, c) => {
    prims.push({ kind: "text", x: 20 + c * colW, y: 52, text: h, color: BLACK, size: 11, anchor: "start" });
  });
  prims.push({ kind: "polyline", width: 1, color: BLACK, points: [[20, 58], [width - 20, 58]] });
  rowsIn.forEach((row, r) => {
    const y = 58 + (r + 1) * rowH;
    [row.label, ...row.cells].forEach((cell, c) => {
      prims.push({ kind: "text", x: 20 + c * colW, y, text: cell, color: BLACK, size: 11, anchor: "start" });
    });
  });
  return { width, height, background: [255, 255, 255], prims };
}

function smallestPositive(series: SeriesBand[]): number {
  let out = Infinity;
  for (const s of series) {
    for (const v of s.lo) {
      if (v > 0) out = Math.min(out, v);
    }
  }
  return Number.isFinite(out) ? out : 1e-12;
}

function logTicks(lo: number, hi: number): number[] {
  const out: number[] = [];
  for (let e = Math.floor(Math.log10(lo)); e <= Math.ceil(Math.log10(hi)); e++) {
    const v = Math.pow(10, e);
    if (v >= lo / 10 && v <= hi * 1.0001) out.push(v);
  }
  return out.length > 0 ? out : [lo, hi];
}
