import * as fs from "fs";
import * as path from "path";

import { aggregateMetric, finals, restartEvents, SeriesBand } from "./aggregate";
import { loadLedgers, requireColumn } from "./csv";
import { regretChart, restartRaster, summaryTable, ChartOptions } from "./chart";
import { Scene } from "./scene";
import { sceneToPng } from "./raster";
import { sceneToSvg } from "./svg";

export * from "./aggregate";
export * from "./csv";
export * from "./chart";
export * from "./scene";
export { sceneToPng } from "./raster";
export { sceneToSvg } from "./svg";

export interface PlotSpec {
  csv: string; // glob over ledger CSVs
  metric: string;
  out: string; // .png or .svg
  mode?: "curves" | "restarts" | "summary";
  logY?: boolean;
  width?: number;
  height?: number;
  title?: string;
}

export interface PlotResult {
  out: string;
  /** final plotted mean value per algorithm (curves mode) */
  finalValues: Map<string, number>;
  series: SeriesBand[];
}

export function plotRegret(spec: PlotSpec): PlotResult {
  const rows = loadLedgers(spec.csv);
  requireColumn(rows, spec.metric, spec.csv);
  const opts: ChartOptions = {
    width: spec.width,
    height: spec.height,
    logY: spec.logY,
    title: spec.title,
    yLabel: spec.metric,
  };
  let scene: Scene;
  const series = aggregateMetric(rows, spec.metric);
  const finalValues = new Map<string, number>();
  for (const s of series) {
    finalValues.set(s.label, s.mean[s.mean.length - 1]);
  }
  const mode = spec.mode ?? "curves";
  if (mode === "curves") {
    scene = regretChart(series, opts);
  } else if (mode === "restarts") {
    requireColumn(rows, "restarts", spec.csv);
    const horizon = Math.max(...rows.map((r) => r.t));
    scene = restartRaster(restartEvents(rows), horizon, { ...opts, title: spec.title ?? "restart events" });
  } else if (mode === "summary") {
    const f = finals(rows, spec.metric);
    const tableRows = [...f.entries()].map(([label, vals]) => ({
      label,
      cells: [
        String(vals.length),
        fmt(mean(vals)),
        fmt(Math.min(...vals)),
        fmt(Math.max(...vals)),
      ],
    }));
    scene = summaryTable(tableRows, ["algo", "replicates", `mean ${spec.metric}`, "min", "max"], {
      ...opts,
      title: spec.title ?? `final ${spec.metric} by algorithm`,
    });
  } else {
    throw new Error(`unknown mode '${mode}'`);
  }
  writeScene(scene, spec.out);
  return { out: spec.out, finalValues, series };
}

export function writeScene(scene: Scene, out: string): void {
  const dir = path.dirname(out);
  if (dir && dir !== "." && !fs.existsSync(dir)) {
    fs.mkdirSync(dir, { recursive: true });
  }
  if (out.endsWith(".svg")) {
    fs.writeFileSync(out, sceneToSvg(scene));
  } else if (out.endsWith(".png")) {
    fs.writeFileSync(out, sceneToPng(scene));
  } else {
    throw new Error(`unsupported output extension: ${out} (use .png or .svg)`);
  }
}

function mean(xs: number[]): number {
  return xs.reduce((a, b) => a + b, 0) / xs.length;
}

function fmt(v: number): string {
  return Math.abs(v) >= 100 ? v.toFixed(1) : v.toPrecision(4);
}
