import { LedgerRow } from "./csv";

/** Mean curve plus min/max band of one metric across replicates. */
export interface SeriesBand {
  label: string;
  ts: number[];
  mean: number[];
  lo: number[];
  hi: number[];
  replicates: number;
}

export function aggregateMetric(rows: LedgerRow[], metric: string): SeriesBand[] {
  const byAlgo = new Map<string, Map<number, number[]>>();
  for (const row of rows) {
    const v = row[metric];
    if (typeof v !== "number" || Number.isNaN(v)) {
      throw new Error(`metric '${metric}' is not numeric in row t=${row.t} algo=${row.algo}`);
    }
    let perT = byAlgo.get(row.algo);
    if (!perT) {
      perT = new Map();
      byAlgo.set(row.algo, perT);
    }
    let vals = perT.get(row.t);
    if (!vals) {
      vals = [];
      perT.set(row.t, vals);
    }
    vals.push(v);
  }
  const out: SeriesBand[] = [];
  for (const [label, perT] of [...byAlgo.entries()].sort()) {
    const ts = [...perT.keys()].sort((a, b) => a - b);
    const mean: number[] = [];
    const lo: number[] = [];
    const hi: number[] = [];
    let reps = 0;
    for (const t of ts) {
      const vals = perT.get(t)!;
      reps = Math.max(reps, vals.length);
      mean.push(vals.reduce((a, b) => a + b, 0) / vals.length);
      lo.push(Math.min(...vals));
      hi.push(Math.max(...vals));
    }
    out.push({ label, ts, mean, lo, hi, replicates: reps });
  }
  return out;
}

/**
 * Thin a series for drawing.  The first and last points are always kept, so
 * the plotted final value stays exactly the aggregated final value.
 */
export function thin(series: SeriesBand, maxPoints = 2000): SeriesBand {
  const n = series.ts.length;
  if (n <= maxPoints) {
    return series;
  }
  const idx: number[] = [];
  const stride = (n - 1) / (maxPoints - 1);
  for (let i = 0; i < maxPoints; i++) {
    idx.push(Math.round(i * stride));
  }
  idx[maxPoints - 1] = n - 1;
  const pick = (xs: number[]) => idx.map((i) => xs[i]);
  return {
    label: series.label,
    ts: pick(series.ts),
    mean: pick(series.mean),
    lo: pick(series.lo),
    hi: pick(series.hi),
    replicates: series.replicates,
  };
}

/** Restart events: rounds where the cumulative restart counter increments. */
export function restartEvents(rows: LedgerRow[]): Map<string, { replicate: number; t: number }[]> {
  const sorted = [...rows].sort(
    (a, b) => a.algo.localeCompare(b.algo) || a.replicate - b.replicate || a.t - b.t
  );
  const out = new Map<string, { replicate: number; t: number }[]>();
  let prevKey = "";
  let prevCount = 0;
  for (const row of sorted) {
    const key = `${row.algo}#${row.replicate}`;
    const count = row.restarts as number;
    if (key !== prevKey) {
      prevKey = key;
      prevCount = 0;
    }
    if (count > prevCount) {
      if (!out.has(row.algo)) {
        out.set(row.algo, []);
      }
      out.get(row.algo)!.push({ replicate: row.replicate, t: row.t });
    }
    prevCount = count;
  }
  return out;
}

/** Final value of a metric per (algo, replicate), for summary tables. */
export function finals(rows: LedgerRow[], metric: string): Map<string, number[]> {
  const latest = new Map<string, { t: number; v: number }>();
  for (const row of rows) {
    const key = `${row.algo}#${row.replicate}`;
    const cur = latest.get(key);
    if (!cur || row.t > cur.t) {
      latest.set(key, { t: row.t, v: row[metric] as number });
    }
  }
  const out = new Map<string, number[]>();
  for (const [key, { v }] of [...latest.entries()].sort()) {
    const algo = key.split("#")[0];
    if (!out.has(algo)) {
      out.set(algo, []);
    }
    out.get(algo)!.push(v);
  }
  return out;
}
