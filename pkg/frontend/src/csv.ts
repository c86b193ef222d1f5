import * as fs from "fs";
import * as path from "path";
import Papa from "papaparse";

/** One parsed ledger row; numeric columns are kept as float64. */
export interface LedgerRow {
  t: number;
  algo: string;
  replicate: number;
  [column: string]: number | string;
}

export const REQUIRED_COLUMNS = ["t", "algo", "replicate"];

export function parseLedgerCsv(content: string, source = "<memory>"): LedgerRow[] {
  const parsed = Papa.parse<Record<string, string>>(content.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new Error(`${source}: CSV parse error at row ${e.row}: ${e.message}`);
  }
  const fields = parsed.meta.fields ?? [];
  for (const col of REQUIRED_COLUMNS) {
    if (!fields.includes(col)) {
      throw new Error(`${source}: missing required column '${col}' (header: ${fields.join(",")})`);
    }
  }
  return parsed.data.map((raw) => {
    const row: LedgerRow = { t: Number(raw.t), algo: raw.algo, replicate: Number(raw.replicate) };
    for (const f of fields) {
      if (f === "algo") continue;
      row[f] = Number(raw[f]);
    }
    return row;
  });
}

export function requireColumn(rows: LedgerRow[], metric: string, source = "<csv>"): void {
  if (rows.length === 0) {
    throw new Error(`${source}: no data rows`);
  }
  if (!(metric in rows[0])) {
    const cols = Object.keys(rows[0]).join(",");
    throw new Error(`${source}: metric column '${metric}' not found (have: ${cols})`);
  }
}

/** Minimal glob: literal path, or one directory whose basename may contain '*'. */
export function expandGlob(pattern: string): string[] {
  if (!pattern.includes("*")) {
    return [pattern];
  }
  const dir = path.dirname(pattern);
  const base = path.basename(pattern);
  const regex = new RegExp(
    "^" + base.split("*").map(escapeRegex).join(".*") + "$"
  );
  if (!fs.existsSync(dir)) {
    return [];
  }
  return fs
    .readdirSync(dir)
    .filter((name) => regex.test(name))
    .sort()
    .map((name) => path.join(dir, name));
}

function escapeRegex(s: string): string {
  return s.replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
}

export function loadLedgers(pattern: string): LedgerRow[] {
  const files = expandGlob(pattern).filter((f) => f.endsWith(".csv") && !f.endsWith("summary.csv"));
  if (files.length === 0) {
    throw new Error(`no CSV files match '${pattern}'`);
  }
  const rows: LedgerRow[] = [];
  for (const file of files) {
    rows.push(...parseLedgerCsv(fs.readFileSync(file, "utf-8"), file));
  }
  return rows;
}
