import * as fs from "fs";
import * as os from "os";
import * as path from "path";
import { describe, expect, it } from "vitest";

import { expandGlob, parseLedgerCsv, requireColumn } from "../src/csv";

const HEADER = "t,algo,replicate,expected_regret,realized_regret,cum_expected,cum_realized,restarts,oracle_calls";

function sampleCsv(algo = "demo", replicate = 0, rounds = 4): string {
  const lines = [HEADER];
  let cum = 0;
  for (let t = 1; t <= rounds; t++) {
    const e = 0.125 * t;
    cum += e;
    lines.push(`${t},${algo},${replicate},${e},${e},${cum},${cum},0,0`);
  }
  return lines.join("\n");
}

describe("parseLedgerCsv", () => {
  it("parses the harness schema with float64 roundtrip", () => {
    const rows = parseLedgerCsv(sampleCsv());
    expect(rows).toHaveLength(4);
    expect(rows[0].algo).toBe("demo");
    expect(rows[0].t).toBe(1);
    expect(rows[3].cum_expected).toBeCloseTo(1.25, 12);
  });

  it("keeps 17-significant-digit values exactly", () => {
    const v = "0.47835923964051141";
    const csv = `${HEADER}\n1,x,0,${v},1,${v},1,0,0`;
    const rows = parseLedgerCsv(csv);
    expect(rows[0].expected_regret).toBe(Number(v));
  });

  it("rejects a missing required column", () => {
    expect(() => parseLedgerCsv("a,b\n1,2")).toThrow(/missing required column/);
  });
});

describe("requireColumn", () => {
  it("gives a descriptive error for a missing metric", () => {
    const rows = parseLedgerCsv(sampleCsv());
    expect(() => requireColumn(rows, "nope")).toThrow(/metric column 'nope' not found/);
    expect(() => requireColumn([], "cum_expected")).toThrow(/no data rows/);
  });
});

describe("expandGlob", () => {
  it("matches star patterns within one directory", () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), "plots-"));
    for (const name of ["a__r0.csv", "a__r1.csv", "summary.csv", "b.txt"]) {
      fs.writeFileSync(path.join(dir, name), "x");
    }
    const hits = expandGlob(path.join(dir, "*.csv"));
    expect(hits.map((h) => path.basename(h))).toEqual(["a__r0.csv", "a__r1.csv", "summary.csv"]);
    expect(expandGlob(path.join(dir, "a__r0.csv"))).toHaveLength(1);
  });
});
