import * as fs from "fs";
import * as os from "os";
import * as path from "path";
import { PNG } from "pngjs";
import { describe, expect, it } from "vitest";

import { aggregateMetric } from "../src/aggregate";
import { parseLedgerCsv } from "../src/csv";
import { regretChart, restartRaster, summaryTable } from "../src/chart";
import { plotRegret } from "../src/index";
import { niceTicks, formatTick } from "../src/scale";
import { sceneToPng } from "../src/raster";
import { sceneToSvg } from "../src/svg";

const HEADER = "t,algo,replicate,expected_regret,realized_regret,cum_expected,cum_realized,restarts,oracle_calls";

function makeCsvDir(): string {
  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "plots-"));
  for (const [algo, slope] of [["fast", 0.01], ["slow", 0.05]] as const) {
    for (const rep of [0, 1]) {
      const lines = [HEADER];
      let cum = 0;
      for (let t = 1; t <= 300; t++) {
        const e = slope * (1 + 0.1 * rep) * Math.exp(-t / 200);
        cum += e;
        const restarts = t >= 150 ? 1 : 0;
        lines.push(`${t},${algo},${rep},${e},${e},${cum},${cum},${restarts},${t}`);
      }
      fs.writeFileSync(path.join(dir, `${algo}__r${rep}.csv`), lines.join("\n") + "\n");
    }
  }
  return dir;
}

describe("scale", () => {
  it("produces 1/2/5 ticks covering the domain", () => {
    expect(niceTicks(0, 10)).toEqual([0, 2, 4, 6, 8, 10]);
    expect(niceTicks(0, 40000)).toContain(20000);
    expect(formatTick(20000)).toBe("20000");
    expect(formatTick(0.25)).toBe("0.25");
  });
});

describe("svg rendering", () => {
  it("emits one polyline per series plus axes and a band polygon", () => {
    const csv = makeCsvDir();
    const rows = parseLedgerCsv(fs.readFileSync(path.join(csv, "fast__r0.csv"), "utf-8"));
    rows.push(...parseLedgerCsv(fs.readFileSync(path.join(csv, "fast__r1.csv"), "utf-8")));
    const series = aggregateMetric(rows, "cum_expected");
    const svg = sceneToSvg(regretChart(series, { title: "demo" }));
    expect(svg).toContain("<svg");
    expect(svg).toContain("<polygon");
    expect((svg.match(/<polyline/g) ?? []).length).toBeGreaterThan(1);
    expect(svg).toContain("demo");
  });
});

describe("png rendering", () => {
  it("writes a decodable PNG with painted pixels", () => {
    const scene = summaryTable(
      [{ label: "algo-a", cells: ["2", "1.5", "1.0", "2.0"] }],
      ["algo", "replicates", "mean", "min", "max"],
      { title: "summary" }
    );
    const buf = sceneToPng(scene);
    expect(buf.subarray(0, 8)).toEqual(Buffer.from([137, 80, 78, 71, 13, 10, 26, 10]));
    const decoded = PNG.sync.read(buf);
    expect(decoded.width).toBe(scene.width);
    let dark = 0;
    for (let i = 0; i < decoded.data.length; i += 4) {
      if (decoded.data[i] < 128) dark += 1;
    }
    expect(dark).toBeGreaterThan(50); // text pixels present
  });
});

describe("plotRegret end to end", () => {
  it("renders curves and reports finals equal to recomputed sums exactly", () => {
    const dir = makeCsvDir();
    const out = path.join(dir, "fig.png");
    const result = plotRegret({ csv: path.join(dir, "*.csv"), metric: "cum_expected", out });
    expect(fs.existsSync(out)).toBe(true);
    for (const algo of ["fast", "slow"]) {
      let total = 0;
      for (const rep of [0, 1]) {
        const rows = parseLedgerCsv(fs.readFileSync(path.join(dir, `${algo}__r${rep}.csv`), "utf-8"));
        let sum = 0;
        for (const row of rows) sum += row.expected_regret as number;
        total += sum;
      }
      expect(result.finalValues.get(algo)).toBe(total / 2);
    }
  });

  it("renders svg, restart rasters and summary tables", () => {
    const dir = makeCsvDir();
    for (const [mode, name] of [["curves", "c.svg"], ["restarts", "r.png"], ["summary", "s.png"]] as const) {
      const out = path.join(dir, name);
      plotRegret({ csv: path.join(dir, "*.csv"), metric: "cum_expected", out, mode });
      expect(fs.existsSync(out)).toBe(true);
    }
  });

  it("errors out on a missing metric column", () => {
    const dir = makeCsvDir();
    expect(() =>
      plotRegret({ csv: path.join(dir, "*.csv"), metric: "bogus", out: path.join(dir, "x.png") })
    ).toThrow(/metric column 'bogus' not found/);
  });
});

describe("criterion-7 integration", () => {
  const resultsDir = path.join(__dirname, "..", "..", "results", "criterion7");
  const available = fs.existsSync(resultsDir) && fs.readdirSync(resultsDir).some((f) => f.endsWith("__r0.csv"));

  it.skipIf(!available)("plotted final values equal the CSV sums exactly", { timeout: 180_000 }, () => {
    const out = path.join(resultsDir, "regret_curves.png");
    const result = plotRegret({
      csv: path.join(resultsDir, "*__r*.csv"),
      metric: "cum_expected",
      out,
      title: "cumulative expected dynamic regret",
    });
    expect(fs.existsSync(out)).toBe(true);
    const byAlgo = new Map<string, number[]>();
    const files = fs.readdirSync(resultsDir).filter((f) => /__r\d+\.csv$/.test(f)).sort();
    for (const file of files) {
      const rows = parseLedgerCsv(fs.readFileSync(path.join(resultsDir, file), "utf-8"), file);
      let sum = 0;
      for (const row of rows) sum += row.expected_regret as number;
      const algo = rows[0].algo;
      if (!byAlgo.has(algo)) byAlgo.set(algo, []);
      byAlgo.get(algo)!.push(sum);
    }
    for (const [algo, sums] of byAlgo) {
      const expected = sums.reduce((a, b) => a + b, 0) / sums.length;
      expect(result.finalValues.get(algo)).toBe(expected);
    }
  });
});
