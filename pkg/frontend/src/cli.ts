#!/usr/bin/env node
/** plot --csv <glob> --metric cum_expected --out fig.png [--mode curves|restarts|summary] [--log-y] */

import { plotRegret, PlotSpec } from "./index";

function parseArgs(argv: string[]): PlotSpec {
  const args = [...argv];
  if (args[0] === "plot") {
    args.shift(); // both `plot ...` and bare flags are accepted
  }
  const spec: Partial<PlotSpec> = { metric: "cum_expected", mode: "curves" };
  while (args.length > 0) {
    const flag = args.shift()!;
    const need = (): string => {
      const v = args.shift();
      if (v === undefined) {
        throw new Error(`flag ${flag} needs a value`);
      }
      return v;
    };
    switch (flag) {
      case "--csv": spec.csv = need(); break;
      case "--metric": spec.metric = need(); break;
      case "--out": spec.out = need(); break;
      case "--mode": spec.mode = need() as PlotSpec["mode"]; break;
      case "--title": spec.title = need(); break;
      case "--width": spec.width = Number(need()); break;
      case "--height": spec.height = Number(need()); break;
      case "--log-y": spec.logY = true; break;
      case "--help":
      case "-h":
        console.log("usage: plot --csv <glob> --metric cum_expected --out fig.png [--mode curves|restarts|summary] [--log-y] [--title t] [--width w] [--height h]");
        process.exit(0);
        break;
      default:
        throw new Error(`unknown flag ${flag}`);
    }
  }
  if (!spec.csv || !spec.out) {
    throw new Error("--csv and --out are required");
  }
  return spec as PlotSpec;
}

function main(): void {
  try {
    const spec = parseArgs(process.argv.slice(2));
    const result = plotRegret(spec);
    for (const [algo, v] of result.finalValues) {
      console.log(`${algo}: final ${spec.metric} = ${v}`);
    }
    console.log(`wrote ${result.out}`);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    process.exit(1);
  }
}

main();
