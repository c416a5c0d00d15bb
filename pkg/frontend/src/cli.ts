#!/usr/bin/env node
/**
 * Figure generation from benchmark CSVs.
 *
 *   intevo-figures loglog    --in c5_summary.csv,c6_summary.csv --out fig.svg
 *   intevo-figures box       --in c5_results.csv --out box.svg
 *   intevo-figures summarize --in results.csv [--out summary.csv]
 */

import { writeFileSync } from "node:fs";

import { plotBox } from "./boxplot.js";
import { readResultsCsv } from "./csv.js";
import { plotLoglog } from "./loglog.js";
import { summarize, summaryToCsv } from "./summary.js";

const USAGE = "usage: intevo-figures <loglog|box|summarize> --in <csv[,csv...]> [--out <path>] [--expect <series[,series...]>]";

interface Args {
  kind: string;
  inputs: string[];
  out?: string;
  expect?: string[];
}

function parseArgs(argv: string[]): Args {
  const [kind, ...rest] = argv;
  if (!kind) throw new Error(USAGE);
  const args: Args = { kind, inputs: [] };
  for (let i = 0; i < rest.length; i += 2) {
    const flag = rest[i];
    const value = rest[i + 1];
    if (value === undefined) throw new Error(`${flag} needs a value\n${USAGE}`);
    if (flag === "--in") args.inputs = value.split(",");
    else if (flag === "--out") args.out = value;
    else if (flag === "--expect") args.expect = value.split(",");
    else throw new Error(`unknown flag ${flag}\n${USAGE}`);
  }
  if (args.inputs.length === 0) throw new Error(`--in is required\n${USAGE}`);
  return args;
}

export function runCli(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error((err as Error).message);
    return 1;
  }
  try {
    if (args.kind === "loglog") {
      if (!args.out) throw new Error(`loglog needs --out\n${USAGE}`);
      const out = plotLoglog({
        inputs: args.inputs, kind: "loglog_comparison", output: args.out,
        expectSeries: args.expect,
      });
      console.log(`wrote ${out}`);
    } else if (args.kind === "box") {
      if (!args.out) throw new Error(`box needs --out\n${USAGE}`);
      const res = plotBox({ inputs: args.inputs, kind: "boxplot", output: args.out });
      console.log(`wrote ${res.output}`);
    } else if (args.kind === "summarize") {
      const rows = args.inputs.flatMap((p) => readResultsCsv(p));
      const csv = summaryToCsv(summarize(rows));
      if (args.out) {
        writeFileSync(args.out, csv);
        console.log(`wrote ${args.out}`);
      } else {
        process.stdout.write(csv);
      }
    } else {
      throw new Error(`unknown figure kind ${args.kind}\n${USAGE}`);
    }
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  return 0;
}

const isMain = process.argv[1]?.endsWith("cli.js") || process.argv[1]?.endsWith("cli.ts");
if (isMain) {
  process.exit(runCli(process.argv.slice(2)));
}
