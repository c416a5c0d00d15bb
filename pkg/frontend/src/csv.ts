/**
 * Readers for the two CSV schemas the benchmark harness emits.
 *
 * Headers are validated verbatim; a schema drift should fail loudly here
 * rather than render a wrong figure.
 */

import { readFileSync } from "node:fs";

export const RESULTS_HEADER = [
  "algorithm", "n", "r", "param1", "param2", "seed", "evaluations", "success", "wall_time_s",
] as const;

export const SUMMARY_HEADER = [
  "algorithm", "n", "r", "count", "mean", "q1", "median", "q3",
  "whisker_low", "whisker_high", "outliers", "failure_rate",
] as const;

export interface TrialRow {
  algorithm: string;
  n: number;
  r: number;
  param1: number;
  param2: number;
  /** kept as text: 64-bit seeds do not fit a double exactly */
  seed: string;
  evaluations: number;
  success: boolean;
  wallTimeS: number;
}

export interface SummaryRow {
  algorithm: string;
  n: number;
  r: number;
  count: number;
  mean: number;
  q1: number;
  median: number;
  q3: number;
  whiskerLow: number;
  whiskerHigh: number;
  outliers: number;
  failureRate: number;
}

function splitCsv(text: string, expected: readonly string[], source: string): string[][] {
  const lines = text.split("\n");
  const header = (lines.shift() ?? "").trim();
  if (header !== expected.join(",")) {
    throw new Error(`${source}: unexpected header ${JSON.stringify(header)}`);
  }
  const rows: string[][] = [];
  for (const raw of lines) {
    const line = raw.trim();
    if (!line) continue;
    const parts = line.split(",");
    if (parts.length !== expected.length) {
      throw new Error(`${source}: malformed row ${JSON.stringify(line)}`);
    }
    rows.push(parts);
  }
  return rows;
}

function num(text: string, source: string): number {
  const v = Number(text);
  if (Number.isNaN(v)) throw new Error(`${source}: not a number: ${JSON.stringify(text)}`);
  return v;
}

export function parseResultsCsv(text: string, source = "<results>"): TrialRow[] {
  return splitCsv(text, RESULTS_HEADER, source).map((p) => ({
    algorithm: p[0],
    n: num(p[1], source),
    r: num(p[2], source),
    param1: num(p[3], source),
    param2: num(p[4], source),
    seed: p[5],
    evaluations: num(p[6], source),
    success: p[7] === "true",
    wallTimeS: num(p[8], source),
  }));
}

export function parseSummaryCsv(text: string, source = "<summary>"): SummaryRow[] {
  return splitCsv(text, SUMMARY_HEADER, source).map((p) => ({
    algorithm: p[0],
    n: num(p[1], source),
    r: num(p[2], source),
    count: num(p[3], source),
    mean: num(p[4], source),
    q1: num(p[5], source),
    median: num(p[6], source),
    q3: num(p[7], source),
    whiskerLow: num(p[8], source),
    whiskerHigh: num(p[9], source),
    outliers: num(p[10], source),
    failureRate: num(p[11], source),
  }));
}

export function readResultsCsv(path: string): TrialRow[] {
  return parseResultsCsv(readFileSync(path, "utf8"), path);
}

export function readSummaryCsv(path: string): SummaryRow[] {
  return parseSummaryCsv(readFileSync(path, "utf8"), path);
}
