/**
 * The harness summarize step, reimplemented for CSV byte parity.
 */

import { SUMMARY_HEADER, SummaryRow, TrialRow } from "./csv.js";
import { formatNumber } from "./format.js";
import { boxStats } from "./stats.js";

function groupKey(t: TrialRow): string {
  return JSON.stringify([t.algorithm, t.n, t.r]);
}

function compareKeys(a: [string, number, number], b: [string, number, number]): number {
  if (a[0] !== b[0]) return a[0] < b[0] ? -1 : 1;
  if (a[1] !== b[1]) return a[1] - b[1];
  return a[2] - b[2];
}

export function summarize(rows: TrialRow[]): SummaryRow[] {
  const groups = new Map<string, TrialRow[]>();
  for (const t of rows) {
    const key = groupKey(t);
    const bucket = groups.get(key);
    if (bucket) bucket.push(t);
    else groups.set(key, [t]);
  }
  const keys = [...groups.keys()].sort((ka, kb) =>
    compareKeys(JSON.parse(ka), JSON.parse(kb)));
  return keys.map((key) => {
    const members = groups.get(key)!;
    const [algorithm, n, r] = JSON.parse(key) as [string, number, number];
    const stats = boxStats(members.map((t) => t.evaluations));
    const failures = members.filter((t) => !t.success).length;
    return {
      algorithm,
      n,
      r,
      count: stats.count,
      mean: stats.mean,
      q1: stats.q1,
      median: stats.median,
      q3: stats.q3,
      whiskerLow: stats.whiskerLow,
      whiskerHigh: stats.whiskerHigh,
      outliers: stats.outlierValues.length,
      failureRate: failures / members.length,
    };
  });
}

export function summaryToCsv(rows: SummaryRow[]): string {
  const lines = [SUMMARY_HEADER.join(",")];
  for (const s of rows) {
    lines.push([
      s.algorithm,
      String(s.n),
      String(s.r),
      String(s.count),
      formatNumber(s.mean),
      formatNumber(s.q1),
      formatNumber(s.median),
      formatNumber(s.q3),
      formatNumber(s.whiskerLow),
      formatNumber(s.whiskerHigh),
      String(s.outliers),
      formatNumber(s.failureRate),
    ].join(","));
  }
  return lines.join("\n") + "\n";
}
