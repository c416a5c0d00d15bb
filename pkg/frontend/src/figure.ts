/** Shared figure description and error types. */

export type FigureKind = "loglog_comparison" | "boxplot";

export interface FigureSpec {
  /** CSV inputs: summary files for loglog, one results file for boxplot */
  inputs: string[];
  kind: FigureKind;
  /** output image path (SVG) */
  output: string;
  /** series that must be present, as "algorithm n=<n>" keys (loglog only) */
  expectSeries?: string[];
}

export class MissingSeriesError extends Error {
  constructor(public readonly missing: string[]) {
    super(`missing series: ${missing.join(", ")}`);
    this.name = "MissingSeriesError";
  }
}

export function seriesKey(algorithm: string, n: number): string {
  return `${algorithm} n=${n}`;
}
