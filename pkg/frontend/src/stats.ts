/**
 * Distribution statistics pinned to the harness conventions.
 *
 * Quartiles interpolate linearly at position (count - 1) * q over the
 * ascending data; the mean is the naive left-to-right sum over the sorted
 * values. Both are floating-point-order contracts, not just math: the
 * Python side does the identical operations so summaries agree bitwise.
 */

export function quantileLinear(ascending: number[], q: number): number {
  const pos = (ascending.length - 1) * q;
  const lo = Math.floor(pos);
  const hi = Math.ceil(pos);
  const frac = pos - lo;
  return ascending[lo] + frac * (ascending[hi] - ascending[lo]);
}

export function orderedMean(ascending: number[]): number {
  let total = 0;
  for (const v of ascending) total += v;
  return total / ascending.length;
}

export interface BoxStats {
  count: number;
  mean: number;
  q1: number;
  median: number;
  q3: number;
  whiskerLow: number;
  whiskerHigh: number;
  /** values outside the 1.5 IQR fences, ascending */
  outlierValues: number[];
}

export function boxStats(values: number[]): BoxStats {
  if (values.length === 0) throw new Error("boxStats of an empty sample");
  const data = values.slice().sort((a, b) => a - b);
  const q1 = quantileLinear(data, 0.25);
  const median = quantileLinear(data, 0.5);
  const q3 = quantileLinear(data, 0.75);
  const iqr = q3 - q1;
  const loFence = q1 - 1.5 * iqr;
  const hiFence = q3 + 1.5 * iqr;
  const inside = data.filter((v) => v >= loFence);
  const below = data.filter((v) => v <= hiFence);
  return {
    count: data.length,
    mean: orderedMean(data),
    q1,
    median,
    q3,
    whiskerLow: Math.min(...inside),
    whiskerHigh: Math.max(...below),
    outlierValues: data.filter((v) => v < loFence || v > hiFence),
  };
}
