import { join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { parseResultsCsv, parseSummaryCsv, readResultsCsv } from "../src/csv.js";

const FIXTURES = fileURLToPath(new URL("../fixtures", import.meta.url));

describe("results CSV parsing", () => {
  it("reads the generated fixtures", () => {
    const rows = readResultsCsv(join(FIXTURES, "c5_results.csv"));
    expect(rows).toHaveLength(120);
    expect(rows.every((t) => t.algorithm === "ea_pm1" && t.n === 10)).toBe(true);
    expect(new Set(rows.map((t) => t.r)).size).toBe(6);
    expect(rows.every((t) => t.success)).toBe(true);
  });

  it("keeps 64-bit seeds as text rather than rounding them", () => {
    const rows = readResultsCsv(join(FIXTURES, "c5_results.csv"));
    const big = rows.map((t) => t.seed).find((s) => s.length >= 17);
    expect(big).toBeDefined();
    // a double would corrupt the tail digits of a seed this large
    expect(String(Number(big))).not.toBe(big);
  });

  it("rejects a wrong header by file name", () => {
    expect(() => parseResultsCsv("a,b\n1,2\n", "bad.csv")).toThrow(/bad\.csv: unexpected header/);
  });

  it("rejects short rows", () => {
    const text = "algorithm,n,r,param1,param2,seed,evaluations,success,wall_time_s\nea_pm1,2\n";
    expect(() => parseResultsCsv(text)).toThrow(/malformed row/);
  });

  it("rejects non-numeric fields", () => {
    const text = "algorithm,n,r,param1,param2,seed,evaluations,success,wall_time_s\nea_pm1,x,5,0,0,0,9,true,0.0\n";
    expect(() => parseResultsCsv(text)).toThrow(/not a number/);
  });
});

describe("summary CSV parsing", () => {
  it("round-trips the skewed fixture values", () => {
    const text = [
      "algorithm,n,r,count,mean,q1,median,q3,whisker_low,whisker_high,outliers,failure_rate",
      "ea_pm1,2,5,4,26.5,1.75,2.5,27.25,1,3,1,0",
      "",
    ].join("\n");
    const [row] = parseSummaryCsv(text);
    expect(row).toEqual({
      algorithm: "ea_pm1", n: 2, r: 5, count: 4, mean: 26.5, q1: 1.75,
      median: 2.5, q3: 27.25, whiskerLow: 1, whiskerHigh: 3, outliers: 1,
      failureRate: 0,
    });
  });

  it("rejects the results header", () => {
    const text = "algorithm,n,r,param1,param2,seed,evaluations,success,wall_time_s\n";
    expect(() => parseSummaryCsv(text)).toThrow(/unexpected header/);
  });
});
