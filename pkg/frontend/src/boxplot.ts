/**
 * Per-r box plots of evaluation counts for a single algorithm.
 *
 * The box statistics come from the same summarize computation the harness
 * uses; this module never applies its own quartile convention. Groups with
 * fewer than two points degrade to a single mark with a warning.
 */

import { writeFileSync } from "node:fs";

import { readResultsCsv, TrialRow } from "./csv.js";
import { FigureSpec } from "./figure.js";
import { boxStats } from "./stats.js";
import { summarize } from "./summary.js";
import { line, round2, svgDocument, tag, text } from "./svg.js";

const MARGIN = { left: 64, right: 24, top: 18, bottom: 46 };
const PLOT_H = 340;
const SLOT_W = 86;

export interface BoxGeometry {
  r: number;
  count: number;
  q1: number;
  median: number;
  q3: number;
  whiskerLow: number;
  whiskerHigh: number;
  outlierValues: number[];
  /** center x in pixels */
  cx: number;
}

export interface BoxScene {
  algorithm: string;
  n: number;
  width: number;
  height: number;
  boxes: BoxGeometry[];
  yTicks: { value: number; py: number }[];
  warnings: string[];
  valueToPy: (v: number) => number;
}

export function buildBoxScene(rows: TrialRow[]): BoxScene {
  if (rows.length === 0) throw new Error("box figure needs at least one trial row");
  const algorithms = [...new Set(rows.map((t) => t.algorithm))].sort();
  if (algorithms.length !== 1) {
    throw new Error(`box figure wants one algorithm, got: ${algorithms.join(", ")}`);
  }
  const nValues = [...new Set(rows.map((t) => t.n))].sort((a, b) => a - b);
  if (nValues.length !== 1) {
    throw new Error(`box figure wants one n, got: ${nValues.join(", ")}`);
  }

  const summaries = summarize(rows);
  const warnings: string[] = [];
  const lo = Math.min(...rows.map((t) => t.evaluations));
  const hi = Math.max(...rows.map((t) => t.evaluations));
  const pad = (hi - lo) * 0.08 || Math.max(1, Math.abs(hi) * 0.08);
  const yLo = lo - pad;
  const ySpan = hi + pad - yLo;
  const valueToPy = (v: number) => MARGIN.top + PLOT_H - ((v - yLo) / ySpan) * PLOT_H;

  const boxes: BoxGeometry[] = summaries.map((s, idx) => {
    const members = rows.filter((t) => t.r === s.r).map((t) => t.evaluations);
    if (members.length < 2) {
      warnings.push(`group r=${s.r} has ${members.length} point(s); drew a single mark`);
    }
    const stats = boxStats(members);
    if (stats.outlierValues.length !== s.outliers) {
      throw new Error("internal: box statistics diverged from summarize"); // unreachable
    }
    return {
      r: s.r,
      count: s.count,
      q1: s.q1,
      median: s.median,
      q3: s.q3,
      whiskerLow: s.whiskerLow,
      whiskerHigh: s.whiskerHigh,
      outlierValues: stats.outlierValues,
      cx: MARGIN.left + SLOT_W * (idx + 0.5),
    };
  });

  const tickCount = 6;
  const yTicks = Array.from({ length: tickCount }, (_, i) => {
    const value = yLo + (ySpan * i) / (tickCount - 1);
    return { value, py: valueToPy(value) };
  });

  return {
    algorithm: algorithms[0],
    n: nValues[0],
    width: MARGIN.left + SLOT_W * boxes.length + MARGIN.right,
    height: MARGIN.top + PLOT_H + MARGIN.bottom,
    boxes,
    yTicks,
    warnings,
    valueToPy,
  };
}

export function renderBox(scene: BoxScene): string {
  const parts: string[] = [];
  const bottom = MARGIN.top + PLOT_H;
  const plotRight = scene.width - MARGIN.right;
  const py = scene.valueToPy;

  for (const t of scene.yTicks) {
    parts.push(line(MARGIN.left, t.py, plotRight, t.py, { stroke: "#ddd" }));
    parts.push(text(MARGIN.left - 6, t.py + 4, String(Math.round(t.value)), { "text-anchor": "end" }));
  }
  parts.push(line(MARGIN.left, bottom, plotRight, bottom));
  parts.push(line(MARGIN.left, MARGIN.top, MARGIN.left, bottom));
  parts.push(text((MARGIN.left + plotRight) / 2, bottom + 34,
    `${scene.algorithm}, n=${scene.n}: evaluations per r`, { "text-anchor": "middle" }));

  const half = 26;
  for (const b of scene.boxes) {
    parts.push(text(b.cx, bottom + 16, String(b.r), { "text-anchor": "middle" }));
    if (b.count < 2) {
      parts.push(tag("circle", { class: "single-mark", cx: round2(b.cx), cy: round2(py(b.median)), r: 4, fill: "#1f77b4" }));
      continue;
    }
    parts.push(line(b.cx, py(b.whiskerLow), b.cx, py(b.q1)));
    parts.push(line(b.cx, py(b.q3), b.cx, py(b.whiskerHigh)));
    parts.push(line(b.cx - half / 2, py(b.whiskerLow), b.cx + half / 2, py(b.whiskerLow)));
    parts.push(line(b.cx - half / 2, py(b.whiskerHigh), b.cx + half / 2, py(b.whiskerHigh)));
    parts.push(tag("rect", {
      class: "box",
      x: round2(b.cx - half), y: round2(py(b.q3)),
      width: half * 2, height: round2(py(b.q1) - py(b.q3)),
      fill: "#aec7e8", stroke: "#1f77b4",
    }));
    parts.push(line(b.cx - half, py(b.median), b.cx + half, py(b.median),
      { stroke: "#1f77b4", "stroke-width": 2 }));
    for (const v of b.outlierValues) {
      parts.push(tag("circle", { class: "outlier", cx: round2(b.cx), cy: round2(py(v)), r: 2.6, fill: "none", stroke: "#d62728" }));
    }
  }

  return svgDocument(scene.width, scene.height, parts.join("\n"));
}

/** Read the trial CSV named by the spec, render, write the SVG. */
export function plotBox(spec: FigureSpec): { output: string; warnings: string[] } {
  if (spec.inputs.length !== 1) {
    throw new Error(`box figure wants exactly one results CSV, got ${spec.inputs.length}`);
  }
  const rows = readResultsCsv(spec.inputs[0]);
  const scene = buildBoxScene(rows);
  for (const w of scene.warnings) console.warn(`warning: ${w}`);
  writeFileSync(spec.output, renderBox(scene));
  return { output: spec.output, warnings: scene.warnings };
}
