/**
 * Log-log mean-evaluations-vs-r comparison figure.
 *
 * One line per (algorithm, n): color keyed by algorithm, dash pattern by n,
 * both assigned deterministically from the sorted group keys so the same
 * data always renders the same figure. Both axes are logarithmic with ticks
 * at the decades.
 */

import { writeFileSync } from "node:fs";

import { readSummaryCsv, SummaryRow } from "./csv.js";
import { FigureSpec, MissingSeriesError, seriesKey } from "./figure.js";
import { line, round2, svgDocument, tag, text } from "./svg.js";

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const DASHES = ["", "6 3", "2 2", "9 3 2 3", "12 4"];

const MARGIN = { left: 64, right: 168, top: 18, bottom: 46 };
const PLOT_W = 520;
const PLOT_H = 340;

export interface ScenePoint {
  r: number;
  mean: number;
  px: number;
  py: number;
}

export interface SceneSeries {
  algorithm: string;
  n: number;
  color: string;
  dash: string;
  points: ScenePoint[];
}

export interface Tick {
  value: number;
  px: number;
}

export interface LoglogScene {
  width: number;
  height: number;
  series: SceneSeries[];
  xTicks: Tick[];
  yTicks: Tick[];
}

function decadesBetween(lo: number, hi: number): number[] {
  let a = Math.floor(Math.log10(lo));
  let b = Math.ceil(Math.log10(hi));
  if (a === b) {
    a -= 1;
    b += 1;
  }
  const out = [];
  for (let k = a; k <= b; k++) out.push(k);
  return out;
}

export function buildLoglogScene(rows: SummaryRow[], expect?: string[]): LoglogScene {
  if (rows.length === 0) throw new Error("loglog figure needs at least one summary row");
  for (const s of rows) {
    if (!(s.r > 0) || !(s.mean > 0)) {
      throw new Error(`log scale needs positive r and mean, got r=${s.r} mean=${s.mean}`);
    }
  }

  const byKey = new Map<string, SummaryRow[]>();
  for (const s of rows) {
    const key = seriesKey(s.algorithm, s.n);
    (byKey.get(key) ?? byKey.set(key, []).get(key)!).push(s);
  }
  if (expect && expect.length > 0) {
    const missing = expect.filter((k) => !byKey.has(k));
    if (missing.length > 0) throw new MissingSeriesError(missing);
  }

  const algorithms = [...new Set(rows.map((s) => s.algorithm))].sort();
  const nValues = [...new Set(rows.map((s) => s.n))].sort((a, b) => a - b);

  const xDecades = decadesBetween(
    Math.min(...rows.map((s) => s.r)), Math.max(...rows.map((s) => s.r)));
  const yDecades = decadesBetween(
    Math.min(...rows.map((s) => s.mean)), Math.max(...rows.map((s) => s.mean)));

  const xLo = xDecades[0];
  const xSpan = xDecades[xDecades.length - 1] - xLo;
  const yLo = yDecades[0];
  const ySpan = yDecades[yDecades.length - 1] - yLo;
  const px = (r: number) => MARGIN.left + ((Math.log10(r) - xLo) / xSpan) * PLOT_W;
  const py = (m: number) => MARGIN.top + PLOT_H - ((Math.log10(m) - yLo) / ySpan) * PLOT_H;

  const series: SceneSeries[] = [];
  const keys = [...byKey.keys()].sort();
  for (const key of keys) {
    const members = byKey.get(key)!.slice().sort((a, b) => a.r - b.r);
    const { algorithm, n } = members[0];
    series.push({
      algorithm,
      n,
      color: PALETTE[algorithms.indexOf(algorithm) % PALETTE.length],
      dash: DASHES[nValues.indexOf(n) % DASHES.length],
      points: members.map((s) => ({ r: s.r, mean: s.mean, px: px(s.r), py: py(s.mean) })),
    });
  }

  return {
    width: MARGIN.left + PLOT_W + MARGIN.right,
    height: MARGIN.top + PLOT_H + MARGIN.bottom,
    series,
    xTicks: xDecades.map((k) => ({ value: 10 ** k, px: px(10 ** k) })),
    yTicks: yDecades.map((k) => ({ value: 10 ** k, px: py(10 ** k) })),
  };
}

function tickLabel(value: number): string {
  const k = Math.round(Math.log10(value));
  return k >= 4 || k < 0 ? `1e${k}` : String(value);
}

export function renderLoglog(scene: LoglogScene): string {
  const bottom = MARGIN.top + PLOT_H;
  const right = MARGIN.left + PLOT_W;
  const parts: string[] = [];

  for (const t of scene.xTicks) {
    parts.push(line(t.px, MARGIN.top, t.px, bottom, { stroke: "#ddd" }));
    parts.push(text(t.px, bottom + 16, tickLabel(t.value), { "text-anchor": "middle" }));
  }
  for (const t of scene.yTicks) {
    parts.push(line(MARGIN.left, t.px, right, t.px, { stroke: "#ddd" }));
    parts.push(text(MARGIN.left - 6, t.px + 4, tickLabel(t.value), { "text-anchor": "end" }));
  }
  parts.push(line(MARGIN.left, bottom, right, bottom));
  parts.push(line(MARGIN.left, MARGIN.top, MARGIN.left, bottom));
  parts.push(text(MARGIN.left + PLOT_W / 2, bottom + 34, "r (all-r target)", { "text-anchor": "middle" }));
  parts.push(text(14, MARGIN.top + PLOT_H / 2, "mean evaluations", {
    transform: `rotate(-90 14 ${MARGIN.top + PLOT_H / 2})`, "text-anchor": "middle",
  }));

  scene.series.forEach((s, idx) => {
    const style: Record<string, string | number> = {
      class: "series", fill: "none", stroke: s.color, "stroke-width": 1.6,
    };
    if (s.dash) style["stroke-dasharray"] = s.dash;
    if (s.points.length > 1) {
      const d = s.points.map((p) => `${round2(p.px)},${round2(p.py)}`).join(" ");
      parts.push(tag("polyline", { ...style, points: d }));
    }
    for (const p of s.points) {
      parts.push(tag("circle", { cx: round2(p.px), cy: round2(p.py), r: 2.6, fill: s.color }));
    }
    const ly = MARGIN.top + 14 + idx * 18;
    parts.push(line(right + 10, ly - 4, right + 34, ly - 4,
      { stroke: s.color, "stroke-width": 1.6, ...(s.dash ? { "stroke-dasharray": s.dash } : {}) }));
    parts.push(text(right + 40, ly, seriesKey(s.algorithm, s.n)));
  });

  return svgDocument(scene.width, scene.height, parts.join("\n"));
}

/** Read the summary CSVs named by the spec, render, write the SVG. */
export function plotLoglog(spec: FigureSpec): string {
  const rows = spec.inputs.flatMap((p) => readSummaryCsv(p));
  const scene = buildLoglogScene(rows, spec.expectSeries);
  const svg = renderLoglog(scene);
  writeFileSync(spec.output, svg);
  return spec.output;
}
