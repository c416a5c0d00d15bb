export { formatNumber, pythonRepr } from "./format.js";
export { boxStats, orderedMean, quantileLinear } from "./stats.js";
export type { BoxStats } from "./stats.js";
export {
  RESULTS_HEADER,
  SUMMARY_HEADER,
  parseResultsCsv,
  parseSummaryCsv,
  readResultsCsv,
  readSummaryCsv,
} from "./csv.js";
export type { SummaryRow, TrialRow } from "./csv.js";
export { summarize, summaryToCsv } from "./summary.js";
export { MissingSeriesError, seriesKey } from "./figure.js";
export type { FigureKind, FigureSpec } from "./figure.js";
export { buildLoglogScene, plotLoglog, renderLoglog } from "./loglog.js";
export type { LoglogScene, ScenePoint, SceneSeries } from "./loglog.js";
export { buildBoxScene, plotBox, renderBox } from "./boxplot.js";
export type { BoxGeometry, BoxScene } from "./boxplot.js";
export { runCli } from "./cli.js";
