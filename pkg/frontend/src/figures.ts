/**
 * The four standard figures built from grid CSV rows.
 *
 *   1 — signed relative error vs shape a (log axis), one line per mean p
 *   2 — signed relative error vs mean p, one line per fixed smaller shape
 *   3 — log scaled absolute error vs shape a (log axis), one line per offset d
 *   4 — CDF at the approximate median vs mean p, one line per smaller shape,
 *       with the [0.4865, 0.5135] band drawn as reference lines
 */

import { buildLineChart, Series } from "./chart.js";
import { GridRow, SchemaError } from "./csv.js";

export type FigureId = 1 | 2 | 3 | 4;

export interface FigureResult {
  svg: string;
  seriesCount: number;
}

const ONE_THIRD = 1 / 3;

export const TAIL_BAND: readonly [number, number] = [0.4865, 0.5135];

function fmtKey(value: number): string {
  if (value === ONE_THIRD) return "1/3";
  return Number(value.toPrecision(6)).toString();
}

/** Group rows by a numeric key, returning groups sorted by that key. */
function groupBy(rows: GridRow[], key: (r: GridRow) => number): Map<number, GridRow[]> {
  const groups = new Map<number, GridRow[]>();
  for (const row of rows) {
    const k = key(row);
    const bucket = groups.get(k);
    if (bucket) bucket.push(row);
    else groups.set(k, [row]);
  }
  return new Map([...groups.entries()].sort((u, v) => u[0] - v[0]));
}

function toSeries(
  groups: Map<number, GridRow[]>,
  labelPrefix: string,
  x: (r: GridRow) => number,
  y: (r: GridRow) => number,
): Series[] {
  const series: Series[] = [];
  for (const [key, rows] of groups) {
    const points = rows
      .map((r) => ({ x: x(r), y: y(r) }))
      .sort((u, v) => u.x - v.x);
    series.push({ label: `${labelPrefix} = ${fmtKey(key)}`, points });
  }
  return series;
}

function requireColumn(
  rows: GridRow[],
  column: "rel_err" | "log_scaled_abs_err" | "tail_prob",
): GridRow[] {
  const present = rows.filter((r) => r[column] !== null);
  if (present.length === 0) {
    throw new SchemaError(`column "${column}" carries no values in this input`);
  }
  return present;
}

export function buildFigure(figure: FigureId, rows: GridRow[]): FigureResult {
  if (rows.length === 0) {
    throw new SchemaError("no rows to plot");
  }
  let series: Series[];
  let svg: string;

  switch (figure) {
    case 1: {
      const usable = requireColumn(rows, "rel_err");
      series = toSeries(groupBy(usable, (r) => r.p), "p", (r) => r.a, (r) => r.rel_err!);
      svg = buildLineChart(series, {
        title: "Relative error of (a - 1/3)/(a + b - 2/3) against the exact median",
        xLabel: "shape a (log scale)",
        yLabel: "relative error",
        xScale: "log",
      });
      break;
    }
    case 2: {
      const usable = requireColumn(rows, "rel_err");
      series = toSeries(
        groupBy(usable, (r) => Math.min(r.a, r.b)),
        "min shape",
        (r) => r.p,
        (r) => r.rel_err!,
      );
      svg = buildLineChart(series, {
        title: "Relative error across distribution means",
        xLabel: "mean p = a/(a + b)",
        yLabel: "relative error",
      });
      break;
    }
    case 3: {
      // rows whose error underflowed carry no log value and are dropped
      const usable = requireColumn(rows.filter((r) => !r.underflow), "log_scaled_abs_err");
      series = toSeries(
        groupBy(usable, (r) => r.d),
        "d",
        (r) => r.a,
        (r) => r.log_scaled_abs_err!,
      );
      svg = buildLineChart(series, {
        title: "Scaled absolute error of (a - d)/(a + b - 2d), several offsets",
        xLabel: "shape a (log scale)",
        yLabel: "ln(|approx - exact| / p)",
        xScale: "log",
      });
      break;
    }
    case 4: {
      const usable = requireColumn(rows, "tail_prob");
      series = toSeries(
        groupBy(usable, (r) => Math.min(r.a, r.b)),
        "min shape",
        (r) => r.p,
        (r) => r.tail_prob!,
      );
      svg = buildLineChart(series, {
        title: "CDF at the approximate median (exact median would give 0.5)",
        xLabel: "mean p = a/(a + b)",
        yLabel: "I at approximate median",
        hLines: [
          { value: TAIL_BAND[0], label: `${TAIL_BAND[0]}` },
          { value: TAIL_BAND[1], label: `${TAIL_BAND[1]}` },
          { value: 0.5, label: "0.5", color: "#bbb" },
        ],
      });
      break;
    }
    default:
      throw new SchemaError(`figure must be 1, 2, 3, or 4, got ${figure}`);
  }
  return { svg, seriesCount: series.length };
}
