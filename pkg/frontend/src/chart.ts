/**
 * Minimal multi-series SVG line chart, linear or logarithmic x-axis.
 *
 * The output is a plain SVG string with no external dependencies, so the
 * same bytes render in browsers and rasterize server-side.
 */

export interface Point {
  x: number;
  y: number;
}

export interface Series {
  label: string;
  points: Point[];
  color?: string;
}

export interface RefLine {
  value: number;
  label: string;
  color?: string;
}

export interface ChartOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  xScale?: "linear" | "log";
  hLines?: RefLine[];
  width?: number;
  height?: number;
}

const PALETTE = [
  "#4361ee",
  "#e63946",
  "#2d6a4f",
  "#f4a261",
  "#7209b7",
  "#0096c7",
  "#9d0208",
  "#588157",
];

const FONT = "DejaVu Sans, Helvetica, Arial, sans-serif";

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Round tick positions for a linear axis. */
export function niceTicks(min: number, max: number, count: number): number[] {
  const range = max - min || 1;
  const rough = range / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((n) => n >= rough) ?? rough;
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

/** Powers of ten spanning [min, max], padded with 2x/5x when sparse. */
export function logTicks(min: number, max: number): number[] {
  const ticks: number[] = [];
  const lo = Math.floor(Math.log10(min));
  const hi = Math.ceil(Math.log10(max));
  const decades = hi - lo;
  for (let e = lo; e <= hi; e++) {
    for (const m of decades <= 2 ? [1, 2, 5] : [1]) {
      const v = m * Math.pow(10, e);
      if (v >= min * (1 - 1e-12) && v <= max * (1 + 1e-12)) ticks.push(v);
    }
  }
  return ticks;
}

function fmtTick(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 1e5 || abs < 1e-3) return v.toExponential(0).replace("+", "");
  return Number(v.toPrecision(6)).toString();
}

export function buildLineChart(series: Series[], opts: ChartOptions): string {
  if (series.length === 0 || series.every((s) => s.points.length === 0)) {
    throw new Error("chart needs at least one non-empty series");
  }
  const W = opts.width ?? 760;
  const H = opts.height ?? 420;
  const ml = 78;
  const mr = 24;
  const mt = 42;
  const mb = 58;
  const pw = W - ml - mr;
  const ph = H - mt - mb;
  const log = opts.xScale === "log";

  const xs = series.flatMap((s) => s.points.map((p) => p.x));
  const ys = series.flatMap((s) => s.points.map((p) => p.y));
  const hVals = (opts.hLines ?? []).map((h) => h.value);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  let yMin = Math.min(...ys, ...hVals);
  let yMax = Math.max(...ys, ...hVals);
  if (yMin === yMax) {
    yMin -= 1;
    yMax += 1;
  }
  const yPad = 0.06 * (yMax - yMin);
  yMin -= yPad;
  yMax += yPad;
  if (log && xMin <= 0) {
    throw new Error("logarithmic axis requires positive x values");
  }

  const xOf = (v: number) =>
    log
      ? ml + ((Math.log(v) - Math.log(xMin)) / (Math.log(xMax) - Math.log(xMin) || 1)) * pw
      : ml + ((v - xMin) / (xMax - xMin || 1)) * pw;
  const yOf = (v: number) => mt + ph - ((v - yMin) / (yMax - yMin)) * ph;

  let s = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${W} ${H}" font-family="${FONT}">\n`;
  s += `<rect width="${W}" height="${H}" fill="#fff"/>\n`;
  s += `<text x="${ml}" y="${mt - 18}" font-size="14" font-weight="600" fill="#222">${esc(opts.title)}</text>\n`;

  // grid + ticks
  const yTicks = niceTicks(yMin, yMax, 6);
  for (const v of yTicks) {
    const y = yOf(v);
    s += `<line x1="${ml}" y1="${y.toFixed(1)}" x2="${ml + pw}" y2="${y.toFixed(1)}" stroke="#eee"/>\n`;
    s += `<text x="${ml - 8}" y="${(y + 3.5).toFixed(1)}" font-size="11" fill="#555" text-anchor="end">${fmtTick(v)}</text>\n`;
  }
  const xTicks = log ? logTicks(xMin, xMax) : niceTicks(xMin, xMax, 8);
  for (const v of xTicks) {
    const x = xOf(v);
    s += `<line x1="${x.toFixed(1)}" y1="${mt}" x2="${x.toFixed(1)}" y2="${mt + ph}" stroke="#f3f3f3"/>\n`;
    s += `<text x="${x.toFixed(1)}" y="${mt + ph + 18}" font-size="11" fill="#555" text-anchor="middle">${fmtTick(v)}</text>\n`;
  }
  s += `<rect x="${ml}" y="${mt}" width="${pw}" height="${ph}" fill="none" stroke="#999"/>\n`;

  // reference lines
  for (const h of opts.hLines ?? []) {
    const y = yOf(h.value);
    const color = h.color ?? "#888";
    s += `<line class="refline" x1="${ml}" y1="${y.toFixed(1)}" x2="${ml + pw}" y2="${y.toFixed(1)}" stroke="${color}" stroke-dasharray="6,4"/>\n`;
    s += `<text x="${ml + pw - 4}" y="${(y - 4).toFixed(1)}" font-size="10" fill="${color}" text-anchor="end">${esc(h.label)}</text>\n`;
  }

  // series
  series.forEach((sr, i) => {
    const color = sr.color ?? PALETTE[i % PALETTE.length];
    const pts = sr.points
      .map((p) => `${xOf(p.x).toFixed(2)},${yOf(p.y).toFixed(2)}`)
      .join(" ");
    s += `<polyline class="series" data-label="${esc(sr.label)}" points="${pts}" fill="none" stroke="${color}" stroke-width="1.6"/>\n`;
  });

  // legend (top-right, inside the plot)
  const legendX = ml + pw - 150;
  series.forEach((sr, i) => {
    const color = sr.color ?? PALETTE[i % PALETTE.length];
    const y = mt + 14 + i * 15;
    s += `<line x1="${legendX}" y1="${y - 4}" x2="${legendX + 18}" y2="${y - 4}" stroke="${color}" stroke-width="2"/>\n`;
    s += `<text x="${legendX + 24}" y="${y}" font-size="11" fill="#333">${esc(sr.label)}</text>\n`;
  });

  // axis labels
  s += `<text x="${ml + pw / 2}" y="${H - 14}" font-size="12" fill="#222" text-anchor="middle">${esc(opts.xLabel)}</text>\n`;
  s += `<text x="20" y="${mt + ph / 2}" font-size="12" fill="#222" text-anchor="middle" transform="rotate(-90 20 ${mt + ph / 2})">${esc(opts.yLabel)}</text>\n`;
  s += `</svg>\n`;
  return s;
}
