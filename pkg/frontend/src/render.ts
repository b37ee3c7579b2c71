#!/usr/bin/env node
/**
 * Figure renderer for betamedian grid CSVs.
 *
 * Usage:
 *   render --figure N --input PATH [--input PATH ...] --out PATH [--format svg|png]
 *
 * Figure 2 accepts several inputs (one per fixed smaller shape) and
 * overlays them; the other figures normally take a single file.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { buildFigure, FigureId } from "./figures.js";
import { parseGrid, GridRow, SchemaError } from "./csv.js";
import { svgToPng } from "./png.js";

export interface FigureJob {
  figure: FigureId;
  inputs: string[];
  out: string;
  format: "svg" | "png";
}

export function parseJob(argv: string[]): FigureJob {
  const { values } = parseArgs({
    args: argv,
    options: {
      figure: { type: "string" },
      input: { type: "string", multiple: true },
      out: { type: "string" },
      format: { type: "string", default: "svg" },
    },
  });
  const figure = Number(values.figure);
  if (![1, 2, 3, 4].includes(figure)) {
    throw new UsageError(`--figure must be 1, 2, 3, or 4, got ${values.figure}`);
  }
  const inputs = (values.input ?? []).flatMap((v) => v.split(",")).filter(Boolean);
  if (inputs.length === 0) {
    throw new UsageError("--input is required");
  }
  if (!values.out) {
    throw new UsageError("--out is required");
  }
  if (values.format !== "svg" && values.format !== "png") {
    throw new UsageError(`--format must be svg or png, got ${values.format}`);
  }
  return { figure: figure as FigureId, inputs, out: values.out, format: values.format };
}

export class UsageError extends Error {}

export async function runJob(job: FigureJob): Promise<number> {
  const rows: GridRow[] = [];
  for (const path of job.inputs) {
    rows.push(...parseGrid(readFileSync(path, "utf-8"), path));
  }
  const { svg, seriesCount } = buildFigure(job.figure, rows);
  if (job.format === "svg") {
    writeFileSync(job.out, svg, "utf-8");
  } else {
    writeFileSync(job.out, await svgToPng(svg));
  }
  console.log(`figure ${job.figure}: ${seriesCount} series -> ${job.out}`);
  return seriesCount;
}

export async function main(argv: string[]): Promise<number> {
  let job: FigureJob;
  try {
    job = parseJob(argv);
  } catch (err) {
    console.error(`render: ${err instanceof Error ? err.message : err}`);
    console.error(
      "usage: render --figure N --input PATH [--input PATH ...] --out PATH [--format svg|png]",
    );
    return 2;
  }
  try {
    await runJob(job);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`render: invalid input: ${err.message}`);
    } else {
      console.error(`render: ${err instanceof Error ? err.message : err}`);
    }
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
