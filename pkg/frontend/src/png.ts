/**
 * SVG-to-PNG rasterization via resvg's WASM build.
 *
 * The WASM rasterizer has no access to system font lookup, so a sans
 * TTF is located on disk and handed over explicitly.
 */

import { readFile } from "node:fs/promises";
import { existsSync } from "node:fs";
import { createRequire } from "node:module";

import { initWasm, Resvg } from "@resvg/resvg-wasm";

const FONT_CANDIDATES = [
  "/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf",
  "/usr/share/fonts/TTF/DejaVuSans.ttf",
  "/usr/share/fonts/dejavu/DejaVuSans.ttf",
  "/Library/Fonts/Arial.ttf",
  "/System/Library/Fonts/Supplemental/Arial.ttf",
];

let wasmReady: Promise<void> | null = null;
let fontBuffer: Uint8Array | null = null;

async function ensureReady(): Promise<void> {
  if (!wasmReady) {
    const require = createRequire(import.meta.url);
    const wasmPath = require.resolve("@resvg/resvg-wasm/index_bg.wasm");
    wasmReady = readFile(wasmPath).then((bytes) => initWasm(bytes));
  }
  await wasmReady;
  if (!fontBuffer) {
    const path = FONT_CANDIDATES.find((p) => existsSync(p));
    if (!path) {
      throw new Error(
        "PNG output needs a TTF font for text labels; none found in: " +
          FONT_CANDIDATES.join(", "),
      );
    }
    fontBuffer = new Uint8Array(await readFile(path));
  }
}

export async function svgToPng(svg: string, width = 1520): Promise<Uint8Array> {
  await ensureReady();
  const resvg = new Resvg(svg, {
    fitTo: { mode: "width", value: width },
    font: {
      fontBuffers: [fontBuffer!],
      defaultFontFamily: "DejaVu Sans",
      loadSystemFonts: false,
    },
    background: "white",
  });
  return resvg.render().asPng();
}
