/**
 * Parsing and validation for the betamedian CLI's CSV grid output.
 *
 * Every grid subcommand emits the same ten-column schema; fields that do
 * not apply to a subcommand are empty, and `underflow` marks rows whose
 * error is exactly zero in floating point.
 */

export const CSV_HEADER = [
  "a",
  "b",
  "p",
  "d",
  "approx",
  "exact",
  "rel_err",
  "log_scaled_abs_err",
  "tail_prob",
  "underflow",
] as const;

export interface GridRow {
  a: number;
  b: number;
  p: number;
  d: number;
  approx: number;
  exact: number;
  rel_err: number | null;
  log_scaled_abs_err: number | null;
  tail_prob: number | null;
  underflow: boolean;
}

export class SchemaError extends Error {}

function parseNumber(token: string, column: string, line: number): number {
  const value = Number(token);
  if (token === "" || !Number.isFinite(value)) {
    throw new SchemaError(
      `line ${line}: column "${column}" must be a finite number, got ${JSON.stringify(token)}`,
    );
  }
  return value;
}

function parseOptionalNumber(token: string, column: string, line: number): number | null {
  if (token === "") return null;
  return parseNumber(token, column, line);
}

/** Parse one CSV document, enforcing the exact schema. */
export function parseGrid(text: string, source = "<input>"): GridRow[] {
  const lines = text.split("\n").filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(`${source}: empty file`);
  }
  const header = lines[0].split(",");
  for (let i = 0; i < CSV_HEADER.length; i++) {
    if (header[i] !== CSV_HEADER[i]) {
      throw new SchemaError(
        `${source}: schema mismatch at column ${i + 1}: ` +
          `expected "${CSV_HEADER[i]}", got "${header[i] ?? "<missing>"}"`,
      );
    }
  }
  if (header.length !== CSV_HEADER.length) {
    throw new SchemaError(
      `${source}: schema mismatch: unexpected extra column "${header[CSV_HEADER.length]}"`,
    );
  }
  if (lines.length === 1) {
    throw new SchemaError(`${source}: no data rows`);
  }

  const rows: GridRow[] = [];
  for (let li = 1; li < lines.length; li++) {
    const fields = lines[li].split(",");
    if (fields.length !== CSV_HEADER.length) {
      throw new SchemaError(
        `${source}: line ${li + 1}: expected ${CSV_HEADER.length} fields, got ${fields.length}`,
      );
    }
    const underflowToken = fields[9];
    if (underflowToken !== "true" && underflowToken !== "false" && underflowToken !== "") {
      throw new SchemaError(
        `${source}: line ${li + 1}: column "underflow" must be true/false, got ${JSON.stringify(underflowToken)}`,
      );
    }
    rows.push({
      a: parseNumber(fields[0], "a", li + 1),
      b: parseNumber(fields[1], "b", li + 1),
      p: parseNumber(fields[2], "p", li + 1),
      d: parseNumber(fields[3], "d", li + 1),
      approx: parseNumber(fields[4], "approx", li + 1),
      exact: parseNumber(fields[5], "exact", li + 1),
      rel_err: parseOptionalNumber(fields[6], "rel_err", li + 1),
      log_scaled_abs_err: parseOptionalNumber(fields[7], "log_scaled_abs_err", li + 1),
      tail_prob: parseOptionalNumber(fields[8], "tail_prob", li + 1),
      underflow: underflowToken === "true",
    });
  }
  return rows;
}
