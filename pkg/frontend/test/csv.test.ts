import { describe, expect, it } from "vitest";

import { CSV_HEADER, parseGrid, SchemaError } from "../src/csv.js";

const HEADER = CSV_HEADER.join(",");

const GOOD = `${HEADER}
2.0,6.0,0.25,0.3333333333333333,0.22727272727272727,0.22852835967057097,-0.005494418283958105,,,false
4.0,12.0,0.25,0.3333333333333333,0.2391304347826087,0.23933443398101177,-0.0008523626513533547,-6.1,0.4998,true
`;

describe("parseGrid", () => {
  it("parses valid rows with empty optional fields", () => {
    const rows = parseGrid(GOOD);
    expect(rows).toHaveLength(2);
    expect(rows[0].a).toBe(2.0);
    expect(rows[0].rel_err).toBeCloseTo(-0.005494418283958105, 15);
    expect(rows[0].log_scaled_abs_err).toBeNull();
    expect(rows[0].tail_prob).toBeNull();
    expect(rows[0].underflow).toBe(false);
    expect(rows[1].underflow).toBe(true);
    expect(rows[1].tail_prob).toBeCloseTo(0.4998, 12);
  });

  it("rejects a renamed column, naming it", () => {
    const bad = GOOD.replace("rel_err", "relative_error");
    expect(() => parseGrid(bad, "bad.csv")).toThrowError(/column 7.*rel_err/s);
  });

  it("rejects a missing column", () => {
    const bad = GOOD.replace(",underflow", "");
    expect(() => parseGrid(bad)).toThrow(SchemaError);
  });

  it("rejects an extra column", () => {
    const lines = GOOD.trimEnd().split("\n");
    const bad = [lines[0] + ",extra", lines[1] + ",1", lines[2] + ",2"].join("\n");
    expect(() => parseGrid(bad)).toThrowError(/extra/);
  });

  it("rejects empty files and header-only files", () => {
    expect(() => parseGrid("")).toThrowError(/empty/);
    expect(() => parseGrid(`${HEADER}\n`)).toThrowError(/no data rows/);
  });

  it("rejects non-numeric required fields", () => {
    const bad = GOOD.replace("2.0,6.0", "x,6.0");
    expect(() => parseGrid(bad)).toThrowError(/column "a"/);
  });

  it("rejects malformed underflow flags", () => {
    const bad = GOOD.replace(",false", ",FALSE");
    expect(() => parseGrid(bad)).toThrowError(/underflow/);
  });
});
