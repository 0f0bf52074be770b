/**
 * Parser for the experiment CLI's figure-data contract.
 *
 * CSV: a `# key=value ...` parameter header, a column-name line, numeric
 * rows, optional `# verdict key=value` footers.  JSON: one object with
 * `params`, `columns`, `rows` (and optionally `verdicts`).
 *
 * The first column is the shared x grid; every further column is one named
 * curve.  Numbers are never transformed: what the file says is what gets
 * plotted and what the debug dump returns.
 */

export interface FigureData {
  params: Record<string, string>;
  columns: string[];
  /** Row-major numeric data, rows[i][j] for column j. */
  rows: number[][];
}

export interface Curve {
  label: string;
  values: number[];
}

export class ParseError extends Error {}

function fail(message: string): never {
  throw new ParseError(message);
}

function parseNumber(text: string, line: number, field: number): number {
  const value = Number(text);
  if (text.trim() === "" || Number.isNaN(value)) {
    fail(`line ${line}, field ${field}: not a number: '${text}'`);
  }
  return value;
}

export function parseCsv(text: string): FigureData {
  const params: Record<string, string> = {};
  const rows: number[][] = [];
  let columns: string[] | null = null;

  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i];
    const lineno = i + 1;
    if (line.trim() === "") continue;
    if (line.startsWith("# verdict ")) continue; // trailing metadata, not data
    if (line.startsWith("#")) {
      for (const pair of line.slice(1).trim().split(/\s+/)) {
        const eq = pair.indexOf("=");
        if (eq > 0) params[pair.slice(0, eq)] = pair.slice(eq + 1);
      }
      continue;
    }
    if (columns === null) {
      columns = line.split(",");
      continue;
    }
    const cells = line.split(",");
    if (cells.length !== columns.length) {
      fail(`line ${lineno}: expected ${columns.length} cells, got ${cells.length}`);
    }
    rows.push(cells.map((cell, j) => parseNumber(cell, lineno, j + 1)));
  }
  if (columns === null) fail("no column line found");
  return validate({ params, columns, rows });
}

export function parseJson(text: string): FigureData {
  let obj: unknown;
  try {
    obj = JSON.parse(text);
  } catch (err) {
    fail(`invalid JSON: ${(err as Error).message}`);
  }
  const record = obj as { params?: unknown; columns?: unknown; rows?: unknown };
  if (!Array.isArray(record.columns) || !record.columns.every((c) => typeof c === "string")) {
    fail("field 'columns': expected an array of strings");
  }
  if (!Array.isArray(record.rows)) fail("field 'rows': expected an array of arrays");
  const columns = record.columns as string[];
  const rows = (record.rows as unknown[]).map((row, i) => {
    if (!Array.isArray(row) || row.length !== columns.length) {
      fail(`row ${i + 1}: expected ${columns.length} cells`);
    }
    return row.map((cell, j) => {
      if (typeof cell !== "number" || Number.isNaN(cell)) {
        fail(`row ${i + 1}, field ${j + 1}: not a number: '${String(cell)}'`);
      }
      return cell;
    });
  });
  const params: Record<string, string> = {};
  if (record.params && typeof record.params === "object") {
    for (const [k, v] of Object.entries(record.params as Record<string, unknown>)) {
      params[k] = String(v);
    }
  }
  return validate({ params, columns, rows });
}

function validate(data: FigureData): FigureData {
  if (data.columns.length < 3) {
    fail(`expected at least 3 columns (x, target, one operator curve), got ${data.columns.length}`);
  }
  if (data.rows.length < 2) {
    fail(`expected at least 2 data rows, got ${data.rows.length}`);
  }
  return data;
}

/** Parse file content, sniffing JSON (leading '{') vs CSV. */
export function parseFigureData(text: string): FigureData {
  return text.trimStart().startsWith("{") ? parseJson(text) : parseCsv(text);
}

export function xValues(data: FigureData): number[] {
  return data.rows.map((row) => row[0]);
}

export function curves(data: FigureData): Curve[] {
  return data.columns.slice(1).map((label, j) => ({
    label,
    values: data.rows.map((row) => row[j + 1]),
  }));
}

/**
 * Debug dump of the parsed series: exactly the numbers that were read, in
 * file order.  JSON numbers round-trip bit-exactly, so re-parsing the dump
 * reproduces the input values.
 */
export function dumpData(data: FigureData): string {
  return JSON.stringify({ columns: data.columns, rows: data.rows }) + "\n";
}
