#!/usr/bin/env node
/**
 * render <input> <output> [--title T] [--format png|svg] [--dump-data PATH]
 *
 * Reads a figure-data file (CSV or JSON, auto-detected), writes an SVG or
 * PNG image.  The format defaults to the output extension (falling back to
 * svg).  --dump-data writes the parsed series back out as JSON, bit-exact,
 * for checking that rendering never touches the numbers.
 *
 * Exit status: 0 success, 1 malformed input or usage problems.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { dumpData, parseFigureData } from "./figdata.js";
import { renderPng } from "./png.js";
import { renderSvg } from "./svg.js";

const USAGE =
  "usage: pq-plots render <input> <output> [--title T] [--format png|svg] [--dump-data PATH]";

export function run(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      allowPositionals: true,
      options: {
        title: { type: "string" },
        format: { type: "string" },
        "dump-data": { type: "string" },
      },
    });
  } catch (err) {
    console.error(`pq-plots: ${(err as Error).message}\n${USAGE}`);
    return 1;
  }
  const [command, input, output] = parsed.positionals;
  if (command !== "render" || !input || !output || parsed.positionals.length > 3) {
    console.error(USAGE);
    return 1;
  }
  const format = parsed.values.format ?? (output.endsWith(".png") ? "png" : "svg");
  if (format !== "png" && format !== "svg") {
    console.error(`pq-plots: unknown format '${format}' (expected png or svg)`);
    return 1;
  }
  const title = parsed.values.title ?? "";

  let text: string;
  try {
    text = readFileSync(input, "utf-8");
  } catch (err) {
    console.error(`pq-plots: ${input}: ${(err as Error).message}`);
    return 1;
  }
  try {
    const data = parseFigureData(text);
    if (parsed.values["dump-data"]) {
      writeFileSync(parsed.values["dump-data"], dumpData(data));
    }
    if (format === "png") {
      writeFileSync(output, renderPng(data, title));
    } else {
      writeFileSync(output, renderSvg(data, title), "utf-8");
    }
  } catch (err) {
    console.error(`pq-plots: ${input}: ${(err as Error).message}`);
    return 1;
  }
  return 0;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js") || entry.endsWith("pq-plots")) {
  process.exit(run(process.argv.slice(2)));
}
