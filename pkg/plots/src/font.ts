/**
 * Minimal built-in stroke font for the raster backend.
 *
 * Each glyph is a list of polylines on a 4-wide, 8-tall box (y grows
 * downward, baseline at y = 8; descenders may reach y = 9).  Lowercase
 * input is case-folded to uppercase before lookup; characters without a
 * glyph render as a small box.  Good enough for axis labels and legends
 * without pulling in a font-rendering dependency.
 */

export type Stroke = [number, number][];

// 7-segment layout shared by the digits.
const SEG: Record<string, Stroke> = {
  A: [[0, 0], [4, 0]],
  B: [[4, 0], [4, 4]],
  C: [[4, 4], [4, 8]],
  D: [[0, 8], [4, 8]],
  E: [[0, 4], [0, 8]],
  F: [[0, 0], [0, 4]],
  G: [[0, 4], [4, 4]],
};

function seg(pattern: string): Stroke[] {
  return [...pattern].map((name) => SEG[name]);
}

const GLYPHS: Record<string, Stroke[]> = {
  "0": [...seg("ABCDEF"), [[0, 6], [4, 2]]],
  "1": [[[1, 1], [2, 0], [2, 8]], [[1, 8], [3, 8]]],
  "2": seg("ABGED"),
  "3": seg("ABGCD"),
  "4": seg("FGBC"),
  "5": seg("AFGCD"),
  "6": seg("AFGECD"),
  "7": seg("ABC"),
  "8": seg("ABCDEFG"),
  "9": seg("ABCDFG"),
  A: [[[0, 8], [2, 0], [4, 8]], [[1, 5], [3, 5]]],
  B: [
    [[0, 0], [0, 8]],
    [[0, 0], [3, 0], [4, 1], [4, 3], [3, 4], [0, 4]],
    [[3, 4], [4, 5], [4, 7], [3, 8], [0, 8]],
  ],
  C: [[[4, 1], [3, 0], [1, 0], [0, 1], [0, 7], [1, 8], [3, 8], [4, 7]]],
  D: [[[0, 0], [0, 8]], [[0, 0], [3, 0], [4, 2], [4, 6], [3, 8], [0, 8]]],
  E: [[[4, 0], [0, 0], [0, 8], [4, 8]], [[0, 4], [3, 4]]],
  F: [[[4, 0], [0, 0], [0, 8]], [[0, 4], [3, 4]]],
  G: [[[4, 1], [3, 0], [1, 0], [0, 1], [0, 7], [1, 8], [3, 8], [4, 7], [4, 5], [2, 5]]],
  H: [[[0, 0], [0, 8]], [[4, 0], [4, 8]], [[0, 4], [4, 4]]],
  I: [[[1, 0], [3, 0]], [[2, 0], [2, 8]], [[1, 8], [3, 8]]],
  J: [[[4, 0], [4, 7], [3, 8], [1, 8], [0, 7]]],
  K: [[[0, 0], [0, 8]], [[4, 0], [0, 4], [4, 8]]],
  L: [[[0, 0], [0, 8], [4, 8]]],
  M: [[[0, 8], [0, 0], [2, 3], [4, 0], [4, 8]]],
  N: [[[0, 8], [0, 0], [4, 8], [4, 0]]],
  O: [[[1, 0], [3, 0], [4, 1], [4, 7], [3, 8], [1, 8], [0, 7], [0, 1], [1, 0]]],
  P: [[[0, 8], [0, 0], [3, 0], [4, 1], [4, 3], [3, 4], [0, 4]]],
  Q: [
    [[1, 0], [3, 0], [4, 1], [4, 7], [3, 8], [1, 8], [0, 7], [0, 1], [1, 0]],
    [[2, 5], [4, 8]],
  ],
  R: [[[0, 8], [0, 0], [3, 0], [4, 1], [4, 3], [3, 4], [0, 4]], [[1, 4], [4, 8]]],
  S: [
    [[4, 1], [3, 0], [1, 0], [0, 1], [0, 3], [1, 4], [3, 4], [4, 5], [4, 7], [3, 8], [1, 8], [0, 7]],
  ],
  T: [[[0, 0], [4, 0]], [[2, 0], [2, 8]]],
  U: [[[0, 0], [0, 7], [1, 8], [3, 8], [4, 7], [4, 0]]],
  V: [[[0, 0], [2, 8], [4, 0]]],
  W: [[[0, 0], [1, 8], [2, 4], [3, 8], [4, 0]]],
  X: [[[0, 0], [4, 8]], [[4, 0], [0, 8]]],
  Y: [[[0, 0], [2, 4], [4, 0]], [[2, 4], [2, 8]]],
  Z: [[[0, 0], [4, 0], [0, 8], [4, 8]]],
  " ": [],
  ".": [[[2, 7], [2, 8]]],
  ",": [[[2, 7], [2, 8], [1, 9]]],
  "=": [[[0, 3], [4, 3]], [[0, 5], [4, 5]]],
  ";": [[[2, 2], [2, 3]], [[2, 7], [2, 8], [1, 9]]],
  ":": [[[2, 2], [2, 3]], [[2, 7], [2, 8]]],
  "[": [[[3, 0], [1, 0], [1, 8], [3, 8]]],
  "]": [[[1, 0], [3, 0], [3, 8], [1, 8]]],
  "(": [[[3, 0], [2, 1], [2, 7], [3, 8]]],
  ")": [[[1, 0], [2, 1], [2, 7], [1, 8]]],
  "-": [[[0, 4], [4, 4]]],
  "+": [[[0, 4], [4, 4]], [[2, 2], [2, 6]]],
  _: [[[0, 8], [4, 8]]],
  "/": [[[0, 8], [4, 0]]],
  "<": [[[3, 0], [1, 4], [3, 8]]],
  ">": [[[1, 0], [3, 4], [1, 8]]],
  "'": [[[2, 0], [2, 2]]],
  '"': [[[1, 0], [1, 2]], [[3, 0], [3, 2]]],
  "!": [[[2, 0], [2, 5]], [[2, 7], [2, 8]]],
  "?": [[[0, 1], [1, 0], [3, 0], [4, 1], [4, 3], [2, 4], [2, 5]], [[2, 7], [2, 8]]],
  "#": [[[1, 0], [1, 8]], [[3, 0], [3, 8]], [[0, 3], [4, 3]], [[0, 5], [4, 5]]],
  "%": [
    [[0, 8], [4, 0]],
    [[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]],
    [[3, 7], [4, 7], [4, 8], [3, 8], [3, 7]],
  ],
  "*": [[[0, 4], [4, 4]], [[1, 1], [3, 7]], [[3, 1], [1, 7]]],
};

const FALLBACK: Stroke[] = [[[0, 0], [4, 0], [4, 8], [0, 8], [0, 0]]];

/** Glyph box width in font units (advance adds inter-glyph spacing). */
export const GLYPH_WIDTH = 4;
export const GLYPH_HEIGHT = 8;
export const GLYPH_ADVANCE = 6;

export function strokesFor(char: string): Stroke[] {
  const glyph = GLYPHS[char] ?? GLYPHS[char.toUpperCase()];
  return glyph ?? FALLBACK;
}

/** Rendered text width in font units. */
export function textWidth(text: string): number {
  return text.length === 0 ? 0 : text.length * GLYPH_ADVANCE - (GLYPH_ADVANCE - GLYPH_WIDTH);
}
