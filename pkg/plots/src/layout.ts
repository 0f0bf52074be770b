/** Shared geometry for the SVG and PNG backends. */

import type { Curve, FigureData } from "./figdata.js";
import { curves } from "./figdata.js";

export const WIDTH = 960;
export const HEIGHT = 560;
export const PLOT = { left: 70, top: 70, right: 660, bottom: 500 };
export const LEGEND_X = 678;

/** Target curve first, then operator curves. */
export const PALETTE = [
  "#000000",
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
];

export interface Scales {
  yMin: number;
  yMax: number;
  toX(x: number): number;
  toY(y: number): number;
}

/**
 * x is pinned to [0, 1]; y spans the data with 5% padding.  A flat data set
 * (zero dynamic range) gets a symmetric unit-scaled pad so the geometry
 * stays finite.
 */
export function makeScales(data: FigureData): Scales {
  let lo = Infinity;
  let hi = -Infinity;
  for (const curve of curves(data)) {
    for (const v of curve.values) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  let pad = (hi - lo) * 0.05;
  if (pad === 0) pad = Math.max(0.5, Math.abs(hi) * 0.05);
  const yMin = lo - pad;
  const yMax = hi + pad;
  return {
    yMin,
    yMax,
    toX: (x) => PLOT.left + x * (PLOT.right - PLOT.left),
    toY: (y) => PLOT.bottom - ((y - yMin) / (yMax - yMin)) * (PLOT.bottom - PLOT.top),
  };
}

export function xTicks(): number[] {
  return [0, 0.25, 0.5, 0.75, 1];
}

export function yTicks(scales: Scales): number[] {
  const ticks = [];
  for (let i = 0; i <= 4; i++) {
    ticks.push(scales.yMin + ((scales.yMax - scales.yMin) * i) / 4);
  }
  return ticks;
}

export function formatTick(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 0.001 && abs < 10000) {
    return String(Number(v.toPrecision(4)));
  }
  return v.toExponential(2);
}

/** Header pairs worth showing under the title, in a fixed order. */
export function subtitleText(data: FigureData): string {
  const keys = ["figure", "n", "p", "q", "function", "grid"];
  const parts = [];
  for (const key of keys) {
    if (key in data.params) parts.push(`${key}=${data.params[key]}`);
  }
  return parts.join("   ");
}

export function curveColor(index: number): string {
  return PALETTE[index % PALETTE.length];
}

export type { Curve };
