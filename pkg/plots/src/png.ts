/** Raster backend: same layout as the SVG renderer, drawn with the
 * built-in stroke font (case-folded for missing lowercase glyphs). */

import type { FigureData } from "./figdata.js";
import { curves, xValues } from "./figdata.js";
import {
  HEIGHT,
  LEGEND_X,
  PLOT,
  WIDTH,
  curveColor,
  formatTick,
  makeScales,
  subtitleText,
  xTicks,
  yTicks,
} from "./layout.js";
import { Raster, parseColor } from "./raster.js";

const INK = parseColor("#333333");
const MUTED = parseColor("#555555");

export function renderPng(data: FigureData, title: string): Buffer {
  const raster = new Raster(WIDTH, HEIGHT);
  const scales = makeScales(data);
  const xs = xValues(data);
  const allCurves = curves(data);
  const centerX = (PLOT.left + PLOT.right) / 2;

  raster.drawTextCentered(centerX, 16, title, INK, 2.0);
  const subtitle = subtitleText(data);
  if (subtitle) {
    raster.drawTextCentered(centerX, 42, subtitle, MUTED, 1.2);
  }

  // frame
  raster.drawPolyline(
    [
      [PLOT.left, PLOT.top],
      [PLOT.right, PLOT.top],
      [PLOT.right, PLOT.bottom],
      [PLOT.left, PLOT.bottom],
      [PLOT.left, PLOT.top],
    ],
    INK,
  );
  for (const t of xTicks()) {
    const px = scales.toX(t);
    raster.drawLine(px, PLOT.bottom, px, PLOT.bottom + 5, INK);
    raster.drawTextCentered(px, PLOT.bottom + 10, formatTick(t), INK, 1.2);
  }
  for (const t of yTicks(scales)) {
    const py = scales.toY(t);
    raster.drawLine(PLOT.left - 5, py, PLOT.left, py, INK);
    raster.drawTextRight(PLOT.left - 8, py - 5, formatTick(t), INK, 1.2);
  }
  raster.drawTextCentered(centerX, PLOT.bottom + 28, "x", INK, 1.4);

  allCurves.forEach((curve, i) => {
    const pts = curve.values.map(
      (v, j) => [scales.toX(xs[j]), scales.toY(v)] as [number, number],
    );
    raster.drawPolyline(pts, parseColor(curveColor(i)), i === 0 ? 3 : 2);
  });

  allCurves.forEach((curve, i) => {
    const y = PLOT.top + 10 + i * 22;
    raster.drawLine(LEGEND_X, y, LEGEND_X + 26, y, parseColor(curveColor(i)), 3);
    raster.drawText(LEGEND_X + 32, y - 6, curve.label, INK, 1.2);
  });

  return raster.toPng();
}
