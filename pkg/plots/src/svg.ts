/** Vector backend: one polyline per curve, legend with one entry per curve. */

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

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const fmt = (v: number): string => v.toFixed(2);

export function renderSvg(data: FigureData, title: string): string {
  const scales = makeScales(data);
  const xs = xValues(data);
  const allCurves = curves(data);
  const out: string[] = [];

  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="monospace">`,
  );
  out.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  out.push(
    `<text class="title" x="${(PLOT.left + PLOT.right) / 2}" y="28" ` +
      `text-anchor="middle" font-size="18">${escapeXml(title)}</text>`,
  );
  const subtitle = subtitleText(data);
  if (subtitle) {
    out.push(
      `<text class="subtitle" x="${(PLOT.left + PLOT.right) / 2}" y="50" ` +
        `text-anchor="middle" font-size="12" fill="#555">${escapeXml(subtitle)}</text>`,
    );
  }

  // frame and ticks
  out.push(
    `<rect x="${PLOT.left}" y="${PLOT.top}" width="${PLOT.right - PLOT.left}" ` +
      `height="${PLOT.bottom - PLOT.top}" fill="none" stroke="#333"/>`,
  );
  for (const t of xTicks()) {
    const px = scales.toX(t);
    out.push(
      `<line x1="${fmt(px)}" y1="${PLOT.bottom}" x2="${fmt(px)}" y2="${PLOT.bottom + 5}" stroke="#333"/>`,
    );
    out.push(
      `<text x="${fmt(px)}" y="${PLOT.bottom + 20}" text-anchor="middle" font-size="11">${formatTick(t)}</text>`,
    );
  }
  for (const t of yTicks(scales)) {
    const py = scales.toY(t);
    out.push(
      `<line x1="${PLOT.left - 5}" y1="${fmt(py)}" x2="${PLOT.left}" y2="${fmt(py)}" stroke="#333"/>`,
    );
    out.push(
      `<text x="${PLOT.left - 8}" y="${fmt(py + 4)}" text-anchor="end" font-size="11">${formatTick(t)}</text>`,
    );
  }
  out.push(
    `<text x="${(PLOT.left + PLOT.right) / 2}" y="${PLOT.bottom + 40}" text-anchor="middle" font-size="12">x</text>`,
  );

  // curves, file order; the target (first) drawn a little heavier
  out.push(`<g class="curves" fill="none">`);
  allCurves.forEach((curve, i) => {
    const pts = curve.values
      .map((v, j) => `${fmt(scales.toX(xs[j]))},${fmt(scales.toY(v))}`)
      .join(" ");
    const width = i === 0 ? 2.5 : 1.5;
    out.push(
      `<polyline class="curve" stroke="${curveColor(i)}" stroke-width="${width}" points="${pts}"/>`,
    );
  });
  out.push(`</g>`);

  // legend: one entry per curve, same order as the file columns
  out.push(`<g class="legend" font-size="12">`);
  allCurves.forEach((curve, i) => {
    const y = PLOT.top + 10 + i * 22;
    out.push(
      `<g class="legend-entry">` +
        `<line x1="${LEGEND_X}" y1="${y}" x2="${LEGEND_X + 26}" y2="${y}" ` +
        `stroke="${curveColor(i)}" stroke-width="3"/>` +
        `<text x="${LEGEND_X + 32}" y="${y + 4}">${escapeXml(curve.label)}</text>` +
        `</g>`,
    );
  });
  out.push(`</g>`);
  out.push(`</svg>`);
  return out.join("\n") + "\n";
}
