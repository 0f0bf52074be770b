/**
 * Dependency-free RGBA raster with line drawing, stroke-font text, and a
 * PNG encoder built on node:zlib (8-bit RGBA, no interlace, filter 0).
 */

import { deflateSync } from "node:zlib";

import { GLYPH_ADVANCE, strokesFor, textWidth } from "./font.js";

export type Color = [number, number, number];

export function parseColor(hex: string): Color {
  const v = parseInt(hex.slice(1), 16);
  return [(v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff];
}

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4).fill(255);
  }

  setPixel(x: number, y: number, color: Color): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const at = (y * this.width + x) * 4;
    this.data[at] = color[0];
    this.data[at + 1] = color[1];
    this.data[at + 2] = color[2];
    this.data[at + 3] = 255;
  }

  /** Bresenham segment stamped with a square pen of the given size. */
  drawLine(x0: number, y0: number, x1: number, y1: number, color: Color, size = 1): void {
    let ax = Math.round(x0);
    let ay = Math.round(y0);
    const bx = Math.round(x1);
    const by = Math.round(y1);
    const dx = Math.abs(bx - ax);
    const dy = -Math.abs(by - ay);
    const sx = ax < bx ? 1 : -1;
    const sy = ay < by ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      for (let i = 0; i < size; i++) {
        for (let j = 0; j < size; j++) {
          this.setPixel(ax + i, ay + j, color);
        }
      }
      if (ax === bx && ay === by) break;
      const doubled = 2 * err;
      if (doubled >= dy) {
        err += dy;
        ax += sx;
      }
      if (doubled <= dx) {
        err += dx;
        ay += sy;
      }
    }
  }

  drawPolyline(points: [number, number][], color: Color, size = 1): void {
    for (let i = 1; i < points.length; i++) {
      this.drawLine(points[i - 1][0], points[i - 1][1], points[i][0], points[i][1], color, size);
    }
  }

  /** Stroke-font text; (x, y) is the top-left of the first glyph box. */
  drawText(x: number, y: number, text: string, color: Color, scale = 1.5): void {
    let cx = x;
    for (const ch of text) {
      for (const stroke of strokesFor(ch)) {
        const pts = stroke.map(
          ([gx, gy]) => [cx + gx * scale, y + gy * scale] as [number, number],
        );
        this.drawPolyline(pts, color, 1);
      }
      cx += GLYPH_ADVANCE * scale;
    }
  }

  drawTextCentered(cx: number, y: number, text: string, color: Color, scale = 1.5): void {
    this.drawText(cx - (textWidth(text) * scale) / 2, y, text, color, scale);
  }

  drawTextRight(rx: number, y: number, text: string, color: Color, scale = 1.5): void {
    this.drawText(rx - textWidth(text) * scale, y, text, color, scale);
  }

  toPng(): Buffer {
    const bytesPerRow = this.width * 4 + 1;
    const raw = Buffer.alloc(bytesPerRow * this.height);
    for (let y = 0; y < this.height; y++) {
      raw[y * bytesPerRow] = 0; // filter: none
      raw.set(this.data.subarray(y * this.width * 4, (y + 1) * this.width * 4), y * bytesPerRow + 1);
    }
    const ihdr = Buffer.alloc(13);
    ihdr.writeUInt32BE(this.width, 0);
    ihdr.writeUInt32BE(this.height, 4);
    ihdr[8] = 8; // bit depth
    ihdr[9] = 6; // color type RGBA
    return Buffer.concat([
      Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]),
      chunk("IHDR", ihdr),
      chunk("IDAT", deflateSync(raw)),
      chunk("IEND", Buffer.alloc(0)),
    ]);
  }
}

const CRC_TABLE = (() => {
  const table = new Uint32Array(256);
  for (let n = 0; n < 256; n++) {
    let c = n;
    for (let k = 0; k < 8; k++) {
      c = c & 1 ? 0xedb88320 ^ (c >>> 1) : c >>> 1;
    }
    table[n] = c >>> 0;
  }
  return table;
})();

function crc32(buf: Buffer): number {
  let crc = 0xffffffff;
  for (const byte of buf) {
    crc = CRC_TABLE[(crc ^ byte) & 0xff] ^ (crc >>> 8);
  }
  return (crc ^ 0xffffffff) >>> 0;
}

function chunk(type: string, data: Buffer): Buffer {
  const head = Buffer.alloc(4);
  head.writeUInt32BE(data.length, 0);
  const body = Buffer.concat([Buffer.from(type, "ascii"), data]);
  const tail = Buffer.alloc(4);
  tail.writeUInt32BE(crc32(body), 0);
  return Buffer.concat([head, body, tail]);
}
