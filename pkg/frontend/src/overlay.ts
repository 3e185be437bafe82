// Radar overlay: system reference, attack polygon, union-of-selected
// polygon, drawn from the vertices the API supplies. The only client-side
// transformation is the affine mapping to canvas pixels; the same
// evaluation response always produces the identical SVG string.

import type { EvaluateResponse, ProfilePayload } from "./types.js";

export const CANVAS = 600;
export const RADIUS_FRACTION = 0.38;

export const ATTACK_COLOR = "#2a6fbb";
export const MITIGATION_COLOR = "#e0b020";
export const REFERENCE_COLOR = "#999999";
export const AXIS_COLOR = "#c8c8c8";

export interface OverlayOptions {
  showZeroAxes?: boolean;
  opacity?: number;
  size?: number;
}

export function toCanvas(
  point: [number, number],
  size: number = CANVAS,
): [number, number] {
  const scale = (size * RADIUS_FRACTION) / 100;
  return [size / 2 + point[0] * scale, size / 2 - point[1] * scale];
}

function px(value: number): string {
  return value.toFixed(2);
}

function points(profile: ProfilePayload, size: number): string {
  return profile.vertices
    .map((v) => toCanvas(v, size).map(px).join(","))
    .join(" ");
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function polygonWithTooltips(
  profile: ProfilePayload,
  color: string,
  opacity: number,
  size: number,
): string {
  const parts = [
    `<polygon points="${points(profile, size)}" fill="${color}" ` +
      `fill-opacity="${opacity}" stroke="${color}" stroke-width="2"/>`,
  ];
  profile.vertices.forEach((vertex, i) => {
    const [cx, cy] = toCanvas(vertex, size);
    const label = `${profile.dimensions[i]}: ${profile.contributions_pct[i].toFixed(2)}%`;
    parts.push(
      `<circle cx="${px(cx)}" cy="${px(cy)}" r="4" fill="${color}">` +
        `<title>${escapeXml(`${profile.name} | ${label}`)}</title></circle>`,
    );
  });
  return parts.join("\n");
}

function isAllZero(profile: ProfilePayload): boolean {
  return profile.contributions_pct.every((c) => c === 0);
}

export function buildOverlay(
  evaluation: EvaluateResponse,
  options: OverlayOptions = {},
): string {
  const size = options.size ?? CANVAS;
  const opacity = options.opacity ?? 0.3;
  const showZeroAxes = options.showZeroAxes ?? false;
  const { system, attack, mitigation } = evaluation;

  const drawn = isAllZero(mitigation) ? [attack] : [attack, mitigation];
  const lines: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" ` +
      `width="${size}" height="${size}">`,
  ];

  // axis rays to the 100% reference endpoints, hidden where nothing reaches
  system.vertices.forEach((vertex, i) => {
    if (!showZeroAxes && drawn.every((p) => p.contributions_pct[i] === 0)) {
      return;
    }
    const [x, y] = toCanvas(vertex, size);
    lines.push(
      `<line x1="${px(size / 2)}" y1="${px(size / 2)}" x2="${px(x)}" y2="${px(y)}" ` +
        `stroke="${AXIS_COLOR}" stroke-width="1"/>`,
    );
    const [lx, ly] = toCanvas([vertex[0] * 1.1, vertex[1] * 1.1], size);
    lines.push(
      `<text x="${px(lx)}" y="${px(ly)}" font-size="12" text-anchor="middle" ` +
        `fill="#444444">${escapeXml(system.dimensions[i])}</text>`,
    );
  });

  lines.push(
    `<polygon points="${points(system, size)}" fill="none" ` +
      `stroke="${REFERENCE_COLOR}" stroke-width="1" stroke-dasharray="6 4"/>`,
  );
  lines.push(polygonWithTooltips(attack, ATTACK_COLOR, opacity, size));
  if (!isAllZero(mitigation)) {
    lines.push(polygonWithTooltips(mitigation, MITIGATION_COLOR, opacity, size));
  }
  lines.push("</svg>");
  return lines.join("\n");
}
