/** Deterministic SVG line charts: two axis flavours (linear, log10),
 * grid, legend, fixed palette. No timestamps and no randomness, so the
 * same chart spec always yields the same bytes. */

export type AxisScale = 'linear' | 'log';

export interface Axis {
  label: string;
  scale: AxisScale;
  min: number;
  max: number;
}

export interface ChartSeries {
  label: string;
  x: number[];
  y: number[];
}

export interface ChartSpec {
  title: string;
  xAxis: Axis;
  yAxis: Axis;
  series: ChartSeries[];
}

export const WIDTH = 760;
export const HEIGHT = 480;
const MARGIN = { top: 40, right: 24, bottom: 52, left: 72 };

const PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b'];

function fmt(v: number): string {
  return v.toFixed(2).replace(/\.00$/, '');
}

function esc(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function project(axis: Axis, v: number, lo: number, hi: number): number {
  const [a, b] =
    axis.scale === 'log'
      ? [Math.log10(axis.min), Math.log10(axis.max)]
      : [axis.min, axis.max];
  const t = ((axis.scale === 'log' ? Math.log10(v) : v) - a) / (b - a);
  return lo + t * (hi - lo);
}

function tickLabel(v: number): string {
  if (v !== 0 && (Math.abs(v) < 1e-3 || Math.abs(v) >= 1e4)) {
    const exp = Math.round(Math.log10(Math.abs(v)));
    const mant = v / 10 ** exp;
    return Math.abs(mant - 1) < 1e-9 ? `1e${exp}` : `${mant.toPrecision(2)}e${exp}`;
  }
  return String(Number(v.toPrecision(6)));
}

/** Tick positions: multiples of a 1/2/5 step for linear axes, decades
 * for log axes. */
export function axisTicks(axis: Axis): number[] {
  if (axis.scale === 'log') {
    const lo = Math.ceil(Math.log10(axis.min) - 1e-9);
    const hi = Math.floor(Math.log10(axis.max) + 1e-9);
    const ticks: number[] = [];
    for (let e = lo; e <= hi; e++) ticks.push(10 ** e);
    return ticks;
  }
  const span = axis.max - axis.min;
  const raw = span / 6;
  const mag = 10 ** Math.floor(Math.log10(raw));
  const step = [1, 2, 5, 10].map((s) => s * mag).find((s) => span / s <= 7) ?? 10 * mag;
  const ticks: number[] = [];
  for (let v = Math.ceil(axis.min / step) * step; v <= axis.max + step / 1e6; v += step) {
    ticks.push(Math.abs(v) < step / 1e6 ? 0 : v);
  }
  return ticks;
}

export function renderChart(spec: ChartSpec): string {
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  const px = (v: number) => project(spec.xAxis, v, x0, x1);
  const py = (v: number) => project(spec.yAxis, v, y0, y1);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(
    `<text x="${(x0 + x1) / 2}" y="22" text-anchor="middle" font-size="15">${esc(spec.title)}</text>`,
  );

  for (const t of axisTicks(spec.xAxis)) {
    const x = fmt(px(t));
    parts.push(
      `<line x1="${x}" y1="${y0}" x2="${x}" y2="${y1}" stroke="#dddddd" stroke-width="1"/>`,
      `<text x="${x}" y="${y0 + 18}" text-anchor="middle" font-size="11">${esc(tickLabel(t))}</text>`,
    );
  }
  for (const t of axisTicks(spec.yAxis)) {
    const y = fmt(py(t));
    parts.push(
      `<line x1="${x0}" y1="${y}" x2="${x1}" y2="${y}" stroke="#dddddd" stroke-width="1"/>`,
      `<text x="${x0 - 6}" y="${y}" text-anchor="end" dominant-baseline="middle" font-size="11">${esc(tickLabel(t))}</text>`,
    );
  }

  parts.push(
    `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" fill="none" stroke="#333333"/>`,
    `<text x="${(x0 + x1) / 2}" y="${HEIGHT - 14}" text-anchor="middle" font-size="13">${esc(spec.xAxis.label)}</text>`,
    `<text x="20" y="${(y0 + y1) / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 20 ${(y0 + y1) / 2})">${esc(spec.yAxis.label)}</text>`,
  );

  spec.series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length]!;
    const pts = s.x.map((xv, k) => `${fmt(px(xv))},${fmt(py(s.y[k]!))}`).join(' ');
    parts.push(
      `<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.5"/>`,
    );
  });

  const legendX = x1 - 190;
  const legendY = y1 + 10;
  parts.push(
    `<rect x="${legendX - 8}" y="${legendY - 14}" width="190" height="${spec.series.length * 18 + 10}" fill="white" fill-opacity="0.85" stroke="#999999"/>`,
  );
  spec.series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length]!;
    const y = legendY + i * 18;
    parts.push(
      `<line x1="${legendX}" y1="${y}" x2="${legendX + 26}" y2="${y}" stroke="${color}" stroke-width="2"/>`,
      `<text x="${legendX + 32}" y="${y + 4}" font-size="12">${esc(s.label)}</text>`,
    );
  });

  parts.push('</svg>');
  return parts.join('\n') + '\n';
}
