import { writeFileSync } from 'node:fs';
import { FigureKind, Series, loadSeries } from './csv.js';
import { Axis, ChartSeries, HEIGHT, WIDTH, renderChart } from './svg.js';

/** Zero BER cannot sit on a log axis; rows at or below this floor are
 * drawn at the floor instead of being dropped. */
export const BER_FLOOR = 1e-7;
/** Bottom of the CCDF probability axis; exact-zero tail values are
 * clamped here so the curve visibly runs into the floor. */
export const CCDF_FLOOR = 1e-4;

export interface FigureSpec {
  kind: FigureKind;
  inputs: string[];
  labels?: string[];
  out: string;
  xRange?: [number, number];
  yRange?: [number, number];
}

export interface RenderedFigure {
  svg: string;
  width: number;
  height: number;
  xAxis: Axis;
  yAxis: Axis;
  /** Series exactly as plotted, floors applied. */
  series: ChartSeries[];
}

function defaultLabels(series: Series[]): string[] {
  const waveforms = series.map((s) => s.waveform);
  if (new Set(waveforms).size === waveforms.length) return waveforms;
  return series.map((s) => `${s.scenarioId}/${s.waveform}`);
}

function dataRange(values: number[][]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const arr of values) {
    for (const v of arr) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  return [lo, hi];
}

function padLinear([lo, hi]: [number, number]): [number, number] {
  const pad = (hi - lo || 1) * 0.04;
  return [lo - pad, hi + pad];
}

function decadeRange([lo, hi]: [number, number], floor: number): [number, number] {
  const bottom = Math.max(lo, floor);
  return [
    10 ** Math.floor(Math.log10(bottom) + 1e-9),
    10 ** Math.ceil(Math.log10(hi) - 1e-9),
  ];
}

interface KindRule {
  title: string;
  xLabel: string;
  yLabel: string;
  yScale: 'linear' | 'log';
  clampY?: number;
  yRange(plotted: ChartSeries[]): [number, number];
}

const KIND_RULES: Record<FigureKind, KindRule> = {
  psd: {
    title: 'Power spectral density',
    xLabel: 'normalized frequency',
    yLabel: 'power (dB)',
    yScale: 'linear',
    yRange: (plotted) => padLinear(dataRange(plotted.map((s) => s.y))),
  },
  ccdf: {
    title: 'PAPR complementary CDF',
    xLabel: 'threshold (dB)',
    yLabel: 'P(PAPR > threshold)',
    yScale: 'log',
    clampY: CCDF_FLOOR,
    yRange: (plotted) => decadeRange(dataRange(plotted.map((s) => s.y)), CCDF_FLOOR),
  },
  ber: {
    title: 'Bit error rate',
    xLabel: 'SNR (dB)',
    yLabel: 'bit error rate',
    yScale: 'log',
    clampY: BER_FLOOR,
    yRange: (plotted) => decadeRange(dataRange(plotted.map((s) => s.y)), BER_FLOOR),
  },
};

/** Read the input reports, apply the kind's floors and axis rules, and
 * write one SVG figure. Inputs are only ever read. */
export function render(fig: FigureSpec): RenderedFigure {
  const rule = KIND_RULES[fig.kind];
  const series = loadSeries(fig.inputs, fig.kind);

  let labels: string[];
  if (fig.labels !== undefined) {
    if (fig.labels.length !== series.length) {
      throw new Error(
        `labels: got ${fig.labels.length} for ${series.length} series`,
      );
    }
    labels = fig.labels;
  } else {
    labels = defaultLabels(series);
  }

  const plotted: ChartSeries[] = series.map((s, i) => ({
    label: labels[i]!,
    x: [...s.x],
    y: s.y.map((v) => (rule.clampY !== undefined ? Math.max(v, rule.clampY) : v)),
  }));

  const xAxis: Axis = {
    label: rule.xLabel,
    scale: 'linear',
    min: 0,
    max: 0,
  };
  [xAxis.min, xAxis.max] = fig.xRange ?? padLinear(dataRange(plotted.map((s) => s.x)));

  const yAxis: Axis = {
    label: rule.yLabel,
    scale: rule.yScale,
    min: 0,
    max: 0,
  };
  [yAxis.min, yAxis.max] = fig.yRange ?? rule.yRange(plotted);

  const svg = renderChart({ title: rule.title, xAxis, yAxis, series: plotted });
  writeFileSync(fig.out, svg);
  return { svg, width: WIDTH, height: HEIGHT, xAxis, yAxis, series: plotted };
}
