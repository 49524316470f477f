import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { fileURLToPath } from 'node:url';
import { describe, expect, test } from 'vitest';
import { BER_FLOOR, CCDF_FLOOR, render } from '../src/figure.js';
import { axisTicks } from '../src/svg.js';

const FIXTURES = fileURLToPath(new URL('../fixtures', import.meta.url));

function out(name: string): string {
  return join(mkdtempSync(join(tmpdir(), 'plotkit-fig-')), name);
}

describe('ber figures', () => {
  test('zero rows are clamped to the floor, not dropped', () => {
    const fig = render({ kind: 'ber', inputs: [join(FIXTURES, 'ber.csv')], out: out('b.svg') });
    const series = fig.series[0]!;
    expect(series.x).toHaveLength(7);
    expect(series.y.at(-1)).toBe(BER_FLOOR);
    expect(Math.min(...series.y)).toBe(BER_FLOOR);
    expect(fig.yAxis.min).toBeCloseTo(BER_FLOOR, 12);
  });

  test('log y-axis ticks are decades', () => {
    const fig = render({ kind: 'ber', inputs: [join(FIXTURES, 'ber.csv')], out: out('b.svg') });
    const ticks = axisTicks(fig.yAxis);
    expect(ticks[0]).toBeCloseTo(1e-7, 12);
    expect(ticks.at(-1)).toBe(1);
    for (let i = 1; i < ticks.length; i++) {
      expect(ticks[i]! / ticks[i - 1]!).toBeCloseTo(10, 9);
    }
  });
});

describe('ccdf figures', () => {
  test('two waveforms give two monotone curves', () => {
    const fig = render({ kind: 'ccdf', inputs: [join(FIXTURES, 'ccdf.csv')], out: out('c.svg') });
    expect(fig.series).toHaveLength(2);
    for (const s of fig.series) {
      for (let i = 1; i < s.y.length; i++) {
        expect(s.y[i]!).toBeLessThanOrEqual(s.y[i - 1]!);
      }
    }
    const polylines = fig.svg.match(/<polyline /g) ?? [];
    expect(polylines).toHaveLength(2);
  });

  test('probability axis is clamped at the configured floor', () => {
    const fig = render({ kind: 'ccdf', inputs: [join(FIXTURES, 'ccdf.csv')], out: out('c.svg') });
    expect(Math.min(...fig.series.flatMap((s) => s.y))).toBe(CCDF_FLOOR);
    expect(fig.yAxis.min).toBeLessThanOrEqual(CCDF_FLOOR);
  });
});

describe('psd figures', () => {
  test('y-axis spans at least the data range', () => {
    const fig = render({ kind: 'psd', inputs: [join(FIXTURES, 'psd.csv')], out: out('p.svg') });
    const values = fig.series.flatMap((s) => s.y);
    expect(fig.yAxis.min).toBeLessThanOrEqual(Math.min(...values));
    expect(fig.yAxis.max).toBeGreaterThanOrEqual(Math.max(...values));
    expect(fig.yAxis.scale).toBe('linear');
  });

  test('default labels are the waveform names', () => {
    const fig = render({ kind: 'psd', inputs: [join(FIXTURES, 'psd.csv')], out: out('p.svg') });
    expect(fig.series.map((s) => s.label)).toEqual(['cp-ofdm', 'w-ofdm', 'f-ofdm']);
  });
});

describe('labels and ranges', () => {
  test('explicit labels land in the legend', () => {
    const fig = render({
      kind: 'psd',
      inputs: [join(FIXTURES, 'psd.csv')],
      labels: ['plain', 'windowed', 'filtered'],
      out: out('p.svg'),
    });
    expect(fig.svg).toContain('>windowed</text>');
  });

  test('label count mismatch is rejected with both counts', () => {
    expect(() =>
      render({
        kind: 'psd',
        inputs: [join(FIXTURES, 'psd.csv')],
        labels: ['a', 'b'],
        out: out('p.svg'),
      }),
    ).toThrow(/labels: got 2 for 3 series/);
  });

  test('axis range overrides are honored', () => {
    const fig = render({
      kind: 'psd',
      inputs: [join(FIXTURES, 'psd.csv')],
      out: out('p.svg'),
      xRange: [-0.25, 0.25],
      yRange: [-90, 0],
    });
    expect(fig.xAxis.min).toBe(-0.25);
    expect(fig.yAxis.max).toBe(0);
  });
});

describe('determinism', () => {
  test('same inputs give identical bytes and dimensions', () => {
    const a = render({ kind: 'ccdf', inputs: [join(FIXTURES, 'ccdf.csv')], out: out('a.svg') });
    const b = render({ kind: 'ccdf', inputs: [join(FIXTURES, 'ccdf.csv')], out: out('b.svg') });
    expect(a.svg).toBe(b.svg);
    expect([a.width, a.height]).toEqual([b.width, b.height]);
    expect(a.series).toEqual(b.series);
  });
});
