#!/usr/bin/env node
import { realpathSync } from 'node:fs';
import { pathToFileURL } from 'node:url';
import yargs from 'yargs';
import { render } from './figure.js';
import { FigureKind } from './csv.js';

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = yargs(argv)
      .scriptName('plot')
      .usage('$0 --kind psd|ccdf|ber --in <csv>... --labels <l1,l2,...> --out <file>')
      .option('kind', {
        choices: ['psd', 'ccdf', 'ber'] as const,
        demandOption: true,
        describe: 'which report schema the inputs follow',
      })
      .option('in', {
        type: 'string',
        array: true,
        demandOption: true,
        describe: 'input CSV report files',
      })
      .option('labels', {
        type: 'string',
        describe: 'comma-separated legend labels, one per series',
      })
      .option('out', {
        type: 'string',
        demandOption: true,
        describe: 'output SVG path',
      })
      .strict()
      .fail((msg, err) => {
        throw err ?? new Error(msg);
      })
      .exitProcess(false)
      .parseSync();
  } catch (err) {
    process.stderr.write(`plot: ${(err as Error).message}\n`);
    return 2;
  }

  try {
    render({
      kind: parsed.kind as FigureKind,
      inputs: parsed.in,
      labels: parsed.labels?.split(','),
      out: parsed.out,
    });
  } catch (err) {
    process.stderr.write(`plot: ${(err as Error).message}\n`);
    return 1;
  }
  process.stdout.write(`${parsed.out}\n`);
  return 0;
}

function invokedDirectly(): boolean {
  const entry = process.argv[1];
  if (entry === undefined) return false;
  try {
    // bin shims are symlinks; compare against the resolved target
    return import.meta.url === pathToFileURL(realpathSync(entry)).href;
  } catch {
    return false;
  }
}
if (invokedDirectly()) {
  process.exitCode = main(process.argv.slice(2));
}
