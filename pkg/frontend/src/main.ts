#!/usr/bin/env node
/**
 * Render an ensemble CSV into a panelled scatter figure.
 *
 *   ensemble-plots --input runs.csv --out figure.png --panel-by k
 *
 * One panel per distinct value of the panel column, five series per panel
 * (lambda, theta, zeta, eta, P) against sample index, a dashed reference at
 * 1/k, and a point-count report on stdout.
 */
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';
import { buildFigure, countPoints, formatReport, PanelBy } from './figure.js';
import { OutputFormat, renderToFile } from './render.js';
import { CsvError, readEnsembleCsv } from './schema.js';

async function run(): Promise<void> {
  const argv = await yargs(hideBin(process.argv))
    .option('input', { type: 'string', demandOption: true, describe: 'ensemble CSV file' })
    .option('out', { type: 'string', demandOption: true, describe: 'figure file to write' })
    .option('panel-by', {
      choices: ['k', 'n_pure'] as const,
      default: 'k' as const,
      describe: 'column whose distinct values become panels',
    })
    .option('format', {
      choices: ['png', 'svg'] as const,
      default: 'png' as const,
      describe: 'png (raster, default) or svg (vector)',
    })
    .option('width', { type: 'number', default: 1200 })
    .option('height', { type: 'number', default: 800 })
    .strict()
    .parse();

  const rows = readEnsembleCsv(argv.input);
  const figure = buildFigure(rows, argv['panel-by'] as PanelBy);
  renderToFile(figure, {
    out: argv.out,
    format: argv.format as OutputFormat,
    width: argv.width,
    height: argv.height,
  });
  console.log(formatReport(countPoints(figure, rows.length)));
  console.log(`wrote ${argv.out}`);
}

run().catch((err) => {
  if (err instanceof CsvError) {
    console.error(`error: ${err.message}`);
  } else {
    console.error(`error: ${(err as Error).stack ?? err}`);
  }
  process.exit(2);
});
