/**
 * The ensemble CSV contract. One row per random state; lambda_exact is blank
 * on rows where only the numeric maximizer ran (k above 4).
 */
import * as fs from 'fs';
import Papa from 'papaparse';

export const COLUMNS = [
  'sample_id',
  'k',
  'dim',
  'n_pure',
  'seed',
  'lambda_exact',
  'lambda_numeric',
  'theta',
  'zeta',
  'eta',
  'P',
  'purity',
] as const;

export type Column = (typeof COLUMNS)[number];

export interface EnsembleRow {
  sampleId: number;
  k: number;
  dim: number;
  nPure: number;
  seed: number;
  /** null when the CSV cell is blank */
  lambdaExact: number | null;
  lambdaNumeric: number;
  theta: number;
  zeta: number;
  eta: number;
  P: number;
  purity: number;
}

export class CsvError extends Error {}

function numeric(raw: string, column: Column, line: number): number {
  const value = Number(raw);
  if (raw.trim() === '' || !Number.isFinite(value)) {
    throw new CsvError(`line ${line}: column '${column}' has non-numeric value '${raw}'`);
  }
  return value;
}

/** Parse ensemble CSV text, validating the header and every cell. */
export function parseEnsembleCsv(text: string): EnsembleRow[] {
  if (text.trim() === '') {
    throw new CsvError('empty CSV: no header row');
  }
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new CsvError(`CSV parse error: ${first.message} (row ${first.row})`);
  }
  const rows = parsed.data;
  if (rows.length === 0) {
    throw new CsvError('empty CSV: no header row');
  }
  const header = rows[0];
  for (const column of COLUMNS) {
    if (!header.includes(column)) {
      throw new CsvError(`missing column '${column}'`);
    }
  }
  const index = new Map<Column, number>(COLUMNS.map((c) => [c, header.indexOf(c)]));
  const cell = (row: string[], c: Column) => row[index.get(c)!] ?? '';

  if (rows.length === 1) {
    throw new CsvError('empty CSV: header but no data rows');
  }
  return rows.slice(1).map((row, i) => {
    const line = i + 2;
    const lambdaExactRaw = cell(row, 'lambda_exact').trim();
    return {
      sampleId: numeric(cell(row, 'sample_id'), 'sample_id', line),
      k: numeric(cell(row, 'k'), 'k', line),
      dim: numeric(cell(row, 'dim'), 'dim', line),
      nPure: numeric(cell(row, 'n_pure'), 'n_pure', line),
      seed: numeric(cell(row, 'seed'), 'seed', line),
      lambdaExact: lambdaExactRaw === '' ? null : numeric(lambdaExactRaw, 'lambda_exact', line),
      lambdaNumeric: numeric(cell(row, 'lambda_numeric'), 'lambda_numeric', line),
      theta: numeric(cell(row, 'theta'), 'theta', line),
      zeta: numeric(cell(row, 'zeta'), 'zeta', line),
      eta: numeric(cell(row, 'eta'), 'eta', line),
      P: numeric(cell(row, 'P'), 'P', line),
      purity: numeric(cell(row, 'purity'), 'purity', line),
    };
  });
}

export function readEnsembleCsv(path: string): EnsembleRow[] {
  let text: string;
  try {
    text = fs.readFileSync(path, 'utf8');
  } catch (err) {
    throw new CsvError(`cannot read ${path}: ${(err as Error).message}`);
  }
  if (text.trim() === '') {
    throw new CsvError(`empty CSV: ${path}`);
  }
  return parseEnsembleCsv(text);
}
