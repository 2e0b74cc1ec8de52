/**
 * Figure model: split the rows into panels, one per distinct k or n_pure,
 * and expose five scatter series per panel plus the 1/k reference level.
 * Everything downstream (both renderers and the point-count report) reads
 * this model, so the plotted point set is fixed before any drawing happens.
 */
import { EnsembleRow } from './schema.js';

export type PanelBy = 'k' | 'n_pure';

export const SERIES_NAMES = ['lambda', 'theta', 'zeta', 'eta', 'P'] as const;
export type SeriesName = (typeof SERIES_NAMES)[number];

export interface Point {
  x: number;
  y: number;
}

export interface Panel {
  /** e.g. "k = 3" or "n_pure = 100" */
  label: string;
  value: number;
  /** horizontal dashed line level, 1/k for the panel's rows */
  reference: number;
  series: Record<SeriesName, Point[]>;
}

export interface Figure {
  panelBy: PanelBy;
  panels: Panel[];
}

export interface PanelCounts {
  label: string;
  counts: Record<SeriesName, number>;
}

export interface PointCountReport {
  panelBy: PanelBy;
  rowCount: number;
  panels: PanelCounts[];
}

/** lambda column for plotting: the exact value when present, else the numeric one. */
function lambdaOf(row: EnsembleRow): number {
  return row.lambdaExact ?? row.lambdaNumeric;
}

const SERIES_VALUE: Record<SeriesName, (row: EnsembleRow) => number> = {
  lambda: lambdaOf,
  theta: (row) => row.theta,
  zeta: (row) => row.zeta,
  eta: (row) => row.eta,
  P: (row) => row.P,
};

export function buildFigure(rows: EnsembleRow[], panelBy: PanelBy): Figure {
  const keyOf = panelBy === 'k' ? (r: EnsembleRow) => r.k : (r: EnsembleRow) => r.nPure;
  const groups = new Map<number, EnsembleRow[]>();
  for (const row of rows) {
    const key = keyOf(row);
    const bucket = groups.get(key);
    if (bucket === undefined) {
      groups.set(key, [row]);
    } else {
      bucket.push(row);
    }
  }
  const panels = [...groups.entries()]
    .sort(([a], [b]) => a - b)
    .map(([value, group]) => {
      const series = {} as Record<SeriesName, Point[]>;
      for (const name of SERIES_NAMES) {
        const get = SERIES_VALUE[name];
        series[name] = group.map((row) => ({ x: row.sampleId, y: get(row) }));
      }
      return {
        label: `${panelBy} = ${value}`,
        value,
        reference: 1 / group[0].k,
        series,
      };
    });
  return { panelBy, panels };
}

export function countPoints(figure: Figure, rowCount: number): PointCountReport {
  return {
    panelBy: figure.panelBy,
    rowCount,
    panels: figure.panels.map((panel) => {
      const counts = {} as Record<SeriesName, number>;
      for (const name of SERIES_NAMES) {
        counts[name] = panel.series[name].length;
      }
      return { label: panel.label, counts };
    }),
  };
}

export function formatReport(report: PointCountReport): string {
  const lines = report.panels.map((panel) => {
    const parts = SERIES_NAMES.map((name) => `${name}=${panel.counts[name]}`);
    return `panel ${panel.label}: ${parts.join(' ')}`;
  });
  lines.push(`${report.panels.length} panels, ${report.rowCount} rows`);
  return lines.join('\n');
}
