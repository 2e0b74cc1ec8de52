/**
 * Turn a figure model into an echarts option and encode it to a file.
 * Raster (png) is the default and goes through a headless canvas; svg uses
 * the echarts string renderer. Both read the same option object, so the
 * point set cannot differ between formats.
 */
import * as fs from 'fs';
import { createCanvas } from '@napi-rs/canvas';
import * as echarts from 'echarts/core';
import { ScatterChart } from 'echarts/charts';
import type { ScatterSeriesOption } from 'echarts/charts';
import {
  GridComponent,
  LegendComponent,
  MarkLineComponent,
  TitleComponent,
} from 'echarts/components';
import type {
  GridComponentOption,
  LegendComponentOption,
  TitleComponentOption,
} from 'echarts/components';
import { CanvasRenderer, SVGRenderer } from 'echarts/renderers';
import { Figure, SERIES_NAMES } from './figure.js';

echarts.use([
  ScatterChart,
  GridComponent,
  LegendComponent,
  MarkLineComponent,
  TitleComponent,
  CanvasRenderer,
  SVGRenderer,
]);

export type ChartOption = echarts.ComposeOption<
  ScatterSeriesOption | GridComponentOption | LegendComponentOption | TitleComponentOption
>;

export type OutputFormat = 'png' | 'svg';

export interface RenderOptions {
  out: string;
  format: OutputFormat;
  width: number;
  height: number;
}

// one fixed color per series name, so the same quantity matches across panels
const SERIES_COLOR: Record<string, string> = {
  lambda: '#5470c6',
  theta: '#91cc75',
  zeta: '#fac858',
  eta: '#ee6666',
  P: '#73c0de',
};

const FONT = 'DejaVu Sans, sans-serif';

echarts.setPlatformAPI({ createCanvas: () => createCanvas(64, 64) as unknown as HTMLCanvasElement });

interface Rect {
  left: number;
  top: number;
  width: number;
  height: number;
}

function panelRects(count: number, width: number, height: number): Rect[] {
  const cols = count > 1 ? 2 : 1;
  const rows = Math.ceil(count / cols);
  const marginX = 70;
  const marginTop = 70;
  const marginBottom = 55;
  const cellW = (width - marginX * (cols + 1)) / cols;
  const cellH = (height - marginTop - marginBottom - 50 * (rows - 1)) / rows;
  return Array.from({ length: count }, (_, i) => {
    const col = i % cols;
    const row = Math.floor(i / cols);
    return {
      left: marginX + col * (cellW + marginX),
      top: marginTop + row * (cellH + 50),
      width: cellW,
      height: cellH,
    };
  });
}

export function buildChartOption(figure: Figure, width: number, height: number): ChartOption {
  const rects = panelRects(figure.panels.length, width, height);
  const series: ScatterSeriesOption[] = [];
  figure.panels.forEach((panel, pi) => {
    SERIES_NAMES.forEach((name, si) => {
      const entry: ScatterSeriesOption = {
        type: 'scatter',
        name,
        xAxisIndex: pi,
        yAxisIndex: pi,
        symbolSize: 5,
        itemStyle: { color: SERIES_COLOR[name] },
        data: panel.series[name].map((p) => [p.x, p.y]),
      };
      if (si === 0) {
        // dashed horizontal reference at 1/k, attached to one series per panel
        entry.markLine = {
          silent: true,
          symbol: 'none',
          lineStyle: { type: 'dashed', color: '#666' },
          label: { formatter: '1/k', position: 'insideEndTop', fontFamily: FONT },
          data: [{ yAxis: panel.reference }],
        };
      }
      series.push(entry);
    });
  });
  return {
    animation: false,
    backgroundColor: '#fff',
    textStyle: { fontFamily: FONT },
    legend: {
      top: 8,
      data: [...SERIES_NAMES],
      textStyle: { fontFamily: FONT },
    },
    title: figure.panels.map((panel, pi) => ({
      text: panel.label,
      left: rects[pi].left,
      top: rects[pi].top - 28,
      textStyle: { fontSize: 13, fontFamily: FONT },
    })),
    grid: rects.map((r) => ({ ...r, containLabel: false })),
    xAxis: figure.panels.map((_, pi) => ({
      type: 'value',
      gridIndex: pi,
      name: 'sample index',
      nameLocation: 'middle',
      nameGap: 26,
      nameTextStyle: { fontFamily: FONT },
      minInterval: 1,
    })),
    yAxis: figure.panels.map((_, pi) => ({
      type: 'value',
      gridIndex: pi,
      name: 'coefficient',
      nameLocation: 'middle',
      nameGap: 42,
      nameTextStyle: { fontFamily: FONT },
      scale: true,
    })),
    series,
  };
}

export function renderToBuffer(figure: Figure, options: Omit<RenderOptions, 'out'>): Buffer {
  const option = buildChartOption(figure, options.width, options.height);
  if (options.format === 'svg') {
    const chart = echarts.init(null, null, {
      renderer: 'svg',
      ssr: true,
      width: options.width,
      height: options.height,
    });
    chart.setOption(option);
    const svg = chart.renderToSVGString();
    chart.dispose();
    return Buffer.from(svg, 'utf8');
  }
  const canvas = createCanvas(options.width, options.height);
  const chart = echarts.init(canvas as unknown as HTMLElement);
  chart.setOption(option);
  const buffer = canvas.toBuffer('image/png');
  chart.dispose();
  return buffer;
}

export function renderToFile(figure: Figure, options: RenderOptions): void {
  const buffer = renderToBuffer(figure, options);
  fs.writeFileSync(options.out, buffer);
}
