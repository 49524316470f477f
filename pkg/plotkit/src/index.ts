export { FigureKind, KIND_COLUMNS, Series, Table, extractSeries, loadSeries, readTable } from './csv.js';
export { BER_FLOOR, CCDF_FLOOR, FigureSpec, RenderedFigure, render } from './figure.js';
export { Axis, ChartSeries, ChartSpec, axisTicks, renderChart } from './svg.js';
export { main } from './cli.js';
