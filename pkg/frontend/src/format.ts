// Readout formatting. Display only: numbers pass through toFixed, nothing
// is ever recomputed client-side.

export function formatNumber(value: number): string {
  return value.toFixed(2);
}

export function formatPercent(value: number): string {
  return `${value.toFixed(2)}%`;
}

export function formatSubset(names: string[]): string {
  return names.length === 0 ? "none" : names.join(" + ");
}
