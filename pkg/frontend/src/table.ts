// Client-side re-sorting of the ranked-combination table. Only columns the
// API already provides are sortable; nothing is recomputed.

import type { RankRow } from "./types.js";

export type SortKey = "names" | "size" | "coverage_pct" | "perimeter_units" | "impact_area_units2";

export interface SortSpec {
  key: SortKey;
  descending: boolean;
}

function keyValue(row: RankRow, key: SortKey): number | string {
  switch (key) {
    case "names":
      return row.names.join(" + ");
    case "size":
      return row.names.length;
    case "coverage_pct":
      return row.coverage_pct;
    case "perimeter_units":
      return row.perimeter_units;
    case "impact_area_units2":
      return row.impact_area_units2;
  }
}

export function sortCombinations(rows: RankRow[], spec: SortSpec): RankRow[] {
  const direction = spec.descending ? -1 : 1;
  // stable: ties keep the API's order
  return [...rows].sort((a, b) => {
    const va = keyValue(a, spec.key);
    const vb = keyValue(b, spec.key);
    if (va < vb) return -direction;
    if (va > vb) return direction;
    return 0;
  });
}

export function nextSort(current: SortSpec | null, key: SortKey): SortSpec {
  if (current && current.key === key) {
    return { key, descending: !current.descending };
  }
  // metric columns start descending (biggest first), name columns ascending
  return { key, descending: key !== "names" && key !== "size" };
}
