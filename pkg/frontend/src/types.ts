// Shapes of the polyrisk JSON API responses. The workbench displays these
// numbers verbatim; every readout must trace back to one of these fields.

export interface ProfilePayload {
  name: string;
  dimensions: string[];
  contributions_pct: number[];
  vertices: [number, number][];
  perimeter_units: number;
  impact_area_units2: number;
  geometric_area_units2: number;
  shape: string;
}

export interface CategoryPayload {
  name: string;
  quantity: number;
  weight: number;
}

export interface DimensionPayload {
  name: string;
  value_units: number;
  categories: CategoryPayload[];
}

export interface EventPayload extends ProfilePayload {
  kind: "attack" | "countermeasure" | "system";
  system_share_pct: number;
}

export interface ScenarioResponse {
  scenario: string;
  schema_version: number;
  inventory: { name: string; dimensions: DimensionPayload[] };
  attack: string | null;
  countermeasures: string[];
  system: ProfilePayload;
  events: EventPayload[];
}

export interface EvaluateResponse {
  attack: ProfilePayload;
  countermeasures: ProfilePayload[];
  mitigation: ProfilePayload & { system_share_pct: number };
  coverage_pct: number;
  residual: ProfilePayload;
  attack_system_share_pct: number;
  system: ProfilePayload;
}

export interface RankRow {
  names: string[];
  coverage_pct: number;
  perimeter_units: number;
  impact_area_units2: number;
}

export interface RankResponse {
  attack: string;
  combinations: RankRow[];
}
