// Workbench state transitions, kept pure so they can be tested without a DOM.
//
// Evaluation requests carry a monotonically increasing sequence number; a
// response is applied only if it answers the latest issued request, so a
// slow response for a superseded toggle set can never overwrite the
// readouts (last write wins).

import type { EvaluateResponse, ScenarioResponse } from "./types.js";

export interface WorkbenchState {
  scenario: ScenarioResponse | null;
  attack: string | null;
  toggled: string[];
  requestSeq: number;
  evaluation: EvaluateResponse | null;
  evaluationSeq: number;
  error: string | null;
  showZeroAxes: boolean;
  overlayOpacity: number;
}

export function initialState(): WorkbenchState {
  return {
    scenario: null,
    attack: null,
    toggled: [],
    requestSeq: 0,
    evaluation: null,
    evaluationSeq: 0,
    error: null,
    showZeroAxes: false,
    overlayOpacity: 0.3,
  };
}

export function withScenario(
  state: WorkbenchState,
  scenario: ScenarioResponse,
): WorkbenchState {
  return {
    ...state,
    scenario,
    attack: scenario.attack,
    toggled: [],
    evaluation: null,
    error: null,
  };
}

export function selectAttack(state: WorkbenchState, name: string): WorkbenchState {
  if (!state.scenario?.events.some((e) => e.kind === "attack" && e.name === name)) {
    return state;
  }
  return { ...state, attack: name, evaluation: null };
}

export interface ToggleResult {
  state: WorkbenchState;
  /** sequence number of the evaluation request to issue, or null if rejected */
  issued: number | null;
}

export function toggleCountermeasure(state: WorkbenchState, name: string): ToggleResult {
  if (!state.scenario || !state.scenario.countermeasures.includes(name)) {
    return { state, issued: null };
  }
  const toggled = state.toggled.includes(name)
    ? state.toggled.filter((n) => n !== name)
    : [...state.toggled, name];
  const issued = state.requestSeq + 1;
  return { state: { ...state, toggled, requestSeq: issued }, issued };
}

/** Issue a request for the current set without changing it (initial load). */
export function issueEvaluation(state: WorkbenchState): ToggleResult {
  const issued = state.requestSeq + 1;
  return { state: { ...state, requestSeq: issued }, issued };
}

export function applyEvaluation(
  state: WorkbenchState,
  seq: number,
  evaluation: EvaluateResponse,
): WorkbenchState {
  if (seq !== state.requestSeq) {
    return state; // stale response for a superseded toggle set
  }
  return { ...state, evaluation, evaluationSeq: seq, error: null };
}

export function applyFailure(
  state: WorkbenchState,
  seq: number,
  message: string,
): WorkbenchState {
  if (seq !== state.requestSeq) {
    return state;
  }
  // keep the previous evaluation on screen; the banner is non-blocking
  return { ...state, error: message };
}

export function clearError(state: WorkbenchState): WorkbenchState {
  return { ...state, error: null };
}

export function setShowZeroAxes(state: WorkbenchState, value: boolean): WorkbenchState {
  return { ...state, showZeroAxes: value };
}

export function setOverlayOpacity(state: WorkbenchState, value: number): WorkbenchState {
  return { ...state, overlayOpacity: value };
}
