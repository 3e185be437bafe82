// DOM wiring for the what-if workbench.

import { fetchRanking, fetchScenario, postEvaluate } from "./api.js";
import { formatNumber, formatPercent, formatSubset } from "./format.js";
import { buildOverlay } from "./overlay.js";
import {
  applyEvaluation,
  applyFailure,
  initialState,
  issueEvaluation,
  selectAttack,
  setOverlayOpacity,
  setShowZeroAxes,
  toggleCountermeasure,
  withScenario,
  type WorkbenchState,
} from "./state.js";
import { nextSort, sortCombinations, type SortKey, type SortSpec } from "./table.js";
import type { RankResponse } from "./types.js";

let state: WorkbenchState = initialState();
let ranking: RankResponse | null = null;
let sortSpec: SortSpec | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setText(id: string, text: string): void {
  el(id).textContent = text;
}

async function requestEvaluation(seq: number): Promise<void> {
  if (!state.attack) return;
  try {
    const response = await postEvaluate(state.attack, state.toggled);
    state = applyEvaluation(state, seq, response);
  } catch (err) {
    state = applyFailure(state, seq, err instanceof Error ? err.message : String(err));
  }
  render();
}

function onToggle(name: string): void {
  const { state: next, issued } = toggleCountermeasure(state, name);
  state = next;
  if (issued !== null) {
    void requestEvaluation(issued);
  }
  render();
}

function renderToggles(): void {
  const box = el<HTMLDivElement>("toggles");
  box.innerHTML = "";
  for (const name of state.scenario?.countermeasures ?? []) {
    const label = document.createElement("label");
    const input = document.createElement("input");
    input.type = "checkbox";
    input.checked = state.toggled.includes(name);
    input.addEventListener("change", () => onToggle(name));
    label.appendChild(input);
    label.appendChild(document.createTextNode(` ${name}`));
    box.appendChild(label);
  }
}

function renderReadouts(): void {
  const evaluation = state.evaluation;
  setText("selection", formatSubset(state.toggled));
  if (!evaluation) {
    for (const id of ["coverage", "perimeter", "area", "share"]) setText(id, "-");
    el<HTMLTableSectionElement>("residual-body").innerHTML = "";
    return;
  }
  setText("coverage", formatPercent(evaluation.coverage_pct));
  setText("perimeter", formatNumber(evaluation.mitigation.perimeter_units));
  setText("area", formatNumber(evaluation.mitigation.impact_area_units2));
  setText("share", formatPercent(evaluation.mitigation.system_share_pct));
  setText("attack-share", formatPercent(evaluation.attack_system_share_pct));

  const body = el<HTMLTableSectionElement>("residual-body");
  body.innerHTML = "";
  evaluation.residual.dimensions.forEach((dim, i) => {
    const row = document.createElement("tr");
    const name = document.createElement("td");
    name.textContent = dim;
    const attackCell = document.createElement("td");
    attackCell.textContent = formatPercent(evaluation.attack.contributions_pct[i]);
    const mitigated = document.createElement("td");
    mitigated.textContent = formatPercent(evaluation.mitigation.contributions_pct[i]);
    const left = document.createElement("td");
    left.textContent = formatPercent(evaluation.residual.contributions_pct[i]);
    row.append(name, attackCell, mitigated, left);
    body.appendChild(row);
  });
}

function renderOverlay(): void {
  const host = el<HTMLDivElement>("overlay");
  host.innerHTML = state.evaluation
    ? buildOverlay(state.evaluation, {
        showZeroAxes: state.showZeroAxes,
        opacity: state.overlayOpacity,
      })
    : "";
}

function renderRanking(): void {
  const body = el<HTMLTableSectionElement>("ranking-body");
  body.innerHTML = "";
  if (!ranking) return;
  const rows = sortSpec ? sortCombinations(ranking.combinations, sortSpec) : ranking.combinations;
  for (const row of rows) {
    const tr = document.createElement("tr");
    const cells = [
      formatSubset(row.names),
      formatPercent(row.coverage_pct),
      formatNumber(row.perimeter_units),
      formatNumber(row.impact_area_units2),
    ];
    for (const text of cells) {
      const td = document.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    body.appendChild(tr);
  }
}

function renderBanner(): void {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = state.error ?? "";
  banner.hidden = state.error === null;
}

function render(): void {
  renderToggles();
  renderReadouts();
  renderOverlay();
  renderRanking();
  renderBanner();
}

function wireSortHeaders(): void {
  document.querySelectorAll<HTMLTableCellElement>("#ranking thead th[data-key]").forEach(
    (th) => {
      th.addEventListener("click", () => {
        sortSpec = nextSort(sortSpec, th.dataset.key as SortKey);
        renderRanking();
      });
    },
  );
}

function wireDisplayOptions(): void {
  el<HTMLInputElement>("show-zero-axes").addEventListener("change", (event) => {
    state = setShowZeroAxes(state, (event.target as HTMLInputElement).checked);
    renderOverlay();
  });
  el<HTMLInputElement>("opacity").addEventListener("input", (event) => {
    state = setOverlayOpacity(state, Number((event.target as HTMLInputElement).value));
    renderOverlay();
  });
}

async function init(): Promise<void> {
  const scenario = await fetchScenario();
  state = withScenario(state, scenario);
  setText("scenario-name", scenario.scenario);

  const attackSelect = el<HTMLSelectElement>("attack");
  attackSelect.innerHTML = "";
  for (const event of scenario.events.filter((e) => e.kind === "attack")) {
    const option = document.createElement("option");
    option.value = event.name;
    option.textContent = event.name;
    option.selected = event.name === state.attack;
    attackSelect.appendChild(option);
  }
  attackSelect.addEventListener("change", () => {
    state = selectAttack(state, attackSelect.value);
    void refreshRanking();
    const { state: next, issued } = issueEvaluation(state);
    state = next;
    if (issued !== null) void requestEvaluation(issued);
  });

  wireSortHeaders();
  wireDisplayOptions();
  await refreshRanking();
  const { state: next, issued } = issueEvaluation(state);
  state = next;
  if (issued !== null) await requestEvaluation(issued);
  render();
}

async function refreshRanking(): Promise<void> {
  // the API ranks against the scenario's designated attack
  ranking = null;
  if (state.scenario && state.attack === state.scenario.attack) {
    try {
      ranking = await fetchRanking();
    } catch {
      ranking = null;
    }
  }
  renderRanking();
}

void init();
