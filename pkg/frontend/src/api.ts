import type { EvaluateResponse, RankResponse, ScenarioResponse } from "./types.js";

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new Error(`${url}: ${response.status} ${await response.text()}`);
  }
  return (await response.json()) as T;
}

export function fetchScenario(): Promise<ScenarioResponse> {
  return getJson<ScenarioResponse>("/api/scenario");
}

export function fetchRanking(maxSize?: number): Promise<RankResponse> {
  const query = maxSize === undefined ? "" : `?max_size=${maxSize}`;
  return getJson<RankResponse>(`/api/rank${query}`);
}

export async function postEvaluate(
  attack: string,
  countermeasures: string[],
): Promise<EvaluateResponse> {
  const response = await fetch("/api/evaluate", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ attack, countermeasures }),
  });
  if (!response.ok) {
    throw new Error(`evaluate: ${response.status} ${await response.text()}`);
  }
  return (await response.json()) as EvaluateResponse;
}
