#!/usr/bin/env python3
"""Capture real API responses into tests/fixtures/.

The workbench tests run against genuine backend payloads, never
hand-written ones. Re-run after any API change:

    python3 frontend/scripts/capture_fixtures.py
"""

import json
import warnings
from pathlib import Path

from polyrisk import bundled_scenario_path, load_scenario_file

with warnings.catch_warnings():
    warnings.simplefilter("ignore", DeprecationWarning)
    from fastapi.testclient import TestClient

from polyrisk.server import create_app

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main() -> None:
    client = TestClient(create_app(load_scenario_file(bundled_scenario_path())))
    captures = {
        "scenario.json": client.get("/api/scenario"),
        "rank.json": client.get("/api/rank"),
        "evaluate_empty.json": client.post(
            "/api/evaluate", json={"attack": "A1", "countermeasures": []}
        ),
        "evaluate_c2_c3.json": client.post(
            "/api/evaluate", json={"attack": "A1", "countermeasures": ["C2", "C3"]}
        ),
        "evaluate_c1_c2_c3.json": client.post(
            "/api/evaluate", json={"attack": "A1", "countermeasures": ["C1", "C2", "C3"]}
        ),
    }
    OUT.mkdir(parents=True, exist_ok=True)
    for name, response in captures.items():
        response.raise_for_status()
        (OUT / name).write_text(json.dumps(response.json(), indent=2, ensure_ascii=False) + "\n")
        print(f"wrote {OUT / name}")


if __name__ == "__main__":
    main()
