"""HTTP JSON API over a loaded scenario, plus static hosting for the UI.

The service is read-only: the scenario is loaded once at startup and
every endpoint is a pure function of it and the request, so responses
are deterministic and concurrent requests share state safely. All
numbers come straight from the library with no re-rounding.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from . import combine, render
from .contribution import ContributionProfile, event_profile, system_profile
from .geometry import polygon_instance
from .scenario_io import Scenario

FALLBACK_INDEX = """<!doctype html>
<html><head><title>polyrisk API</title></head><body>
<h1>polyrisk API</h1>
<p>No UI bundle is being served. Available endpoints:</p>
<ul>
<li>GET /api/scenario</li>
<li>POST /api/evaluate  {"attack": name, "countermeasures": [names]}</li>
<li>GET /api/rank?max_size=N</li>
<li>GET /api/render?events=A,B&amp;size=600&amp;show_zero_axes=false</li>
</ul>
</body></html>
"""


def _profile_dict(profile: ContributionProfile) -> dict:
    inst = polygon_instance(profile)
    return {
        "name": profile.event,
        "dimensions": list(profile.dimensions),
        "contributions_pct": list(profile.contributions),
        "vertices": [[x, y] for x, y in inst.vertices],
        "perimeter_units": inst.perimeter,
        "impact_area_units2": inst.impact_area,
        "geometric_area_units2": inst.geometric_area,
        "shape": inst.shape_class.value,
    }


def create_app(scenario: Scenario, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="polyrisk", docs_url=None, redoc_url=None)

    inv = scenario.inventory
    system = system_profile(inv)
    profiles = {ev.name: event_profile(inv, ev) for ev in scenario.events}

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    def get_profile(name: str) -> ContributionProfile:
        if name not in profiles:
            raise HTTPException(status_code=404, detail=f"unknown event '{name}'")
        return profiles[name]

    @app.get("/api/scenario")
    def api_scenario() -> dict:
        return {
            "scenario": scenario.name,
            "schema_version": scenario.schema_version,
            "inventory": {
                "name": inv.name,
                "dimensions": [
                    {
                        "name": dim.name,
                        "value_units": sum(c.quantity * c.weight for c in dim.categories),
                        "categories": [
                            {"name": c.name, "quantity": c.quantity, "weight": c.weight}
                            for c in dim.categories
                        ],
                    }
                    for dim in inv.dimensions
                ],
            },
            "attack": scenario.attack,
            "countermeasures": list(scenario.countermeasure_names),
            "system": _profile_dict(system),
            "events": [
                {
                    "kind": ev.kind.value,
                    "system_share_pct": combine.system_share(profiles[ev.name], system),
                    **_profile_dict(profiles[ev.name]),
                }
                for ev in scenario.events
            ],
        }

    @app.post("/api/evaluate")
    async def api_evaluate(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="request body must be JSON")
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="request body must be a JSON object")
        attack_name = body.get("attack")
        cm_names = body.get("countermeasures")
        if not isinstance(attack_name, str) or not isinstance(cm_names, list) or not all(
            isinstance(c, str) for c in cm_names
        ):
            raise HTTPException(
                status_code=400,
                detail="body must be {\"attack\": name, \"countermeasures\": [names]}",
            )
        attack = get_profile(attack_name)
        selected = [get_profile(c) for c in cm_names]
        if selected:
            mitigation = combine.union(*selected)
        else:
            mitigation = ContributionProfile(
                "none", attack.dimensions, (0.0,) * attack.n
            )
        return {
            "attack": _profile_dict(attack),
            "countermeasures": [_profile_dict(p) for p in selected],
            "mitigation": {
                **_profile_dict(mitigation),
                "system_share_pct": combine.system_share(mitigation, system),
            },
            "coverage_pct": combine.coverage(attack, mitigation),
            "residual": _profile_dict(combine.residual(attack, mitigation)),
            "attack_system_share_pct": combine.system_share(attack, system),
            "system": _profile_dict(system),
        }

    @app.get("/api/rank")
    def api_rank(max_size: int | None = None) -> dict:
        if scenario.attack is None:
            raise HTTPException(status_code=404, detail="scenario designates no attack")
        cms = [profiles[name] for name in scenario.countermeasure_names]
        if not cms:
            return {"attack": scenario.attack, "combinations": []}
        size = len(cms) if max_size is None else max_size
        try:
            ranked = combine.rank_combinations(profiles[scenario.attack], cms, size)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "attack": scenario.attack,
            "combinations": [
                {
                    "names": list(r.names),
                    "coverage_pct": r.coverage,
                    "perimeter_units": r.perimeter,
                    "impact_area_units2": r.impact_area,
                }
                for r in ranked
            ],
        }

    @app.get("/api/render")
    def api_render(
        events: str,
        size: int = render.DEFAULT_CANVAS,
        show_zero_axes: bool = False,
    ) -> Response:
        names = [name for name in events.split(",") if name]
        if not names:
            raise HTTPException(status_code=400, detail="no events requested")
        kinds = {ev.name: ev.kind.value for ev in scenario.events}
        chosen = [get_profile(name) for name in names]
        spec = render.spec_for(
            chosen, kinds=kinds, size=size, show_zero_axes=show_zero_axes
        )
        return Response(content=render.render_svg(spec), media_type="image/svg+xml")

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index() -> str:
            return FALLBACK_INDEX

    return app
