"""Scenario files on disk, and report serialization.

A scenario is one YAML document declaring the system inventory, the event
catalog, and optionally which event is the attack under analysis and
which events are candidate countermeasures. Reports serialize to JSON
with unit-suffixed keys at full float precision, to CSV for spreadsheet
use, and to a fixed-width text table rounded to two decimals.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

import yaml

from .combine import EvaluationReport, ReportRow
from .contribution import ContributionProfile, EventDefinition, EventKind, validate_event
from .errors import ScenarioError, ValidationError
from .inventory import (
    Category,
    CarverScore,
    CARVER_CRITERIA,
    Dimension,
    SystemInventory,
    validate_inventory,
)

SCHEMA_VERSION = 1

BUNDLED_SCENARIO = "openssh-cve-2015-5600"


@dataclass(frozen=True)
class Scenario:
    """A parsed and fully validated scenario document."""

    name: str
    schema_version: int
    inventory: SystemInventory
    events: tuple[EventDefinition, ...]
    attack: str | None
    countermeasures: tuple[str, ...] | None

    def event(self, name: str) -> EventDefinition:
        for ev in self.events:
            if ev.name == name:
                return ev
        raise KeyError(name)

    @property
    def countermeasure_names(self) -> tuple[str, ...]:
        if self.countermeasures is not None:
            return self.countermeasures
        return tuple(ev.name for ev in self.events if ev.kind is EventKind.COUNTERMEASURE)


def bundled_scenario_path(name: str = BUNDLED_SCENARIO) -> Path:
    """Path of a scenario shipped with the package."""
    return Path(__file__).parent / "data" / f"{name}.yaml"


def _parse_category(raw: object, where: str, errors: list[str]) -> Category | None:
    if not isinstance(raw, dict):
        errors.append(f"{where}: category must be a mapping, got {type(raw).__name__}")
        return None
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        errors.append(f"{where}: category needs a non-empty 'name'")
        return None
    where = f"{where}/{name}"
    quantity = raw.get("quantity")
    if isinstance(quantity, bool) or not isinstance(quantity, int):
        errors.append(f"{where}: 'quantity' must be an integer, got {quantity!r}")
        return None
    has_weight = "weight" in raw
    has_carver = "carver" in raw
    if has_weight == has_carver:
        errors.append(f"{where}: give exactly one of 'weight' or 'carver'")
        return None
    if has_weight:
        weight = raw["weight"]
        if isinstance(weight, bool) or not isinstance(weight, (int, float)):
            errors.append(f"{where}: 'weight' must be a number, got {weight!r}")
            return None
        return Category(name=name, quantity=quantity, weight=float(weight))
    carver = raw["carver"]
    if not isinstance(carver, dict) or set(carver) != set(CARVER_CRITERIA):
        errors.append(f"{where}: 'carver' must map exactly the six criteria {CARVER_CRITERIA}")
        return None
    try:
        return Category.from_carver(name, quantity, CarverScore(**carver))
    except ValidationError as exc:
        errors.extend(f"{where}: {e}" for e in exc.errors)
        return None


def _parse_inventory(raw: object, errors: list[str]) -> SystemInventory | None:
    start = len(errors)
    if not isinstance(raw, dict):
        errors.append("'inventory' must be a mapping")
        return None
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        errors.append("inventory needs a non-empty 'name'")
        name = "?"
    dims_raw = raw.get("dimensions")
    if not isinstance(dims_raw, list):
        errors.append("inventory needs a 'dimensions' list")
        return None
    dims: list[Dimension] = []
    for i, dim_raw in enumerate(dims_raw):
        if not isinstance(dim_raw, dict) or not isinstance(dim_raw.get("name"), str):
            errors.append(f"dimensions[{i}]: must be a mapping with a 'name'")
            continue
        dim_name = dim_raw["name"]
        cats_raw = dim_raw.get("categories")
        if not isinstance(cats_raw, list):
            errors.append(f"dimension '{dim_name}': needs a 'categories' list")
            continue
        cats = [
            cat
            for raw_cat in cats_raw
            if (cat := _parse_category(raw_cat, f"dimension '{dim_name}'", errors)) is not None
        ]
        dims.append(Dimension(name=dim_name, categories=tuple(cats)))
    if len(errors) > start:
        return None
    return SystemInventory(name=name, dimensions=tuple(dims))


def _parse_event(raw: object, index: int, errors: list[str]) -> EventDefinition | None:
    if not isinstance(raw, dict):
        errors.append(f"events[{index}]: must be a mapping")
        return None
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        errors.append(f"events[{index}]: needs a non-empty 'name'")
        return None
    kind_raw = raw.get("kind")
    try:
        kind = EventKind(kind_raw)
    except ValueError:
        errors.append(
            f"event '{name}': 'kind' must be one of "
            f"{[k.value for k in EventKind]}, got {kind_raw!r}"
        )
        return None
    affected_raw = raw.get("affected", {})
    if not isinstance(affected_raw, dict):
        errors.append(f"event '{name}': 'affected' must be a mapping of dimension to categories")
        return None
    affected: dict[tuple[str, str], int] = {}
    for dim_name, cats in affected_raw.items():
        if not isinstance(cats, dict):
            errors.append(f"event '{name}': affected['{dim_name}'] must map categories to counts")
            continue
        for cat_name, count in cats.items():
            if isinstance(count, bool) or not isinstance(count, int):
                errors.append(
                    f"event '{name}': affected count for '{dim_name}/{cat_name}' "
                    f"must be an integer, got {count!r}"
                )
                continue
            affected[(str(dim_name), str(cat_name))] = count
    return EventDefinition(name=name, kind=kind, affected=affected)


def load_scenario(text: str, source: str = "<string>") -> Scenario:
    """Parse and validate a scenario document, reporting every problem found."""
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ScenarioError([f"{source}: not valid YAML: {exc}"]) from exc
    if not isinstance(raw, dict):
        raise ScenarioError([f"{source}: document must be a mapping"])

    errors: list[str] = []
    version = raw.get("schema_version")
    if version != SCHEMA_VERSION:
        errors.append(f"unknown schema_version {version!r}; this reader supports {SCHEMA_VERSION}")
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        errors.append("scenario needs a non-empty 'name'")
        name = "?"

    inv = _parse_inventory(raw.get("inventory"), errors)
    if inv is not None:
        try:
            validate_inventory(inv)
        except ValidationError as exc:
            errors.extend(exc.errors)

    events: list[EventDefinition] = []
    events_raw = raw.get("events", [])
    if not isinstance(events_raw, list):
        errors.append("'events' must be a list")
        events_raw = []
    for i, ev_raw in enumerate(events_raw):
        ev = _parse_event(ev_raw, i, errors)
        if ev is None:
            continue
        if any(prev.name == ev.name for prev in events):
            errors.append(f"duplicate event name '{ev.name}'")
            continue
        if inv is not None:
            try:
                validate_event(inv, ev)
            except ValidationError as exc:
                errors.extend(exc.errors)
        events.append(ev)

    event_names = {ev.name for ev in events}
    attack = raw.get("attack")
    if attack is not None:
        if not isinstance(attack, str) or attack not in event_names:
            errors.append(f"designated attack {attack!r} does not match any event")
    countermeasures = raw.get("countermeasures")
    if countermeasures is not None:
        if not isinstance(countermeasures, list):
            errors.append("'countermeasures' must be a list of event names")
            countermeasures = None
        else:
            for cm in countermeasures:
                if cm not in event_names:
                    errors.append(f"countermeasure {cm!r} does not match any event")
            if isinstance(attack, str) and attack in countermeasures:
                errors.append(f"'{attack}' cannot be both the attack and a countermeasure")

    if errors:
        raise ScenarioError([f"{source}: {e}" for e in errors])
    assert inv is not None
    return Scenario(
        name=name,
        schema_version=version,
        inventory=inv,
        events=tuple(events),
        attack=attack,
        countermeasures=tuple(countermeasures) if countermeasures is not None else None,
    )


def load_scenario_file(path: str | Path) -> Scenario:
    path = Path(path)
    if not path.is_file():
        raise ScenarioError([f"scenario file not found: {path}"])
    return load_scenario(path.read_text(encoding="utf-8"), source=str(path))


def _row_to_dict(row: ReportRow) -> dict:
    return {
        "name": row.name,
        "kind": row.kind,
        "contributions_pct": list(row.profile.contributions),
        "perimeter_units": row.perimeter,
        "impact_area_units2": row.impact_area,
        "geometric_area_units2": row.geometric_area,
        "system_share_pct": row.system_share,
        "coverage_pct": row.coverage,
        "residual_pct": list(row.residual.contributions) if row.residual else None,
    }


def save_report(report: EvaluationReport) -> str:
    """Serialize a report to JSON text at full float precision."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "scenario": report.scenario,
        "attack": report.attack,
        "dimensions": list(report.dimensions),
        "rows": [_row_to_dict(row) for row in report.rows],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_report(text: str) -> EvaluationReport:
    """Rebuild a report from its JSON form; numeric fields round-trip exactly."""
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ScenarioError(
            [f"unknown report schema_version {doc.get('schema_version')!r}"]
        )
    dims = tuple(doc["dimensions"])
    attack = doc["attack"]
    rows = []
    for raw in doc["rows"]:
        profile = ContributionProfile(raw["name"], dims, tuple(raw["contributions_pct"]))
        resid = None
        if raw["residual_pct"] is not None:
            resid = ContributionProfile(
                f"{attack} - {raw['name']}", dims, tuple(raw["residual_pct"])
            )
        rows.append(
            ReportRow(
                name=raw["name"],
                kind=raw["kind"],
                profile=profile,
                perimeter=raw["perimeter_units"],
                impact_area=raw["impact_area_units2"],
                geometric_area=raw["geometric_area_units2"],
                system_share=raw["system_share_pct"],
                coverage=raw["coverage_pct"],
                residual=resid,
            )
        )
    return EvaluationReport(
        scenario=doc["scenario"], dimensions=dims, attack=attack, rows=tuple(rows)
    )


REPORT_CSV_FIELDS = (
    "event",
    "kind",
    "perimeter_units",
    "impact_area_units2",
    "geometric_area_units2",
    "system_share_pct",
    "coverage_pct",
)


def report_csv(report: EvaluationReport) -> str:
    """Delimited form of the report table, full precision, one row per event."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_CSV_FIELDS)
    for row in report.rows:
        writer.writerow(
            [
                row.name,
                row.kind,
                repr(row.perimeter),
                repr(row.impact_area),
                repr(row.geometric_area),
                repr(row.system_share),
                "" if row.coverage is None else repr(row.coverage),
            ]
        )
    return buf.getvalue()


def format_report_table(report: EvaluationReport) -> str:
    """Human-readable impact table, two decimals per cell.

    The coverage column only exists when the report has a designated
    attack to cover.
    """
    headers = ["Event", "P(units)", "A(units²)", "Share(%)"]
    if report.attack is not None:
        headers.append("Coverage(%)")
    rows = []
    for row in report.rows:
        cells = [
            row.name,
            f"{row.perimeter:.2f}",
            f"{row.impact_area:.2f}",
            f"{row.system_share:.2f}",
        ]
        if report.attack is not None:
            cells.append("-" if row.coverage is None else f"{row.coverage:.2f}")
        rows.append(cells)
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in rows)) if rows else len(headers[i])
        for i in range(len(headers))
    ]

    def line(cells: list[str]) -> str:
        padded = [cells[0].ljust(widths[0])] + [
            c.rjust(widths[i + 1]) for i, c in enumerate(cells[1:])
        ]
        return "  ".join(padded).rstrip()

    out = [line(headers), line(["-" * w for w in widths])]
    out.extend(line(r) for r in rows)
    return "\n".join(out) + "\n"
