"""Combining event profiles: unions, coverage, residual risk, ranking.

The union of events is the per-dimension maximum of their profiles; the
overlap between an attack and a mitigation is the per-dimension minimum.
Coverage is the share of the attack's impact area captured by that
overlap, and the residual is the clamped per-dimension difference, i.e.
what the mitigation leaves untreated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .contribution import (
    ContributionProfile,
    EventDefinition,
    EventKind,
    event_profile,
    system_profile,
)
from .errors import ProfileMismatchError
from .geometry import impact_area, perimeter, polygon_instance
from .inventory import SystemInventory

UNION_SEP = " ∪ "  # the classic set-union glyph, as in "C1 ∪ C2"

# Exhaustive subset enumeration is 2^n; refuse beyond this many inputs.
MAX_ENUMERABLE = 20


def _check_same_dimensions(profiles: Sequence[ContributionProfile]) -> None:
    first = profiles[0].dimensions
    for p in profiles[1:]:
        if p.dimensions != first:
            raise ProfileMismatchError(
                f"profile '{p.event}' covers dimensions {p.dimensions}, "
                f"expected {first} (from '{profiles[0].event}')"
            )


def union(*profiles: ContributionProfile) -> ContributionProfile:
    """Per-dimension maximum of one or more profiles over the same axes."""
    if not profiles:
        raise ValueError("union needs at least one profile")
    _check_same_dimensions(profiles)
    return ContributionProfile(
        event=UNION_SEP.join(p.event for p in profiles),
        dimensions=profiles[0].dimensions,
        contributions=tuple(max(vals) for vals in zip(*(p.contributions for p in profiles))),
    )


def intersection(a: ContributionProfile, b: ContributionProfile) -> ContributionProfile:
    """Per-dimension minimum of two profiles: the impact both reach."""
    _check_same_dimensions([a, b])
    return ContributionProfile(
        event=f"{a.event} ∩ {b.event}",
        dimensions=a.dimensions,
        contributions=tuple(min(x, y) for x, y in zip(a.contributions, b.contributions)),
    )


def residual(attack: ContributionProfile, mitigation: ContributionProfile) -> ContributionProfile:
    """Untreated remainder: per-dimension max(0, attack - mitigation)."""
    _check_same_dimensions([attack, mitigation])
    return ContributionProfile(
        event=f"{attack.event} - {mitigation.event}",
        dimensions=attack.dimensions,
        contributions=tuple(
            max(0.0, x - y) for x, y in zip(attack.contributions, mitigation.contributions)
        ),
    )


def coverage(attack: ContributionProfile, mitigation: ContributionProfile) -> float:
    """Percentage of the attack's impact area the mitigation captures."""
    attack_area = impact_area(attack)
    if attack_area == 0:
        raise ValueError(f"attack '{attack.event}' has zero impact area; coverage is undefined")
    # grouping keeps self-coverage exact and the result <= 100
    return 100.0 * (impact_area(intersection(attack, mitigation)) / attack_area)


def system_share(event: ContributionProfile, system: ContributionProfile) -> float:
    """Event impact area as a percentage of the reference system's area."""
    total = impact_area(system)
    if total == 0:
        raise ValueError(f"system '{system.event}' has zero impact area; share is undefined")
    return 100.0 * (impact_area(event) / total)


def element_union(inv: SystemInventory, *events: EventDefinition) -> EventDefinition:
    """Union at the element level, for comparison against profile union.

    Merges the affected element sets category by category (max count per
    category, assuming the smaller affected set sits inside the larger).
    This is NOT how report union rows are computed (those combine the
    already-computed profiles per dimension); it is exposed so the two
    semantics can be compared.
    """
    if not events:
        raise ValueError("element union needs at least one event")
    merged: dict[tuple[str, str], int] = {}
    for ev in events:
        for key, count in ev.affected.items():
            merged[key] = max(merged.get(key, 0), count)
    return EventDefinition(
        name=UNION_SEP.join(ev.name for ev in events),
        kind=events[0].kind,
        affected=merged,
    )


@dataclass(frozen=True)
class RankedCombination:
    """One countermeasure subset with its union metrics against an attack."""

    names: tuple[str, ...]
    profile: ContributionProfile
    coverage: float
    perimeter: float
    impact_area: float


def rank_combinations(
    attack: ContributionProfile,
    countermeasures: Sequence[ContributionProfile],
    max_size: int,
) -> list[RankedCombination]:
    """Rank every non-empty countermeasure subset up to max_size by coverage.

    Ties break toward smaller subsets, then smaller mitigation area, then
    lexicographic subset names, so the output order is fully deterministic.
    """
    if not 1 <= max_size <= len(countermeasures):
        raise ValueError(
            f"max_size must be in [1, {len(countermeasures)}], got {max_size}"
        )
    if len(countermeasures) > MAX_ENUMERABLE:
        raise ValueError(
            f"{len(countermeasures)} countermeasures is too many for exhaustive "
            f"enumeration (limit {MAX_ENUMERABLE}); lower max_size and pass a "
            f"pre-selected subset instead"
        )
    ranked = []
    for size in range(1, max_size + 1):
        for subset in itertools.combinations(countermeasures, size):
            combined = union(*subset)
            ranked.append(
                RankedCombination(
                    names=tuple(p.event for p in subset),
                    profile=combined,
                    coverage=coverage(attack, combined),
                    perimeter=perimeter(combined),
                    impact_area=impact_area(combined),
                )
            )
    ranked.sort(key=lambda r: (-r.coverage, len(r.names), r.impact_area, r.names))
    return ranked


@dataclass(frozen=True)
class ReportRow:
    """Metrics for one evaluated event or combination."""

    name: str
    kind: str  # system | attack | countermeasure | combination
    profile: ContributionProfile
    perimeter: float
    impact_area: float
    geometric_area: float
    system_share: float
    coverage: float | None = None
    residual: ContributionProfile | None = None


@dataclass(frozen=True)
class EvaluationReport:
    """Impact metrics for a whole scenario: system, events, combinations."""

    scenario: str
    dimensions: tuple[str, ...]
    attack: str | None
    rows: tuple[ReportRow, ...]

    def row(self, name: str) -> ReportRow:
        for row in self.rows:
            if row.name == name:
                return row
        raise KeyError(name)


def _make_row(
    profile: ContributionProfile,
    kind: str,
    system: ContributionProfile,
    attack: ContributionProfile | None,
) -> ReportRow:
    inst = polygon_instance(profile)
    covered = resid = None
    if attack is not None and kind in ("countermeasure", "combination"):
        covered = coverage(attack, profile)
        resid = residual(attack, profile)
    return ReportRow(
        name=profile.event,
        kind=kind,
        profile=profile,
        perimeter=inst.perimeter,
        impact_area=inst.impact_area,
        geometric_area=inst.geometric_area,
        system_share=system_share(profile, system),
        coverage=covered,
        residual=resid,
    )


def evaluate(
    inv: SystemInventory,
    events: Iterable[EventDefinition],
    attack: str | None = None,
    countermeasures: Sequence[str] | None = None,
    max_size: int | None = None,
) -> EvaluationReport:
    """Evaluate every event, and every countermeasure combination when an
    attack is designated.

    Rows appear in a fixed order: the all-100 system reference, then each
    event as declared, then unions of two or more countermeasures in
    combination order up to max_size (default: all of them).
    """
    if max_size is not None and max_size < 1:
        raise ValueError(f"max_size must be >= 1, got {max_size}")
    events = list(events)
    profiles = {ev.name: event_profile(inv, ev) for ev in events}
    system = system_profile(inv)
    attack_profile = profiles[attack] if attack is not None else None

    cm_names = list(countermeasures) if countermeasures is not None else [
        ev.name for ev in events if ev.kind is EventKind.COUNTERMEASURE
    ]

    rows = [_make_row(system, "system", system, None)]
    for ev in events:
        if ev.name == attack:
            kind = "attack"
        elif attack is not None and ev.name in cm_names:
            kind = "countermeasure"
        else:
            kind = ev.kind.value
        rows.append(_make_row(profiles[ev.name], kind, system, attack_profile))

    if attack is not None and len(cm_names) >= 2:
        limit = len(cm_names) if max_size is None else min(max_size, len(cm_names))
        for size in range(2, limit + 1):
            for subset in itertools.combinations(cm_names, size):
                combined = union(*(profiles[name] for name in subset))
                rows.append(_make_row(combined, "combination", system, attack_profile))

    return EvaluationReport(
        scenario=inv.name,
        dimensions=inv.dimension_names,
        attack=attack,
        rows=tuple(rows),
    )
