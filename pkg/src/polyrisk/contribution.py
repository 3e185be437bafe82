"""Per-dimension event contributions and contribution profiles.

The contribution of a dimension to an event is the weighted share of its
elements the event touches:

    contribution = 100 * sum(affected_j * weight_j) / sum(quantity_i * weight_i)

expressed as a percentage of the dimension's total value. The ordered
vector of contributions over all inventory dimensions is the event's
profile and fully determines its polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .errors import UndefinedContributionError, ValidationError
from .inventory import SystemInventory, dimension_value


class EventKind(Enum):
    ATTACK = "attack"
    COUNTERMEASURE = "countermeasure"
    SYSTEM = "system"


@dataclass(frozen=True)
class EventDefinition:
    """A named event and the element counts it affects.

    `affected` maps (dimension name, category name) to the number of that
    category's elements the event touches. Categories the event does not
    touch are simply absent.
    """

    name: str
    kind: EventKind
    affected: Mapping[tuple[str, str], int]


@dataclass(frozen=True)
class ContributionProfile:
    """Ordered per-dimension contribution percentages for one event.

    Dimension order matches the inventory order exactly; dimensions the
    event does not touch are present with contribution 0 so the polygon
    keeps one vertex per axis (at the origin for zeros).
    """

    event: str
    dimensions: tuple[str, ...]
    contributions: tuple[float, ...]

    def __post_init__(self):
        if not self.dimensions:
            raise ValidationError(f"profile '{self.event}': must cover at least one dimension")
        if len(self.dimensions) != len(self.contributions):
            raise ValidationError(
                f"profile '{self.event}': {len(self.dimensions)} dimensions "
                f"but {len(self.contributions)} contributions"
            )
        bad = [
            f"profile '{self.event}': contribution for '{d}' must be in [0, 100], got {c}"
            for d, c in zip(self.dimensions, self.contributions)
            if not 0.0 <= c <= 100.0
        ]
        if bad:
            raise ValidationError(bad)

    @property
    def n(self) -> int:
        return len(self.dimensions)

    def as_pairs(self) -> tuple[tuple[str, float], ...]:
        return tuple(zip(self.dimensions, self.contributions))

    def renamed(self, event: str) -> "ContributionProfile":
        return ContributionProfile(event, self.dimensions, self.contributions)


def validate_event(inv: SystemInventory, event: EventDefinition) -> EventDefinition:
    """Check an event against the inventory, collecting all violations."""
    errors: list[str] = []
    known = {
        (dim.name, cat.name): cat.quantity
        for dim in inv.dimensions
        for cat in dim.categories
    }
    for (dim_name, cat_name), count in event.affected.items():
        where = f"{dim_name}/{cat_name}"
        if (dim_name, cat_name) not in known:
            errors.append(f"event '{event.name}': unknown category '{where}'")
            continue
        if count < 0:
            errors.append(f"event '{event.name}': affected count for '{where}' must be >= 0, got {count}")
        elif count > known[(dim_name, cat_name)]:
            errors.append(
                f"event '{event.name}': affected count {count} for '{where}' "
                f"exceeds category quantity {known[(dim_name, cat_name)]}"
            )
    if errors:
        raise ValidationError(errors)
    return event


def contribution(inv: SystemInventory, event: EventDefinition, dim_name: str) -> float:
    """Contribution percentage of one dimension to one event."""
    dim = inv.dimension(dim_name)
    total = dimension_value(dim)
    if total == 0:
        raise UndefinedContributionError(
            f"dimension '{dim_name}' has total value 0; contribution is undefined"
        )
    affected = sum(
        event.affected.get((dim_name, cat.name), 0) * cat.weight
        for cat in dim.categories
    )
    # grouping keeps full coverage exact: affected/total is 1.0 when equal
    return 100.0 * (affected / total)

def event_profile(inv: SystemInventory, event: EventDefinition) -> ContributionProfile:
    """Profile of an event over every inventory dimension, in inventory order."""
    validate_event(inv, event)
    return ContributionProfile(
        event=event.name,
        dimensions=inv.dimension_names,
        contributions=tuple(contribution(inv, event, d.name) for d in inv.dimensions),
    )


def system_profile(inv: SystemInventory, name: str = "S") -> ContributionProfile:
    """The all-100 reference profile: every element of every dimension affected."""
    return ContributionProfile(
        event=name,
        dimensions=inv.dimension_names,
        contributions=(100.0,) * len(inv.dimensions),
    )
