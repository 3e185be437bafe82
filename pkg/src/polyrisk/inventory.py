"""System inventory: dimensions, categories, element counts and weighting factors.

The inventory declares the universe an event is measured against. Each
dimension (users, channels, resources, ...) holds categories of elements;
a category has an element count and a weighting factor on a 1..10 scale,
given directly or derived from a six-criterion CARVER score.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .errors import InventoryError, ValidationError

CARVER_MIN = 1
CARVER_MAX = 10

CARVER_CRITERIA = (
    "criticality",
    "accessibility",
    "recuperability",
    "vulnerability",
    "effect",
    "recognizability",
)


@dataclass(frozen=True)
class CarverScore:
    """Six-criterion assessment, each criterion scored 1..10."""

    criticality: int
    accessibility: int
    recuperability: int
    vulnerability: int
    effect: int
    recognizability: int

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def carver_weight(score: CarverScore) -> float:
    """Aggregate a CARVER score into one weighting factor.

    Uses the arithmetic mean of the six criteria, which keeps the result
    on the same 1..10 scale as the individual scores.
    """
    errors = [
        f"CARVER criterion '{name}' must be in [{CARVER_MIN}, {CARVER_MAX}], got {value}"
        for name, value in score.as_dict().items()
        if not CARVER_MIN <= value <= CARVER_MAX
    ]
    if errors:
        raise ValidationError(errors)
    values = score.as_dict().values()
    return sum(values) / len(values)


@dataclass(frozen=True)
class Category:
    """A group of like elements: a count and a per-element weighting factor."""

    name: str
    quantity: int
    weight: float

    @classmethod
    def from_carver(cls, name: str, quantity: int, score: CarverScore) -> "Category":
        return cls(name=name, quantity=quantity, weight=carver_weight(score))


@dataclass(frozen=True)
class Dimension:
    """One axis of the polygonal system; an ordered set of categories."""

    name: str
    categories: tuple[Category, ...]

    def category(self, name: str) -> Category:
        for cat in self.categories:
            if cat.name == name:
                return cat
        raise KeyError(name)


@dataclass(frozen=True)
class SystemInventory:
    """The full system universe.

    Dimension order is significant: it fixes the polygon axis order, and
    perimeter and area depend on which dimensions end up adjacent. Load
    order is kept verbatim and never re-sorted.
    """

    name: str
    dimensions: tuple[Dimension, ...]

    @property
    def dimension_names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.dimensions)

    def dimension(self, name: str) -> Dimension:
        for dim in self.dimensions:
            if dim.name == name:
                return dim
        raise KeyError(name)


def dimension_value(dim: Dimension) -> float:
    """Total weighted size of a dimension: sum of quantity x weight."""
    return sum(cat.quantity * cat.weight for cat in dim.categories)


def validate_inventory(inv: SystemInventory) -> SystemInventory:
    """Check every inventory invariant, collecting all violations.

    Returns the inventory unchanged when valid; raises InventoryError
    carrying the full violation list otherwise.
    """
    errors: list[str] = []
    if not inv.dimensions:
        errors.append(f"inventory '{inv.name}': at least one dimension is required")
    seen_dims: set[str] = set()
    for dim in inv.dimensions:
        if dim.name in seen_dims:
            errors.append(f"duplicate dimension name '{dim.name}'")
        seen_dims.add(dim.name)
        if not dim.categories:
            errors.append(f"dimension '{dim.name}': at least one category is required")
        seen_cats: set[str] = set()
        for cat in dim.categories:
            where = f"{dim.name}/{cat.name}"
            if cat.name in seen_cats:
                errors.append(f"dimension '{dim.name}': duplicate category name '{cat.name}'")
            seen_cats.add(cat.name)
            if cat.quantity < 0:
                errors.append(f"category '{where}': quantity must be >= 0, got {cat.quantity}")
            if not cat.weight > 0:
                errors.append(f"category '{where}': weight must be > 0, got {cat.weight}")
    if errors:
        raise InventoryError(errors)
    return inv
