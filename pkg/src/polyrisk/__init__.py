"""Polygonal impact quantification for cyber security events.

Events (attacks, countermeasures, and their combinations) are projected
as polygons over weighted system dimensions; perimeter and area metrics
make their impact comparable, and coverage/residual metrics drive
countermeasure selection.
"""

from .combine import (
    EvaluationReport,
    RankedCombination,
    ReportRow,
    coverage,
    element_union,
    evaluate,
    intersection,
    rank_combinations,
    residual,
    system_share,
    union,
)
from .contribution import (
    ContributionProfile,
    EventDefinition,
    EventKind,
    contribution,
    event_profile,
    system_profile,
    validate_event,
)
from .errors import (
    InventoryError,
    ProfileMismatchError,
    ScenarioError,
    UndefinedContributionError,
    ValidationError,
)
from .geometry import (
    PolygonInstance,
    ShapeClass,
    axis_angles,
    classify_instance,
    edge_length,
    equilateral_perimeter,
    geometric_area,
    irregular_perimeter,
    impact_area,
    perimeter,
    polygon_instance,
    polygon_vertices,
    regular_area,
    regular_perimeter,
)
from .inventory import (
    CarverScore,
    Category,
    Dimension,
    SystemInventory,
    carver_weight,
    dimension_value,
    validate_inventory,
)
from .render import RenderEntry, RenderSpec, render_svg, spec_for
from .scenario_io import (
    Scenario,
    bundled_scenario_path,
    format_report_table,
    load_report,
    load_scenario,
    load_scenario_file,
    report_csv,
    save_report,
)

__version__ = "0.1.0"

__all__ = [
    "CarverScore",
    "Category",
    "ContributionProfile",
    "Dimension",
    "EvaluationReport",
    "EventDefinition",
    "EventKind",
    "InventoryError",
    "PolygonInstance",
    "ProfileMismatchError",
    "RankedCombination",
    "RenderEntry",
    "RenderSpec",
    "ReportRow",
    "Scenario",
    "ScenarioError",
    "ShapeClass",
    "SystemInventory",
    "UndefinedContributionError",
    "ValidationError",
    "axis_angles",
    "bundled_scenario_path",
    "carver_weight",
    "classify_instance",
    "contribution",
    "coverage",
    "dimension_value",
    "edge_length",
    "element_union",
    "equilateral_perimeter",
    "evaluate",
    "event_profile",
    "format_report_table",
    "geometric_area",
    "intersection",
    "irregular_perimeter",
    "load_report",
    "load_scenario",
    "load_scenario_file",
    "impact_area",
    "perimeter",
    "polygon_instance",
    "polygon_vertices",
    "rank_combinations",
    "regular_area",
    "regular_perimeter",
    "render_svg",
    "report_csv",
    "residual",
    "save_report",
    "spec_for",
    "system_profile",
    "system_share",
    "union",
    "validate_event",
    "validate_inventory",
]
