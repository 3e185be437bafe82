"""Command line entry point.

Subcommands: validate, report, rank, render, serve. Every subcommand
takes a scenario file; load or validation failures exit with status 2
and print each problem to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import combine, render
from .contribution import event_profile
from .errors import ScenarioError
from .scenario_io import (
    Scenario,
    format_report_table,
    load_scenario_file,
    report_csv,
    save_report,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyrisk",
        description="Quantify and compare the impact of attacks and countermeasures "
        "as polygons over weighted system dimensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a scenario file and print a summary")
    p.add_argument("scenario", help="path to the scenario YAML file")

    p = sub.add_parser("report", help="evaluate all events and write the impact report")
    p.add_argument("scenario", help="path to the scenario YAML file")
    p.add_argument("-o", "--out", metavar="DIR", help="directory for report files")
    p.add_argument("--max-size", type=int, default=None, metavar="N",
                   help="largest countermeasure combination to evaluate")
    p.add_argument("--no-figures", action="store_true",
                   help="skip the PNG figures when writing the report directory")

    p = sub.add_parser("rank", help="rank countermeasure combinations by attack coverage")
    p.add_argument("scenario", help="path to the scenario YAML file")
    p.add_argument("--max-size", type=int, default=None, metavar="N")
    p.add_argument("--json", action="store_true", help="print machine-readable JSON")

    p = sub.add_parser("render", help="render an SVG overlay of selected events")
    p.add_argument("scenario", help="path to the scenario YAML file")
    p.add_argument("--events", metavar="A,B,...",
                   help="comma-separated event names (default: attack + countermeasures)")
    p.add_argument("-o", "--out", metavar="FILE", help="output file (default: stdout)")
    p.add_argument("--size", type=int, default=render.DEFAULT_CANVAS)
    p.add_argument("--show-zero-axes", action="store_true",
                   help="draw axis rays even where every profile is zero")
    p.add_argument("--no-labels", action="store_true", help="omit axis labels")
    p.add_argument("--color", action="append", default=[], metavar="EVENT=#RRGGBB",
                   help="override the color of one event (repeatable)")

    p = sub.add_parser("serve", help="serve the JSON API (and UI, if available)")
    p.add_argument("scenario", help="path to the scenario YAML file")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", metavar="DIR", default=None,
                   help="directory with the built web UI to serve at /")

    return parser


def _load(path: str) -> Scenario:
    try:
        return load_scenario_file(path)
    except ScenarioError as exc:
        for err in exc.errors:
            print(f"error: {err}", file=sys.stderr)
        raise SystemExit(2)


def _cmd_validate(args) -> int:
    scenario = _load(args.scenario)
    inv = scenario.inventory
    n_cats = sum(len(d.categories) for d in inv.dimensions)
    print(
        f"{args.scenario}: OK ({len(inv.dimensions)} dimensions, {n_cats} categories, "
        f"{len(scenario.events)} events)"
    )
    if scenario.attack:
        print(f"designated attack: {scenario.attack}; "
              f"countermeasures: {', '.join(scenario.countermeasure_names) or 'none'}")
    return 0


def _cmd_report(args) -> int:
    scenario = _load(args.scenario)
    try:
        report = combine.evaluate(
            scenario.inventory,
            scenario.events,
            attack=scenario.attack,
            countermeasures=scenario.countermeasures,
            max_size=args.max_size,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    table = format_report_table(report)
    print(table, end="")
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.json").write_text(save_report(report), encoding="utf-8")
        (outdir / "report.csv").write_text(report_csv(report), encoding="utf-8")
        (outdir / "report.txt").write_text(table, encoding="utf-8")
        written = ["report.json", "report.csv", "report.txt"]
        if not args.no_figures:
            from .figures import save_report_figures

            for path in save_report_figures(report, outdir / "figures"):
                written.append(str(path.relative_to(outdir)))
        print(f"wrote {', '.join(written)} to {outdir}", file=sys.stderr)
    return 0


def _cmd_rank(args) -> int:
    scenario = _load(args.scenario)
    if scenario.attack is None:
        print("error: scenario designates no attack to rank against", file=sys.stderr)
        return 2
    inv = scenario.inventory
    attack = event_profile(inv, scenario.event(scenario.attack))
    cms = [event_profile(inv, scenario.event(n)) for n in scenario.countermeasure_names]
    if not cms:
        print("error: scenario has no countermeasures to rank", file=sys.stderr)
        return 2
    max_size = args.max_size if args.max_size is not None else len(cms)
    try:
        ranked = combine.rank_combinations(attack, cms, max_size)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        import json

        print(json.dumps(
            [
                {
                    "names": list(r.names),
                    "coverage_pct": r.coverage,
                    "perimeter_units": r.perimeter,
                    "impact_area_units2": r.impact_area,
                }
                for r in ranked
            ],
            indent=2,
            ensure_ascii=False,
        ))
        return 0
    name_w = max(len(" + ".join(r.names)) for r in ranked)
    print(f"{'Combination'.ljust(name_w)}  {'Coverage(%)':>11}  {'P(units)':>9}  {'A(units²)':>10}")
    for r in ranked:
        print(
            f"{' + '.join(r.names).ljust(name_w)}  {r.coverage:>11.2f}  "
            f"{r.perimeter:>9.2f}  {r.impact_area:>10.2f}"
        )
    return 0


def _cmd_render(args) -> int:
    scenario = _load(args.scenario)
    inv = scenario.inventory
    if args.events:
        names = [n for n in args.events.split(",") if n]
    else:
        names = ([scenario.attack] if scenario.attack else []) + list(
            scenario.countermeasure_names
        )
        if not names:
            names = [ev.name for ev in scenario.events]
    try:
        chosen = [event_profile(inv, scenario.event(n)) for n in names]
    except KeyError as exc:
        print(f"error: unknown event {exc}", file=sys.stderr)
        return 2
    colors = {}
    for override in args.color:
        name, _, value = override.partition("=")
        if not value:
            print(f"error: --color expects EVENT=#RRGGBB, got {override!r}", file=sys.stderr)
            return 2
        colors[name] = value
    kinds = {ev.name: ev.kind.value for ev in scenario.events}
    svg = render.render_svg(
        render.spec_for(
            chosen,
            colors=colors,
            kinds=kinds,
            size=args.size,
            axis_labels=not args.no_labels,
            show_zero_axes=args.show_zero_axes,
        )
    )
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        print(svg, end="")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    scenario = _load(args.scenario)
    app = create_app(scenario, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "report": _cmd_report,
    "rank": _cmd_rank,
    "render": _cmd_render,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
