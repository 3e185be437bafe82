import json

import pytest

from polyrisk import bundled_scenario_path
from polyrisk.cli import main

SCENARIO = str(bundled_scenario_path())


def test_validate_ok(capsys):
    assert main(["validate", SCENARIO]) == 0
    out = capsys.readouterr().out
    assert "OK" in out and "4 dimensions" in out and "4 events" in out


def test_validate_missing_file_names_path(capsys):
    assert main(["validate", "/no/such/scenario.yaml"]) == 2
    err = capsys.readouterr().err
    assert "/no/such/scenario.yaml" in err


def test_validate_broken_scenario(tmp_path, capsys):
    bad = tmp_path / "bad.yaml"
    bad.write_text(
        bundled_scenario_path().read_text().replace(
            "Channels: {credentials: 28}", "Channels: {credentials: 999}"
        )
    )
    assert main(["validate", str(bad)]) == 2
    assert "Channels/credentials" in capsys.readouterr().err


def test_report_prints_table(capsys):
    assert main(["report", SCENARIO]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0].startswith("Event")
    assert len(lines) == 2 + 9
    assert "343.99" in out and "6588.91" in out


def test_report_writes_directory(tmp_path, capsys):
    outdir = tmp_path / "out"
    assert main(["report", SCENARIO, "-o", str(outdir)]) == 0
    assert (outdir / "report.json").is_file()
    assert (outdir / "report.csv").is_file()
    assert (outdir / "report.txt").is_file()
    figures = sorted(p.name for p in (outdir / "figures").iterdir())
    assert figures == ["case_by_case.png", "combined_mitigation.png", "coverage.png"]
    doc = json.loads((outdir / "report.json").read_text())
    assert len(doc["rows"]) == 9


def test_report_no_figures(tmp_path):
    outdir = tmp_path / "out"
    assert main(["report", SCENARIO, "-o", str(outdir), "--no-figures"]) == 0
    assert not (outdir / "figures").exists()


def test_report_output_is_reproducible(tmp_path):
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    assert main(["report", SCENARIO, "-o", str(out_a)]) == 0
    assert main(["report", SCENARIO, "-o", str(out_b)]) == 0
    files_a = sorted(p.relative_to(out_a) for p in out_a.rglob("*") if p.is_file())
    files_b = sorted(p.relative_to(out_b) for p in out_b.rglob("*") if p.is_file())
    assert files_a == files_b
    for rel in files_a:
        assert (out_a / rel).read_bytes() == (out_b / rel).read_bytes(), rel


def test_report_max_size(tmp_path, capsys):
    assert main(["report", SCENARIO, "--max-size", "2"]) == 0
    out = capsys.readouterr().out
    assert "C1 ∪ C2" in out
    assert "C1 ∪ C2 ∪ C3" not in out


def test_rank_best_combination_first(capsys):
    assert main(["rank", SCENARIO]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("Combination")
    assert lines[1].startswith("C2 + C3")


def test_rank_json(capsys):
    assert main(["rank", SCENARIO, "--json"]) == 0
    ranked = json.loads(capsys.readouterr().out)
    assert ranked[0]["names"] == ["C2", "C3"]
    assert ranked[0]["coverage_pct"] == pytest.approx(77.74831243973, rel=1e-12)


def test_rank_without_attack(tmp_path, capsys):
    text = bundled_scenario_path().read_text().replace("attack: A1\n", "")
    scenario = tmp_path / "no-attack.yaml"
    scenario.write_text(text)
    assert main(["rank", str(scenario)]) == 2
    assert "no attack" in capsys.readouterr().err


def test_render_to_file(tmp_path, capsys):
    out = tmp_path / "overlay.svg"
    assert main(["render", SCENARIO, "--events", "A1,C1", "-o", str(out)]) == 0
    svg = out.read_text()
    assert svg.startswith("<svg")
    assert svg.count("<path ") == 2


def test_render_defaults_to_attack_and_countermeasures(capsys):
    assert main(["render", SCENARIO]) == 0
    svg = capsys.readouterr().out
    assert svg.count("<path ") == 4


def test_render_unknown_event(capsys):
    assert main(["render", SCENARIO, "--events", "A1,XX"]) == 2
    assert "XX" in capsys.readouterr().err


def test_render_color_override(capsys):
    assert main(["render", SCENARIO, "--events", "A1", "--color", "A1=#abcdef"]) == 0
    assert "#abcdef" in capsys.readouterr().out


def test_render_bad_color_flag(capsys):
    assert main(["render", SCENARIO, "--events", "A1", "--color", "A1"]) == 2
    assert "--color" in capsys.readouterr().err
