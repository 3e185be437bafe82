import pytest

from polyrisk import (
    ScenarioError,
    bundled_scenario_path,
    evaluate,
    format_report_table,
    load_report,
    load_scenario,
    load_scenario_file,
    report_csv,
    save_report,
)
from conftest import make_table1_inventory

MINIMAL = """
schema_version: 1
name: tiny
inventory:
  name: box
  dimensions:
    - name: users
      categories:
        - {name: admin, quantity: 2, weight: 5}
events: []
"""


class TestLoadScenario:
    def test_bundled_case_study(self):
        scenario = load_scenario_file(bundled_scenario_path())
        assert scenario.name == "openssh-cve-2015-5600"
        assert len(scenario.inventory.dimensions) == 4
        assert len(scenario.events) == 4
        assert scenario.attack == "A1"
        assert scenario.countermeasure_names == ("C1", "C2", "C3")

    def test_bundled_inventory_matches_direct_construction(self):
        scenario = load_scenario_file(bundled_scenario_path())
        assert scenario.inventory == make_table1_inventory()

    def test_count_exceeding_quantity_names_location(self):
        text = bundled_scenario_path().read_text().replace(
            "Channels: {credentials: 28}", "Channels: {credentials: 29}"
        )
        with pytest.raises(ScenarioError, match="Channels/credentials"):
            load_scenario(text)

    def test_empty_events_is_valid(self):
        scenario = load_scenario(MINIMAL)
        assert scenario.events == ()
        assert scenario.attack is None
        assert scenario.countermeasure_names == ()

    def test_unknown_schema_version(self):
        with pytest.raises(ScenarioError, match="schema_version"):
            load_scenario(MINIMAL.replace("schema_version: 1", "schema_version: 99"))

    def test_not_yaml(self):
        with pytest.raises(ScenarioError, match="not valid YAML"):
            load_scenario("events: [unclosed")

    def test_not_a_mapping(self):
        with pytest.raises(ScenarioError, match="mapping"):
            load_scenario("- just\n- a\n- list\n")

    def test_missing_file_names_path(self, tmp_path):
        missing = tmp_path / "nope.yaml"
        with pytest.raises(ScenarioError, match="nope.yaml"):
            load_scenario_file(missing)

    def test_collects_multiple_errors(self):
        text = """
schema_version: 1
name: broken
inventory:
  name: box
  dimensions:
    - name: users
      categories:
        - {name: admin, quantity: 2, weight: 5}
        - {name: admin, quantity: 1, weight: 2}
events:
  - name: E1
    kind: attack
    affected:
      users: {admin: 3}
  - name: E1
    kind: attack
    affected: {}
attack: E9
countermeasures: [E8]
"""
        with pytest.raises(ScenarioError) as exc:
            load_scenario(text)
        joined = "\n".join(exc.value.errors)
        assert "duplicate category name 'admin'" in joined
        assert "exceeds category quantity" in joined
        assert "duplicate event name 'E1'" in joined
        assert "'E9' does not match any event" in joined
        assert "'E8' does not match any event" in joined

    def test_attack_cannot_be_its_own_countermeasure(self):
        text = bundled_scenario_path().read_text().replace(
            "countermeasures: [C1, C2, C3]", "countermeasures: [C1, A1]"
        )
        with pytest.raises(ScenarioError, match="both the attack and a countermeasure"):
            load_scenario(text)

    def test_unknown_kind(self):
        text = MINIMAL.replace(
            "events: []",
            "events:\n  - {name: E, kind: mystery, affected: {}}",
        )
        with pytest.raises(ScenarioError, match="kind"):
            load_scenario(text)

    def test_carver_weights_accepted(self):
        text = """
schema_version: 1
name: carver
inventory:
  name: box
  dimensions:
    - name: users
      categories:
        - name: admin
          quantity: 2
          carver: {criticality: 2, accessibility: 4, recuperability: 6,
                   vulnerability: 8, effect: 10, recognizability: 6}
events: []
"""
        scenario = load_scenario(text)
        assert scenario.inventory.dimensions[0].categories[0].weight == 6.0

    def test_weight_and_carver_together_rejected(self):
        text = """
schema_version: 1
name: carver
inventory:
  name: box
  dimensions:
    - name: users
      categories:
        - name: admin
          quantity: 2
          weight: 3
          carver: {criticality: 2, accessibility: 4, recuperability: 6,
                   vulnerability: 8, effect: 10, recognizability: 6}
events: []
"""
        with pytest.raises(ScenarioError, match="exactly one of 'weight' or 'carver'"):
            load_scenario(text)


@pytest.fixture(scope="module")
def report():
    scenario = load_scenario_file(bundled_scenario_path())
    return evaluate(
        scenario.inventory,
        scenario.events,
        attack=scenario.attack,
        countermeasures=scenario.countermeasures,
    )


class TestReportSerialization:
    def test_round_trip_is_identical(self, report):
        assert load_report(save_report(report)) == report

    def test_json_is_stable(self, report):
        assert save_report(report) == save_report(report)

    def test_table_has_all_nine_rows(self, report):
        table = format_report_table(report)
        lines = table.strip().splitlines()
        assert len(lines) == 2 + 9
        assert lines[0].startswith("Event")
        assert any(line.startswith("C1 ∪ C2 ∪ C3") for line in lines)

    def test_table_rounds_to_two_decimals(self, report):
        table = format_report_table(report)
        assert "565.69" in table and "20000.00" in table

    def test_csv_full_precision(self, report):
        text = report_csv(report)
        lines = text.strip().splitlines()
        assert lines[0].startswith("event,kind,perimeter_units")
        assert len(lines) == 1 + 9
        a1 = next(line for line in lines if line.startswith("A1,"))
        assert "343.9897152177462" in a1

    def test_empty_report_serializes(self, inventory):
        empty = evaluate(inventory, [])
        table = format_report_table(empty)
        assert table.splitlines()[0].startswith("Event")
        assert load_report(save_report(empty)) == empty

    def test_no_attack_drops_coverage_column(self, inventory, events):
        report = evaluate(inventory, events.values())
        table = format_report_table(report)
        assert "Coverage" not in table
        assert "Share(%)" in table
