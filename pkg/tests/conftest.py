"""Shared fixtures: the bundled case study built directly as objects."""

from __future__ import annotations

import pytest

from polyrisk import (
    Category,
    Dimension,
    EventDefinition,
    EventKind,
    SystemInventory,
    event_profile,
)


def make_table1_inventory() -> SystemInventory:
    return SystemInventory(
        name="targeted-server",
        dimensions=(
            Dimension("Internal user", (
                Category("root", 3, 5),
                Category("standard user", 25, 2),
            )),
            Dimension("Channels", (
                Category("credentials", 28, 4),
                Category("IP addresses", 30, 3),
            )),
            Dimension("Physical resources", (
                Category("PC", 27, 2),
                Category("server", 12, 5),
            )),
            Dimension("Logical resources", (
                Category("firewall", 2, 4),
                Category("software", 10, 3),
            )),
        ),
    )


def make_table1_events() -> dict[str, EventDefinition]:
    cm = EventKind.COUNTERMEASURE
    return {
        "A1": EventDefinition("A1", EventKind.ATTACK, {
            ("Internal user", "root"): 3,
            ("Internal user", "standard user"): 25,
            ("Channels", "credentials"): 28,
            ("Physical resources", "server"): 5,
            ("Logical resources", "firewall"): 2,
            ("Logical resources", "software"): 4,
        }),
        "C1": EventDefinition("C1", cm, {
            ("Internal user", "root"): 3,
            ("Internal user", "standard user"): 25,
            ("Physical resources", "PC"): 27,
            ("Physical resources", "server"): 3,
            ("Logical resources", "software"): 4,
        }),
        "C2": EventDefinition("C2", cm, {
            ("Internal user", "root"): 3,
            ("Internal user", "standard user"): 25,
            ("Channels", "IP addresses"): 30,
            ("Logical resources", "firewall"): 2,
        }),
        "C3": EventDefinition("C3", cm, {
            ("Internal user", "root"): 3,
            ("Channels", "credentials"): 3,
            ("Physical resources", "server"): 12,
            ("Logical resources", "software"): 5,
        }),
    }


@pytest.fixture(scope="session")
def inventory() -> SystemInventory:
    return make_table1_inventory()


@pytest.fixture(scope="session")
def events() -> dict[str, EventDefinition]:
    return make_table1_events()


@pytest.fixture(scope="session")
def profiles(inventory, events):
    return {name: event_profile(inventory, ev) for name, ev in events.items()}
