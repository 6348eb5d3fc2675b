import csv
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mcikit.catalog import load_catalog  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
CATALOG = ROOT / "data" / "catalog"
SMALLGROUPS = CATALOG / "smallgroups"
PERM = CATALOG / "perm"


def _load_smallgroups():
    groups = []
    for f in sorted(SMALLGROUPS.glob("order_*.txt")):
        groups.extend(load_catalog(f))
    return groups


@pytest.fixture(scope="session")
def catalog():
    """Every group of the exported SmallGroups catalog, in file order."""
    return _load_smallgroups()


@pytest.fixture(scope="session")
def perm_fixtures():
    return {f.stem: load_catalog(f)[0] for f in sorted(PERM.glob("*.txt"))}


@pytest.fixture(scope="session")
def gap_invariants():
    with open(CATALOG / "smallgroups_invariants.tsv", newline="") as fh:
        return {row["label"]: row for row in csv.DictReader(fh, delimiter="\t")}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
