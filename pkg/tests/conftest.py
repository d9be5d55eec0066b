import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion id -> list of (case id, passed, detail)
ACCEPTANCE: dict[str, list] = defaultdict(list)


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance case under ``criterion_id``."""
    marker = request.node.get_closest_marker("criterion")
    key = marker.args[0]
    entry = {"case": request.node.name, "notes": []}
    ACCEPTANCE[key].append(entry)
    request.node.acceptance_entry = entry
    return entry["notes"]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    entry = getattr(item, "acceptance_entry", None)
    if entry is not None and rep.when == "call":
        entry["passed"] = rep.passed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id): acceptance criterion this test belongs to")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        entries = ACCEPTANCE[key]
        failed = [e["case"] for e in entries if not e.get("passed")]
        status = "PASS" if not failed else "FAIL"
        line = f"[{status}] criterion {key} ({len(entries) - len(failed)}/{len(entries)} cases)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
        for e in entries:
            for note in e["notes"]:
                terminalreporter.write_line(f"        {e['case']}: {note}")
