"""Terminal summary: one line per acceptance criterion after every run."""

import re

ACCEPTANCE_PATTERN = re.compile(r"^test_a([1-9])(_|$)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error", "skipped"):
        for report in terminalreporter.stats.get(status, []):
            location = getattr(report, "location", None)
            if location is None:
                continue
            base = location[2].split("[")[0].rsplit(".", 1)[-1]
            match = ACCEPTANCE_PATTERN.match(base)
            if match is None:
                continue
            if status == "passed" and getattr(report, "when", "call") != "call":
                continue
            label = f"A{match.group(1)}"
            if status in ("failed", "error"):
                outcomes[label] = "FAIL"
            else:
                outcomes.setdefault(label, "PASS" if status == "passed" else "SKIP")
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for label in sorted(outcomes, key=lambda name: int(name[1:])):
        terminalreporter.write_line(f"{label}: {outcomes[label]}")
