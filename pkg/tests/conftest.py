import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                name = rep.nodeid.split("::")[-1][len("test_criterion_"):]
                lines.append((name, key))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, key in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if key == 'passed' else 'FAIL'}  {name}")
