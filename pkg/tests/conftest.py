import pytest

from hilbert_resources import solver

# every ResourceRequirement produced anywhere in the suite is re-checked for
# minimality when the session ends
_PRODUCED = []
_original_requirement = solver._requirement


def _recording_requirement(*args, **kwargs):
    req = _original_requirement(*args, **kwargs)
    _PRODUCED.append(req)
    return req


solver._requirement = _recording_requirement


def produced_requirements():
    return list(_PRODUCED)


def pytest_sessionfinish(session, exitstatus):
    bad = [r for r in _PRODUCED if not r.is_minimal()]
    reporter = session.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        reporter.write_line(
            f"minimality re-check: {len(_PRODUCED) - len(bad)}/{len(_PRODUCED)} solver outputs minimal"
        )
    if bad:
        for r in bad[:10]:
            if reporter is not None:
                reporter.write_line(f"NOT MINIMAL: {r}")
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES = {}


def record_acceptance(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({detail})"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
