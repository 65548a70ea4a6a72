"""Shared pytest plumbing.

The acceptance tests register one verdict line apiece; printing them from a
terminal-summary hook keeps them visible in normal (captured) pytest runs.
"""

acceptance_lines = []


def register_verdict(line):
    acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
