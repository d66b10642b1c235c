from pathlib import Path

import pytest

CORPUS_DIR = Path(__file__).parent / "data" / "corpus"

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    from i2icodec.pgm import read_pgm

    paths = sorted(CORPUS_DIR.glob("*.pgm"))
    assert paths, f"no corpus images in {CORPUS_DIR}"
    return {p.stem: read_pgm(p) for p in paths}


@pytest.fixture
def report():
    """Record a one-line acceptance verdict, echoed in the terminal summary."""

    def _report(criterion: str, checks: dict[str, bool], detail: str = "") -> None:
        status = "PASS" if all(checks.values()) else "FAIL"
        failed = [name for name, ok in checks.items() if not ok]
        line = f"[{status}] {criterion}"
        if detail:
            line += f" :: {detail}"
        if failed:
            line += f" :: failed: {', '.join(failed)}"
        _acceptance_lines.append(line)
        print(line)

    return _report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
