import pathlib

import pytest

from homjordan.exactla import GF, QQ

REPO = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture(params=[QQ, GF(2), GF(3), GF(5)], ids=["Q", "GF2", "GF3", "GF5"])
def any_field(request):
    return request.param


ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """record(number, passed, detail): one PASS/FAIL line per acceptance criterion."""
    store = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number: int, passed: bool, detail: str) -> None:
        store[number] = (passed, detail)
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")

    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(ACCEPTANCE, {})
    if not store:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(store):
        passed, detail = store[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'} - {detail}")
