import pytest

from monoidcats import kernels
from monoidcats.words import Alphabet, parse_word

# acceptance results, filled in by test_acceptance and printed after the run
ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.fixture
def abc():
    return Alphabet("abc")


@pytest.fixture
def word_a(abc):
    return parse_word(abc, "abbbaacab")


@pytest.fixture
def word_b(abc):
    return parse_word(abc, "ababcabab")


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    return kernels.available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: (int(k.split(".")[0]), k)):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
