import pytest

from subtiling import cli
from subtiling.suspension import SuspensionSystem


def _sub(name):
    return cli.corpus_lookup(name).substitution()


_SYSTEMS = {}


def system_for(name):
    """Session-wide SuspensionSystem cache keyed by corpus id."""
    if name not in _SYSTEMS:
        _SYSTEMS[name] = SuspensionSystem(_sub(name))
    return _SYSTEMS[name]


@pytest.fixture(scope="session")
def fib():
    return _sub("fibonacci")


@pytest.fixture(scope="session")
def tm():
    return _sub("thue-morse")


@pytest.fixture(scope="session")
def aba():
    return _sub("aba-left")


@pytest.fixture(scope="session")
def fib2():
    return _sub("fib2")


@pytest.fixture(scope="session")
def rauzy():
    return _sub("rauzy")


@pytest.fixture(scope="session")
def rauzy2():
    return _sub("rauzy2-left")


@pytest.fixture(scope="session")
def sys_fib():
    return system_for("fibonacci")


@pytest.fixture(scope="session")
def sys_tm():
    return system_for("thue-morse")


@pytest.fixture(scope="session")
def sys_aba():
    return system_for("aba-left")


@pytest.fixture(scope="session")
def sys_fib2():
    return system_for("fib2")


@pytest.fixture(scope="session")
def sys_rauzy():
    return system_for("rauzy")


@pytest.fixture(scope="session")
def sys_rauzy2():
    return system_for("rauzy2-left")


_REPORTS = {}

CORPUS_IDS = (
    "thue-morse", "fibonacci", "aba-left", "aba-gamma",
    "fib2", "rauzy", "rauzy2-left", "rauzy2-gamma",
)


def report_for(name):
    """Full analysis report per corpus id, computed once per session."""
    if name not in _REPORTS:
        spec = cli.corpus_lookup(name)
        _REPORTS[name] = cli.run_analysis(spec)
    return _REPORTS[name]


@pytest.fixture(scope="session")
def corpus_reports():
    return {name: report_for(name) for name in CORPUS_IDS}
