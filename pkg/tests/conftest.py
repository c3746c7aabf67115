import random

import pytest

from latinrect import boolean_group, cyclic_group, klein_group, parse_square
from latinrect.symmetry import apply_isotopy, random_isotopy

EXAMPLE1 = """\
7
1 2 3 4 5 6 7
2 1 4 3 7 5 6
3 6 5 1 4 7 2
4 5 2 7 6 1 3
5 4 7 6 2 3 1
6 7 1 2 3 4 5
7 3 6 5 1 2 4
"""

EXAMPLE2 = """\
7
1 2 3 4 5 6 7
2 1 6 3 7 5 4
3 6 5 1 4 7 2
4 5 2 7 6 1 3
5 4 7 6 2 3 1
6 7 1 2 3 4 5
7 3 4 5 1 2 6
"""

EXAMPLE4 = """\
6
1 2 3 4 5 6
2 1 4 5 6 3
3 4 2 6 1 5
4 5 6 2 3 1
5 6 1 3 2 4
6 3 5 1 4 2
"""

# the single non-trivial autotopism reported for Example 1
EX5_ALPHA = "(15.24.37.6.)"
EX5_BETA = "(12.36.47.5.)"
EX5_GAMMA = "(14.25.67.3.)"


@pytest.fixture(scope="session")
def ex1():
    return parse_square(EXAMPLE1)


@pytest.fixture(scope="session")
def ex2():
    return parse_square(EXAMPLE2)


@pytest.fixture(scope="session")
def ex4():
    return parse_square(EXAMPLE4)


def group_tables():
    """Every generated group table of order <= 8."""
    tables = {f"Z{n}": cyclic_group(n) for n in range(1, 9)}
    tables["Klein"] = klein_group()
    for k in (1, 2, 3):
        tables[f"B{k}"] = boolean_group(k)
    return tables


def fixture_squares():
    sq = {"example1": parse_square(EXAMPLE1), "example2": parse_square(EXAMPLE2),
          "example4": parse_square(EXAMPLE4)}
    sq.update(group_tables())
    return sq


def random_isotopes(count, seed, orders=range(5, 10)):
    """Random isotopes of fixture squares whose order lies in ``orders``."""
    rng = random.Random(seed)
    pool = [s for s in fixture_squares().values() if s.n in orders]
    if 9 in orders:
        pool.append(cyclic_group(9))
    out = []
    for _ in range(count):
        s = rng.choice(pool)
        out.append(apply_isotopy(s, random_isotopy(s.n, rng)))
    return out


# -- acceptance reporting -----------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        number, title = mark.args
        _CRITERIA[number] = (title, rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}")
