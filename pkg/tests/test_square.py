import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import EXAMPLE1, EXAMPLE4, fixture_squares, random_isotopes
from latinrect.core import (LatinSquare, Permutation, cyclic_group, distance, format_square,
                            is_commutative, is_latin, klein_group, left_divide, left_translation,
                            parastrophe, parse_cycles, parse_square, relabel, right_divide)
from latinrect.errors import MalformedInputError, NotLatinError, OrderMismatchError

FIXTURES = fixture_squares()


def test_parse_example1(ex1):
    assert ex1.n == 7
    assert ex1[2, 3] == 4 and ex1[7, 7] == 4
    assert ex1[2, 7] == 6 and ex1[7, 3] == 6


def test_parse_order_one():
    s = parse_square("1\n1")
    assert s.n == 1 and s[1, 1] == 1


def test_duplicate_in_row_names_row():
    bad = EXAMPLE1.replace("2 1 4 3 7 5 6", "2 1 2 3 7 5 6")
    with pytest.raises(NotLatinError, match="row 2"):
        parse_square(bad)


def test_duplicate_in_column_names_column():
    with pytest.raises(NotLatinError, match="column 1"):
        parse_square("2\n1 2\n1 2\n")


@pytest.mark.parametrize("text, msg", [
    ("", "empty"),
    ("x\n1\n", "expected the order"),
    ("2\n1 2\n", "expected 2 rows"),
    ("2\n1 2\n2\n", "row 2"),
    ("2\n1 a\n2 1\n", "not an integer"),
    ("2\n1 3\n2 1\n", "outside 1..2"),
    ("0\n", "positive"),
])
def test_malformed(text, msg):
    with pytest.raises(MalformedInputError, match=msg):
        parse_square(text)


def test_comments_and_crlf(ex1):
    text = "# Example 1\r\n" + EXAMPLE1.replace("\n", "\r\n") + "# end\r\n"
    assert parse_square(text) == ex1


def test_format_round_trip(ex1):
    assert format_square(ex1) == EXAMPLE1
    assert parse_square(format_square(ex1)) == ex1


def test_format_order_one():
    assert format_square(LatinSquare([[1]])) == "1\n1\n"


def test_format_example4(ex4):
    text = format_square(ex4)
    assert text == EXAMPLE4
    assert len(text.splitlines()) == 7


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_round_trip_fixtures(name):
    s = FIXTURES[name]
    assert parse_square(format_square(s)) == s


@pytest.mark.parametrize("i, cycles", [
    (1, "(1.2.3.4.5.6.7.)"),
    (2, "(12.34.576.)"),
    (3, "(1354.267.)"),
    (4, "(1473256.)"),
    (5, "(1524637.)"),
    (6, "(1642753.)"),
    (7, "(1745.236.)"),
])
def test_left_translations_example1(ex1, i, cycles):
    assert left_translation(ex1, i) == parse_cycles(cycles, 7)


def test_left_translation_range(ex1):
    with pytest.raises(IndexError):
        left_translation(ex1, 8)


def test_divisions_example1(ex1):
    assert left_divide(ex1, 2, 4) == 3
    assert right_divide(ex1, 6, 3) == 7
    assert all(left_divide(ex1, 1, a) == a for a in range(1, 8))


def test_right_divide_example4(ex4):
    assert right_divide(ex4, 1, 2) == 2


def test_divide_out_of_range(ex1):
    with pytest.raises(IndexError):
        left_divide(ex1, 0, 1)
    with pytest.raises(IndexError):
        right_divide(ex1, 1, 9)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_division_laws(name):
    s = FIXTURES[name]
    for x in range(1, s.n + 1):
        for y in range(1, s.n + 1):
            assert left_divide(s, x, s[x, y]) == y
            assert right_divide(s, s[x, y], y) == x


def test_parastrophe1_example1(ex1):
    assert parastrophe(ex1, 1)[2, 4] == 3


def test_parastrophe0_is_identity(ex1):
    assert parastrophe(ex1, 0) is ex1


def test_parastrophe5_transposes(ex1):
    t = parastrophe(ex1, 5)
    assert all(t[x, y] == ex1[y, x] for x in range(1, 8) for y in range(1, 8))


def test_parastrophe_bad_index(ex1):
    with pytest.raises(ValueError):
        parastrophe(ex1, 6)


def _parastrophe_by_definition(s, k):
    # triple set of the table with roles permuted, rebuilt cell by cell
    cells = {}
    for x in range(1, s.n + 1):
        for y in range(1, s.n + 1):
            z = s[x, y]
            key, val = {1: ((x, z), y), 2: ((z, y), x), 3: ((y, z), x),
                        4: ((z, x), y), 5: ((y, x), z)}[k]
            cells[key] = val
    return LatinSquare([[cells[x, y] for y in range(1, s.n + 1)] for x in range(1, s.n + 1)])


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("name", ["example1", "example4", "Z5", "B2"])
def test_parastrophe_matches_definition(name, k):
    s = FIXTURES[name]
    assert parastrophe(s, k) == _parastrophe_by_definition(s, k)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_parastrophe_closure(name):
    s = FIXTURES[name]
    p = parastrophe
    assert p(p(s, 1), 1) == s
    assert p(p(s, 2), 2) == s
    assert p(s, 3) == p(p(s, 1), 2)
    assert p(s, 4) == p(p(s, 2), 1)
    assert p(s, 5) == p(p(p(s, 1), 2), 1)
    assert p(s, 5) == p(p(p(s, 2), 1), 2)


def test_distance_example1_example2(ex1, ex2):
    assert distance(ex1, ex2) == 4


def test_distance_self(ex1):
    assert distance(ex1, ex1) == 0


def test_distance_order_mismatch(ex1, ex4):
    with pytest.raises(OrderMismatchError):
        distance(ex1, ex4)


def test_distance_klein_vs_z4():
    z4, klein = cyclic_group(4), klein_group()
    best = min(
        sum(z4.rows[i][j] != p[klein.rows[i][j] - 1] for i in range(4) for j in range(4))
        for p in permutations(range(1, 5)))
    assert best == 4
    assert min(distance(z4, relabel(klein, Permutation(p)))
               for p in permutations(range(1, 5))) == 4


def test_distance_metric_on_random_triples():
    rng = random.Random(7)
    squares = random_isotopes(60, seed=11, orders={7})
    for _ in range(200):
        a, b, c = rng.sample(squares, 3)
        assert distance(a, b) == distance(b, a)
        assert distance(a, c) <= distance(a, b) + distance(b, c)
        assert (distance(a, b) == 0) == (a == b)


def test_is_commutative(ex1, ex4):
    assert is_commutative(ex4)
    assert not is_commutative(ex1)
    assert is_commutative(LatinSquare([[1]]))


def test_is_latin():
    assert is_latin([[1, 2], [2, 1]])
    assert not is_latin([[1, 2], [1, 2]])
    assert not is_latin([[1, 2, 3], [2, 3, 1]])


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_random_isotope_round_trip(seed):
    (s,) = random_isotopes(1, seed)
    assert parse_square(format_square(s)) == s
