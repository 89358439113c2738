from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kronsat.core import (
    KronTriple,
    Partition,
    QuasiPolynomial,
    add,
    partitions,
    poly_taylor_shift,
    poly_eval,
    stretch,
)
from kronsat.errors import ShapeError, WeightMismatch

parts = st.lists(st.integers(1, 9), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_partition_rejects_bad_input():
    with pytest.raises(ShapeError):
        Partition((2, 3))
    with pytest.raises(ShapeError):
        Partition((2, 0))
    assert Partition.from_padded((3, 1, 0, 0)) == Partition((3, 1))


def test_parse_and_format():
    assert Partition.parse("6,4,2") == (6, 4, 2)
    assert Partition.parse("0") == () == Partition.parse("")
    assert Partition(()).format() == "0"


def test_triple_weight_mismatch_names_pair():
    with pytest.raises(WeightMismatch, match="mu"):
        KronTriple.parse("3,2", "2,2", "3,2")


@given(parts)
def test_parse_format_round_trip(p):
    assert Partition.parse(p.format()) == p


@given(parts, st.integers(1, 6))
def test_stretch_scales_weight_and_length(p, N):
    q = stretch(p, N)
    assert q.weight() == N * p.weight()
    assert len(q) == len(p)


@given(parts, parts)
def test_add_is_termwise(p, q):
    s = add(p, q)
    assert s.weight() == p.weight() + q.weight()
    assert add(p, q) == add(q, p)
    assert add(p, p) == stretch(p, 2)


@pytest.mark.parametrize("n,count", [(0, 1), (5, 7), (10, 42)])
def test_partition_counts(n, count):
    assert sum(1 for _ in partitions(n)) == count


def test_partitions_respect_bounds():
    for p in partitions(9, max_part=4, max_length=3):
        assert p.part(1) <= 4 and len(p) <= 3 and p.weight() == 9


def test_quasipolynomial_branch_convention():
    f = QuasiPolynomial(((Fraction(-1, 2), Fraction(1, 2)), (1, Fraction(1, 2))))
    assert [f(N) for N in range(1, 7)] == [0, 2, 1, 3, 2, 4]
    assert f.period == 2 and f.degree == 1


def test_quasipolynomial_json_round_trip():
    f = QuasiPolynomial(((Fraction(-1, 4), Fraction(3, 2), Fraction(7, 4)), (1, Fraction(3, 2), Fraction(7, 4))))
    assert QuasiPolynomial.from_json(f.to_json()) == f


coeffs = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=4)


@given(st.lists(coeffs, min_size=1, max_size=3), st.integers(0, 7))
def test_shift_matches_evaluation(branches, c):
    f = QuasiPolynomial(tuple(tuple(b) for b in branches))
    g = f.shift(c)
    for N in range(1, 51):
        assert g(N) == f(N + c)


@given(coeffs, st.integers(-4, 4), st.integers(-10, 10))
def test_taylor_shift(p, c, x):
    assert poly_eval(poly_taylor_shift(p, c), x) == poly_eval(p, x + c)
