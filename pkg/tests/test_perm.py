import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.domain.errors import DomainError, ParseError, ResourceLimitError
from src.domain.perm import (
    Permutation,
    compose,
    cycle_decomposition,
    enumerate_involution_shapes,
    enumerate_involutions,
    involution_count,
    involution_shape,
    order,
    parse_cycles,
)


@st.composite
def permutations_of(draw, max_degree=9):
    n = draw(st.integers(min_value=1, max_value=max_degree))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def test_parse_transposition():
    theta = parse_cycles("(1 2)", 5)
    assert theta.images == (2, 1, 3, 4, 5)
    assert theta(1) == 2 and theta(5) == 5


def test_parse_empty_is_identity():
    assert parse_cycles("", 4).is_identity()
    assert parse_cycles("  ", 4) == Permutation.identity(4)


def test_three_cycle_has_order_three():
    rho = parse_cycles("(1 2 3)", 5)
    assert order(rho) == 3
    assert compose(rho, compose(rho, rho)).is_identity()


@pytest.mark.parametrize("text", ["(1 1)", "(1 6)", "(1 2", "1 2)", "(a b)", "(1 2)(2 3)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_cycles(text, 5)


def test_compose_applies_right_factor_first():
    p = parse_cycles("(1 2)", 3)
    q = parse_cycles("(2 3)", 3)
    assert compose(p, q) == parse_cycles("(1 2 3)", 3)
    assert compose(q, p) == parse_cycles("(1 3 2)", 3)
    assert compose(p, p).is_identity()
    assert compose(Permutation.identity(3), q) == q


def test_compose_degree_mismatch():
    with pytest.raises(DomainError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_cycle_decomposition_is_canonical():
    assert cycle_decomposition(Permutation.identity(3)).cycles == ((1,), (2,), (3,))
    assert cycle_decomposition(parse_cycles("(3 4)(1 2)", 5)).cycles == ((1, 2), (3, 4), (5,))
    assert cycle_decomposition(parse_cycles("(3 2 1)", 4)).cycles == ((1, 3, 2), (4,))


def test_order_is_lcm_of_cycle_lengths():
    assert order(parse_cycles("(1 2)(3 4 5)", 5)) == 6
    assert order(Permutation.identity(6)) == 1
    assert order(parse_cycles("(1 2)(3 4)", 5)) == 2


def test_involution_shape():
    shape = involution_shape(parse_cycles("(1 2)(3 4)", 5))
    assert shape.transpositions == ((1, 2), (3, 4))
    assert shape.fixed_points == (5,)
    assert (shape.a, shape.b) == (2, 1)

    shape = involution_shape(parse_cycles("(2 5)", 5))
    assert shape.a == 1
    assert shape.fixed_points == (1, 3, 4)


def test_involution_shape_rejects_non_involutions():
    with pytest.raises(DomainError):
        involution_shape(Permutation.identity(4))
    with pytest.raises(DomainError):
        involution_shape(parse_cycles("(1 2 3)", 4))


@pytest.mark.parametrize("n, expected", [(3, 3), (4, 9), (5, 25), (7, 231), (8, 763), (9, 2619)])
def test_involution_count(n, expected):
    assert involution_count(n) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_matches_count_without_duplicates(n):
    found = list(enumerate_involutions(n))
    assert len(found) == involution_count(n)
    assert len(set(found)) == len(found)
    for theta in found:
        assert order(theta) == 2
        shape = involution_shape(theta)
        assert 2 * shape.a + shape.b == n


def test_enumeration_by_transposition_count():
    shapes = list(enumerate_involution_shapes(5, transpositions=2))
    assert len(shapes) == involution_count(5, transpositions=2) == 15
    assert all(shape.a == 2 for shape in shapes)


def test_enumeration_bound_is_checked_eagerly():
    with pytest.raises(ResourceLimitError):
        enumerate_involutions(13)
    with pytest.raises(ResourceLimitError):
        enumerate_involution_shapes(8, max_degree=7)


@given(permutations_of())
def test_inverse_composes_to_identity(p):
    assert compose(p, p.inverse()).is_identity()
    assert compose(p.inverse(), p).is_identity()


@given(permutations_of())
def test_cycle_decomposition_round_trips(p):
    assert cycle_decomposition(p).to_permutation() == p
    assert parse_cycles(p.format_cycles(), p.degree) == p
