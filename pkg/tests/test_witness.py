import pytest

from src.domain.errors import DomainError, InvariantViolation
from src.domain.kneser import KneserParams, induced_map
from src.domain.models import Classification, Family, TheoremTag, Verdict
from src.domain.numth import binom_exact, is_power_of_two
from src.domain.perm import enumerate_involution_shapes, involution_count, involution_shape, parse_cycles
from src.domain.witness import classify_kneser, classify_odd, disjoint_fixed_pair, fixed_vertex

FIXED_VERTEX_INSTANCES = [(5, 2), (7, 2), (7, 3), (8, 2), (9, 2), (9, 3), (9, 4), (10, 4), (11, 2), (12, 2)]
PAIR_INSTANCES = [(5, 2), (7, 2), (8, 2), (9, 2), (9, 4), (12, 4)]


def shape_of(text: str, n: int):
    return involution_shape(parse_cycles(text, n))


@pytest.mark.parametrize(
    "n, k, perm, expected",
    [
        (5, 2, "(1 2)(3 4)", "{1,2}"),
        (7, 3, "(1 2)", "{1,2,3}"),
        (8, 2, "(1 2)(3 4)(5 6)", "{1,2}"),
        (7, 3, "(1 2)(3 4)(5 6)", "{1,2,7}"),
        (10, 4, "(1 2)", "{1,2,3,4}"),
        (10, 4, "(1 2)(3 4)(5 6)", "{1,2,3,4}"),
        (10, 4, "(1 2)(3 4)(5 6)(7 8)(9 10)", "{1,2,3,4}"),
    ],
)
def test_fixed_vertex_examples(n, k, perm, expected):
    assert str(fixed_vertex(shape_of(perm, n), KneserParams(n, k))) == expected


def test_fixed_vertex_rejects_even_n_odd_k():
    with pytest.raises(DomainError):
        fixed_vertex(shape_of("(1 2)", 8), KneserParams(8, 3))


def test_fixed_vertex_degree_mismatch():
    with pytest.raises(DomainError):
        fixed_vertex(shape_of("(1 2)", 6), KneserParams(7, 2))


@pytest.mark.parametrize("n, k", FIXED_VERTEX_INSTANCES)
def test_every_involution_fixes_a_vertex(n, k):
    params = KneserParams(n, k)
    checked = 0
    for shape in enumerate_involution_shapes(n):
        v = fixed_vertex(shape, params)
        assert induced_map(shape.to_permutation(), v) == v
        checked += 1
    assert checked == involution_count(n)


@pytest.mark.parametrize(
    "n, k, perm, v, w",
    [
        (8, 2, "(1 2)", "{1,2}", "{3,4}"),
        (9, 2, "(1 2)(3 4)(5 6)", "{1,2}", "{3,4}"),
        (9, 4, "(1 2)(3 4)", "{1,2,3,4}", "{5,6,7,8}"),
        (9, 4, "(1 2)(3 4)(5 6)(7 8)", "{1,2,3,4}", "{5,6,7,8}"),
        (9, 4, "(1 2)(3 4)(5 6)", "{1,2,3,4}", "{5,6,7,8}"),
    ],
)
def test_disjoint_fixed_pair_examples(n, k, perm, v, w):
    first, second = disjoint_fixed_pair(shape_of(perm, n), KneserParams(n, k))
    assert (str(first), str(second)) == (v, w)


@pytest.mark.parametrize("n, k", PAIR_INSTANCES)
def test_every_involution_fixes_a_disjoint_pair(n, k):
    params = KneserParams(n, k)
    for shape in enumerate_involution_shapes(n):
        theta = shape.to_permutation()
        v, w = disjoint_fixed_pair(shape, params)
        assert induced_map(theta, v) == v
        assert induced_map(theta, w) == w
        assert v.mask & w.mask == 0


def test_disjoint_fixed_pair_needs_even_k():
    with pytest.raises(DomainError):
        disjoint_fixed_pair(shape_of("(1 2)", 7), KneserParams(7, 3))


def test_witnesses_are_deterministic():
    shape = shape_of("(2 7)(3 5)", 9)
    params = KneserParams(9, 4)
    assert fixed_vertex(shape, params) == fixed_vertex(shape, params)
    assert disjoint_fixed_pair(shape, params) == disjoint_fixed_pair(shape, params)


@pytest.mark.parametrize(
    "n, k, verdict, tag",
    [
        (5, 2, Verdict.NON_CAYLEY, TheoremTag.KNESER_ODD_N),
        (8, 2, Verdict.NON_CAYLEY, TheoremTag.KNESER_EVEN_N_EVEN_K),
        (7, 3, Verdict.UNRESOLVED, TheoremTag.NONE),
        (8, 3, Verdict.UNRESOLVED, TheoremTag.NONE),
    ],
)
def test_classify_kneser(n, k, verdict, tag):
    result = classify_kneser(n, k)
    assert (result.verdict, result.theorem_tag) == (verdict, tag)
    assert result.order == binom_exact(n, k)
    assert result.evidence["order_mod_2"] == binom_exact(n, k) % 2


def test_classify_kneser_rejects_invalid_params():
    with pytest.raises(DomainError):
        classify_kneser(6, 3)


def test_classify_kneser_agrees_with_binomial_parity():
    for n in range(5, 15):
        for k in range(2, (n + 1) // 2):
            even = binom_exact(n, k) % 2 == 0
            expected = even and (n % 2 == 1 or k % 2 == 0)
            assert classify_kneser(n, k).is_non_cayley is expected, (n, k)


@pytest.mark.parametrize("k, verdict", [(2, Verdict.NON_CAYLEY), (7, Verdict.UNRESOLVED), (6, Verdict.NON_CAYLEY)])
def test_classify_odd_examples(k, verdict):
    result = classify_odd(k)
    assert result.verdict is verdict
    assert result.family is Family.ODD
    assert result.n == 2 * k + 1


def test_classify_odd_up_to_64():
    for k in range(1, 65):
        assert classify_odd(k).is_non_cayley is not is_power_of_two(k + 1), k
    assert classify_odd(1).verdict is Verdict.UNRESOLVED
    assert classify_odd(2).theorem_tag is TheoremTag.EVEN_ODD_GRAPH
    assert "2^t - 1" in classify_odd(2).notes[0]


def test_classify_odd_rejects_zero():
    with pytest.raises(DomainError):
        classify_odd(0)


def test_classification_rejects_unsupported_verdicts():
    with pytest.raises(InvariantViolation):
        Classification(Family.KNESER, 5, 2, 10, Verdict.NON_CAYLEY, TheoremTag.NONE)
    with pytest.raises(InvariantViolation):
        Classification(Family.KNESER, 7, 3, 35, Verdict.UNRESOLVED, TheoremTag.KNESER_ODD_N)
