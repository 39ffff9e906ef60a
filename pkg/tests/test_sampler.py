from collections import Counter

import pytest

from src.domain.errors import DomainError
from src.domain.perm import involution_shape, order
from src.infrastructure.sampler import InvolutionSampler


def test_samples_are_involutions():
    for shape in InvolutionSampler(11, seed=1).draw(200):
        theta = shape.to_permutation()
        assert order(theta) == 2
        assert involution_shape(theta) == shape
        assert 2 * shape.a + shape.b == 11


def test_same_seed_same_stream():
    first = list(InvolutionSampler(15, seed=42).draw(30))
    second = list(InvolutionSampler(15, seed=42).draw(30))
    assert first == second
    assert first != list(InvolutionSampler(15, seed=43).draw(30))


def test_transposition_counts_follow_involution_counts():
    # n=5: 10 involutions with one transposition, 15 with two
    counts = Counter(shape.a for shape in InvolutionSampler(5, seed=7).draw(5000))
    assert set(counts) == {1, 2}
    assert 0.5 < counts[2] / 5000 < 0.7


def test_every_involution_of_small_degree_appears():
    seen = {shape.to_permutation() for shape in InvolutionSampler(4, seed=3).draw(500)}
    assert len(seen) == 9


def test_degree_too_small():
    with pytest.raises(DomainError):
        InvolutionSampler(1, seed=0)
