import pytest
from hypothesis import given, strategies as st

from kerov.partitions import (
    Box,
    Partition,
    Permutation,
    compose,
    conjugate,
    contents,
    corner_coordinates,
    dilate,
    partitions_of,
    partitions_up_to,
)


@st.composite
def partitions(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    return draw(st.sampled_from(list(partitions_of(n))))


@st.composite
def permutations(draw, k):
    return Permutation(tuple(draw(st.permutations(range(1, k + 1)))))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition(()).n == 0
    assert Partition.parse("3,1") == Partition((3, 1))
    assert Partition.parse("") == Partition(())


def test_partition_counts():
    assert [len(list(partitions_of(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


@pytest.mark.parametrize(
    "lam, s, expected",
    [((3, 1), 1, (3, 1)), ((3, 1), 2, (6, 6, 2, 2)), ((2,), 3, (6, 6, 6))],
)
def test_dilate(lam, s, expected):
    assert dilate(lam, s).rows == expected


def test_dilate_rejects_nonpositive():
    with pytest.raises(ValueError):
        dilate((3, 1), 0)


@pytest.mark.parametrize("lam, expected", [((3, 1), (2, 1, 1)), ((), ()), ((2, 2), (2, 2))])
def test_conjugate(lam, expected):
    assert conjugate(lam).rows == expected


@pytest.mark.parametrize(
    "lam, minima, maxima",
    [((3, 1), (-2, 0, 3), (-1, 2)), ((), (0,), ()), ((2,), (-1, 2), (1,))],
)
def test_corner_coordinates(lam, minima, maxima):
    assert corner_coordinates(lam) == (minima, maxima)


@pytest.mark.parametrize(
    "lam, expected",
    [((3, 1), [0, 1, 2, -1]), ((1,), [0]), ((2, 2), [0, 1, -1, 0])],
)
def test_contents(lam, expected):
    assert sorted(contents(lam)) == sorted(expected)


def test_box_membership():
    lam = Partition((3, 1))
    assert Box(1, 3) in lam and Box(2, 1) in lam
    assert Box(2, 2) not in lam and Box(3, 1) not in lam
    assert Box(2, 1).content == -1


def test_compose_genus_one_map():
    s1 = Permutation.parse("(1,6)(2)(3)(4,7,5)")
    s2 = Permutation.parse("(1,2,3,5)(4,7,6)")
    assert compose(s1, s2) == Permutation.parse("(1,2,3,4,5,6,7)")


def test_compose_identity_and_involution():
    sigma = Permutation.parse("(1,3)(2,4,5)")
    assert compose(Permutation.identity(5), sigma) == sigma
    t = Permutation.parse("(1,2)")
    assert compose(t, t) == Permutation.identity(2)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_cycle_parser():
    p = Permutation.parse("(1,6)(4,7,5)", k=7)
    assert p.images == (6, 2, 3, 7, 4, 1, 5)
    assert str(p) == "(1,6)(2)(3)(4,7,5)"
    with pytest.raises(ValueError):
        Permutation.parse("(1,2)(2,3)")
    with pytest.raises(ValueError):
        Permutation.parse("1,2")


@given(partitions(), st.integers(1, 5))
def test_dilation_box_count(lam, s):
    assert dilate(lam, s).n == s * s * lam.n


def test_interlacing_exhaustive():
    for lam in partitions_up_to(10):
        minima, maxima = corner_coordinates(lam)
        assert len(minima) == len(maxima) + 1
        merged = [v for pair in zip(minima, maxima) for v in pair] + [minima[-1]]
        assert all(a < b for a, b in zip(merged, merged[1:]))
        assert sum(minima) - sum(maxima) == 0


@given(partitions(10))
def test_conjugate_reflects_contents_and_corners(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sorted(contents(conjugate(lam))) == sorted(-c for c in contents(lam))
    minima, maxima = corner_coordinates(lam)
    cmin, cmax = corner_coordinates(conjugate(lam))
    assert cmin == tuple(-x for x in reversed(minima))
    assert cmax == tuple(-y for y in reversed(maxima))


@given(st.data())
def test_compose_group_laws(data):
    k = data.draw(st.integers(1, 7))
    a, b, c = (data.draw(permutations(k)) for _ in range(3))
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, a.inverse()) == Permutation.identity(k)
    assert Permutation.parse(str(a), k) == a
