import pytest
from hypothesis import given, strategies as st

from semigroup_forge import (
    Binomial,
    DimensionMismatch,
    MonomialMatrix,
    ShapeMismatch,
    WeightedRing,
    check_common_difference,
    format_monomial,
    is_in_defining_ideal,
    minors2,
    parse_binomial,
    parse_monomial,
)
from semigroup_forge.binomials import format_matrix_rows, parse_matrix_rows, weighted_degree

R6 = WeightedRing((6, 13, 40, 41))
R7 = WeightedRing((7, 39, 43, 47, 17))
M6 = MonomialMatrix.cyclic([2, 3, 1, 1], [1, 1, 1, 7])
M7 = MonomialMatrix.cyclic([5, 1, 1, 1, 1], [1, 1, 1, 3, 3])

monomials4 = st.tuples(*[st.integers(0, 6)] * 4)


@pytest.mark.parametrize("m, deg", [((0, 4, 0, 0), 52), ((0, 0, 0, 0), 0), ((2, 0, 1, 0), 52)])
def test_weighted_degree(m, deg):
    assert weighted_degree(R6, m) == deg


def test_weighted_degree_dimension_check():
    with pytest.raises(DimensionMismatch):
        weighted_degree(R6, (1, 2))


@pytest.mark.parametrize("b, inside", [
    (Binomial((0, 4, 0, 0), (2, 0, 1, 0)), True),
    (Binomial((1, 0, 0, 0), (0, 1, 0, 0)), False),
    (Binomial((1, 0, 0, 0)), False),
])
def test_defining_ideal_membership(b, inside):
    assert is_in_defining_ideal(R6, b) is inside


def test_example_minor_of_shape_matched_matrix_is_homogeneous():
    ring = WeightedRing((8, 9, 28, 29, 15))
    assert is_in_defining_ideal(ring, Binomial((1, 0, 1, 0, 0), (0, 4, 0, 0, 0)))


def test_minors_of_first_example_matrix():
    minors = minors2(M6)
    assert len(minors) == 6
    assert Binomial((0, 4, 0, 0), (2, 0, 1, 0)).canonical() in minors
    assert len(minors2(M7)) == 10


def test_two_by_two_minor():
    M = MonomialMatrix(((1, 0, 0, 0), (0, 1, 0, 0)), ((0, 0, 1, 0), (0, 0, 0, 1)))
    assert minors2(M) == [Binomial((1, 0, 0, 1), (0, 1, 1, 0))]


def test_vanishing_minor_is_rejected():
    M = MonomialMatrix(((1, 0), (1, 0)), ((0, 1), (0, 1)))
    with pytest.raises(ShapeMismatch):
        minors2(M)


@pytest.mark.parametrize("ring, M, diff", [(R6, M6, 1), (R7, M7, 4)])
def test_common_difference(ring, M, diff):
    assert check_common_difference(ring, M) == (True, diff)
    assert all(is_in_defining_ideal(ring, m) for m in minors2(M))


def test_perturbed_matrix_loses_common_difference():
    assert check_common_difference(R6, MonomialMatrix.cyclic([2, 3, 1, 1], [1, 1, 1, 8])) == (False, None)


def test_common_difference_needs_cyclic_shape():
    M = MonomialMatrix(M6.top, (M6.bottom[1], M6.bottom[0]) + M6.bottom[2:])
    with pytest.raises(ShapeMismatch):
        check_common_difference(R6, M)


def test_text_forms():
    assert str(M6) == "[X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]"
    assert format_monomial((2, 0, 1, 0)) == "X1^2*X3"
    assert format_monomial((0, 0, 0, 0)) == "1"
    b = parse_binomial("X1^2*X3 - X2^4", 4)
    assert b == Binomial((2, 0, 1, 0), (0, 4, 0, 0))
    assert parse_matrix_rows(format_matrix_rows(M7), 5) == M7
    with pytest.raises(DimensionMismatch):
        parse_monomial("X5", 4)
    with pytest.raises(ValueError):
        parse_monomial("Y2", 4)


@given(monomials4, monomials4)
def test_canonical_is_stable(u, v):
    if u == v:
        return
    b = Binomial(u, v)
    assert b.canonical() == b.canonical().canonical()
    assert b.canonical() == Binomial(v, u).canonical()


@given(monomials4, monomials4)
def test_binomial_text_round_trip(u, v):
    if u == v:
        return
    b = Binomial(u, v)
    assert parse_binomial(str(b), 4) == b


@given(st.permutations(range(4)), monomials4, monomials4)
def test_permuted_binomial_keeps_degree(perm, u, v):
    if u == v:
        return
    permuted_ring = WeightedRing(tuple(R6.weights[p] for p in perm))
    b = Binomial(u, v)
    back = b.permuted(perm)
    assert is_in_defining_ideal(permuted_ring, b) == is_in_defining_ideal(R6, back)
