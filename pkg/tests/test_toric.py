import pytest
from hypothesis import given

from conftest import semigroups
from oracles import brute_factorizations
from semigroup_forge import (
    Binomial,
    MonomialMatrix,
    NotInSemigroup,
    SweepCapExceeded,
    WeightedRing,
    factorization_graph,
    is_in_defining_ideal,
    is_minimal_presentation,
    make_semigroup,
    membership,
    minimal_generators,
    minors2,
    nak_certificate,
)

H6 = make_semigroup([6, 13, 40, 41])


def brute_betti(gens, bound):
    """Multiset of degrees d <= bound with c > 1 components, each counted c - 1 times."""
    out = []
    for d in range(1, bound + 1):
        facts = brute_factorizations(gens, d)
        if len(facts) < 2:
            continue
        unseen = set(range(len(facts)))
        comps = 0
        while unseen:
            comps += 1
            todo = [unseen.pop()]
            while todo:
                i = todo.pop()
                for j in list(unseen):
                    if any(a and b for a, b in zip(facts[i], facts[j])):
                        unseen.discard(j)
                        todo.append(j)
        out.extend([d] * (comps - 1))
    return out


def test_graph_examples():
    g = factorization_graph(H6, 52)
    assert len(g.components) == 2
    assert [g.vertices[c[0]].coefficients for c in g.components] == [(0, 4, 0, 0), (2, 0, 1, 0)]
    assert len(factorization_graph(H6, 6).components) == 1
    assert len(factorization_graph(H6, 12).components) == 1
    with pytest.raises(NotInSemigroup):
        factorization_graph(H6, 7)


def test_first_example_ideal():
    gens = minimal_generators(H6)
    assert len(gens) == 6
    assert gens.betti_degrees == (52, 53, 54, 80, 81, 82)
    assert is_minimal_presentation(H6, minors2(MonomialMatrix.cyclic([2, 3, 1, 1], [1, 1, 1, 7])), gens)


def test_plane_cusp():
    assert minimal_generators(make_semigroup([2, 3])).binomials == (Binomial((3, 0), (0, 2)),)


def test_four_relations_beyond_hypothesis():
    # 10 minors + 2 binomials are displayed for this example; 9 of them are minimal
    H = make_semigroup([6, 11, 13, 16, 20])
    gens = minimal_generators(H)
    assert len(gens) == 9
    assert nak_certificate(H, list(gens))


def test_sweep_ceiling():
    with pytest.raises(SweepCapExceeded):
        minimal_generators(H6, ceiling=60)


def test_non_presentations_are_rejected():
    ref = minimal_generators(H6)
    gens = list(ref)
    assert not is_minimal_presentation(H6, gens[:-1], ref)
    assert not is_minimal_presentation(H6, gens + [gens[0]], ref)
    # a binomial inside a single component joins nothing
    assert not is_minimal_presentation(H6, gens[:-1] + [Binomial((7, 0, 1, 0), (5, 4, 0, 0))], ref)
    assert is_minimal_presentation(H6, gens[:-1] + [Binomial((7, 0, 1, 0), (0, 0, 0, 2))], ref)


@given(semigroups(max_gen=18, max_n=4))
def test_betti_degrees_match_brute_force(H):
    gens = minimal_generators(H)
    assert sorted(gens.betti_degrees) == brute_betti(H.generators, max(gens.betti_degrees, default=0) + 2 * max(H.generators))


@given(semigroups(max_gen=25))
def test_generators_certify_and_are_minimal(H):
    gens = list(minimal_generators(H))
    ring = WeightedRing(H.generators)
    assert all(is_in_defining_ideal(ring, b) for b in gens)
    assert nak_certificate(H, gens)
    for i in range(len(gens)):
        assert not nak_certificate(H, gens[:i] + gens[i + 1:])


@given(semigroups(max_gen=25))
def test_betti_degrees_have_two_generator_drops(H):
    for d in minimal_generators(H).betti_degrees:
        assert sum(membership(H, d - g) for g in H.generators) >= 2
