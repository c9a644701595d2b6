from math import gcd

import pytest

from oracles import brute_complete_residues
from semigroup_forge import (
    HypothesisViolated,
    WeightedRing,
    arithmetic_pf_profile,
    check_common_difference,
    classify_apery,
    complete_residue_check,
    construct_matrix,
    detect_j,
    find_template_matrix,
    is_in_defining_ideal,
    make_semigroup,
    verify_main_theorem,
)
from semigroup_forge.structure import MED
from suites import certified_instances

H6 = make_semigroup([6, 13, 40, 41])
H7 = make_semigroup([7, 39, 43, 47, 17])


@pytest.mark.parametrize("ell, n, r, expected", [(2, 4, 1, True), (2, 4, 2, False), (3, 5, 3, False)])
def test_residue_examples(ell, n, r, expected):
    assert complete_residue_check(ell, n, r) is expected


def test_residue_check_rejects_bad_input():
    with pytest.raises(ValueError):
        complete_residue_check(1, 4, 1)


@pytest.mark.parametrize("ell", range(2, 9))
def test_residue_check_matches_brute_force(ell):
    for n in range(3, 11):
        for r in range(1, n - 1):
            assert complete_residue_check(ell, n, r) == brute_complete_residues(ell, n, r) == (r == 1)


@pytest.mark.parametrize("H, lam", [(H6, 2), (H7, 5)])
def test_classify_apery(H, lam):
    assert classify_apery(H) == lam


@pytest.mark.parametrize("gens, hypothesis", [
    ([6, 11, 13, 16, 20], "PF(H) arithmetic of length n-1"),
    ([8, 9, 28, 29, 15], "k[H]/(t^a1) stretched"),
    ([3, 5], "embedding dimension >= 3"),
])
def test_hypothesis_failures(gens, hypothesis):
    with pytest.raises(HypothesisViolated) as info:
        construct_matrix(make_semigroup(gens))
    assert info.value.hypothesis == hypothesis


@pytest.mark.parametrize("H, branch, j, b", [(H6, "j=1", 1, 13), (H7, "j=n-1", 4, 17)])
def test_detect_j(H, branch, j, b):
    got = detect_j(H)
    assert (got.branch, got.j, got.b) == (branch, j, b)


def test_med_branch():
    H = make_semigroup([5, 6, 7, 8, 9])
    assert detect_j(H).branch == MED
    cert = construct_matrix(H)
    assert cert.certified and cert.branch == MED


@pytest.mark.parametrize("H, h1, p, text", [
    (H6, 1, 7, "[X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]"),
    (H7, 4, 3, "[X1^5 X2 X3 X4 X5 / X2 X3 X4 X5^3 X1^3]"),
])
def test_construct_matrix_examples(H, h1, p, text):
    cert = construct_matrix(H)
    assert cert.certified
    assert (cert.h1, cert.p) == (h1, p)
    assert str(cert.matrix) == text


def test_verify_examples():
    r = verify_main_theorem(H6)
    assert r.stretched and r.condition3 is not None and r.condition2 and r.minors_match
    r = verify_main_theorem(make_semigroup([8, 9, 31, 37, 38]))
    assert r.stretched and r.condition3 is None and r.certificate is None
    assert any("2x2 minors" in note for note in r.notes)
    r = verify_main_theorem(make_semigroup([8, 9, 28, 29, 15]))
    assert not r.stretched and r.condition3 is not None
    assert str(r.beyond_hypothesis.matrix) == "[X1 X2^3 X3 X4 X5 / X2 X3 X4 X5^2 X1^2]"


def test_template_match_absent_when_no_determinantal_form():
    assert find_template_matrix(make_semigroup([6, 11, 13, 16, 20])) is None


def test_certificate_invariants():
    count = 0
    for H in certified_instances():
        count += 1
        cert = construct_matrix(H)
        prof = arithmetic_pf_profile(H)
        assert cert.certified
        ring = WeightedRing(cert.permuted_generators)
        assert all(is_in_defining_ideal(ring, m) for m in cert.minors())
        assert check_common_difference(ring, cert.matrix) == (True, prof.alpha)
        a, ell, alpha, h1 = cert.a, cert.ell, cert.alpha, cert.h1
        if cert.branch == "j=1":
            assert cert.b - (h1 + 1) * a == alpha
            assert ((h1 + 1) * ell + alpha) * a - cert.permuted_generators[-1] == alpha
        elif cert.branch == "j=n-1":
            assert ell * (cert.b + alpha) == (h1 + 1 + alpha) * a
        if cert.b is not None:
            assert gcd(a, cert.b) == 1
        assert verify_main_theorem(H).minors_match
    assert count > 100
