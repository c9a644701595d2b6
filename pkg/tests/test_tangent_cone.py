from dataclasses import replace

import pytest

from oracles import brute_max_order
from semigroup_forge import (
    Uncertified,
    cm_by_formula,
    cm_by_sally,
    construct_matrix,
    make_semigroup,
    tangent_cone_report,
)
from semigroup_forge.families import FamilyParams, family_j1, sweep
from semigroup_forge.structure import MED
from semigroup_forge.tangent_cone import cm_shortcuts
from suites import certified_instances


@pytest.mark.parametrize("gens, cm, z, order", [
    ([6, 13, 40, 41], False, 46, 2),
    ([7, 39, 43, 47, 17], True, 61, None),
])
def test_examples(gens, cm, z, order):
    H = make_semigroup(gens)
    cert = construct_matrix(H)
    assert cm_by_formula(cert) is cm
    verdict, witness = cm_by_sally(H, cert)
    assert verdict is cm
    assert witness.degree == z
    if order is not None:
        assert witness.length == order
    assert witness.length == brute_max_order(H.generators, z)


def test_large_h1_shortcut_on_example():
    cert = construct_matrix(make_semigroup([7, 39, 43, 47, 17]))
    assert cm_shortcuts(cert).large_h1 is True


def test_med_is_cm():
    H = make_semigroup([5, 6, 7, 8, 9])
    cert = construct_matrix(H)
    assert cert.branch == MED
    assert cm_by_formula(cert) and cm_by_sally(H, cert) == (True, None)


def test_uncertified_is_refused():
    cert = replace(construct_matrix(make_semigroup([6, 13, 40, 41])), certified=False)
    with pytest.raises(Uncertified):
        cm_by_formula(cert)


def test_almost_med_counterexample_from_family():
    # ell = 2, h1 = 0 on the first branch gives h = b = a + alpha
    H = family_j1(FamilyParams(2, 3, 1, 0))
    cert = construct_matrix(H)
    assert cert.h == cert.b == cert.a + cert.alpha
    assert not cm_by_formula(cert)
    assert cm_shortcuts(cert).almost_med is False


def _all_certificates():
    for H in certified_instances():
        yield H, construct_matrix(H)
    for _, _, H in sweep():
        yield H, construct_matrix(H)


def test_formula_agrees_with_sally_and_shortcuts():
    for H, cert in _all_certificates():
        rep = tangent_cone_report(H, cert)
        assert rep.agree, H
        if rep.order_witness is not None:
            z = rep.order_witness.degree
            assert rep.cm_sally == (brute_max_order(H.generators, z) >= cert.ell)
        s = cm_shortcuts(cert)
        if s.large_h1 or s.ell_two_last_branch:
            assert rep.cm_formula
        if s.almost_med is not None:
            assert s.almost_med == rep.cm_formula
