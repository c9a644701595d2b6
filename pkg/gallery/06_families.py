"""Parametric families on both branches, checked member by member."""

from collections import Counter

from semigroup_forge import cm_by_formula, verify_main_theorem
from semigroup_forge.families import FamilyParams, family_j1, family_jn1, sweep

print(family_j1(FamilyParams(ell=3, n=4, alpha=1, h1=1)))
print(family_jn1(FamilyParams(ell=3, n=5, alpha=4, h1=4)))

tally = Counter()
for branch, params, H in sweep():
    rep = verify_main_theorem(H)
    assert rep.minors_match
    tally[branch, cm_by_formula(rep.certificate)] += 1
for (branch, cm), count in sorted(tally.items()):
    print(f"{branch:6} {'CM' if cm else 'not CM':7} {count}")
