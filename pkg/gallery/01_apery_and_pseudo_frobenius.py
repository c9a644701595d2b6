"""Apéry sets, gaps and pseudo-Frobenius numbers of a few small semigroups.

Run with ``python gallery/01_apery_and_pseudo_frobenius.py``.
"""

from semigroup_forge import apery_set, frobenius, gaps, make_semigroup, pf_witness, pseudo_frobenius

for gens in ([6, 13, 40, 41], [7, 39, 43, 47, 17], [8, 9, 28, 29, 15]):
    H = make_semigroup(gens)
    print(f"H = <{', '.join(map(str, H.generators))}>")
    print(f"  Ap(H, {H.multiplicity}) = {sorted(apery_set(H))}")
    print(f"  Frobenius number {frobenius(H)}, genus {len(gaps(H))}")
    pf = pseudo_frobenius(H)
    print(f"  PF(H) = {pf}")
    # every gap sits below some pseudo-Frobenius number, up to an element of H
    for z in gaps(H)[:4]:
        print(f"    gap {z} -> {pf_witness(H, z)}")
    print()
