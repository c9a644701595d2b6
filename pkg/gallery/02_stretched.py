"""Which semigroups have a stretched Artinian reduction?

Compares the structural profile against the plain order-two count on every
semigroup with multiplicity at most 6 and Frobenius number at most 20.
"""

from collections import Counter

from semigroup_forge import enumerate_semigroups, make_semigroup, stretched_oracle, stretched_profile

for gens in ([6, 13, 40, 41], [6, 11, 13, 16, 20], [6, 7, 11, 15]):
    print(f"<{', '.join(map(str, gens))}>: {stretched_profile(make_semigroup(gens))}")

tally = Counter()
for H in enumerate_semigroups(6, 20):
    if H.embedding_dimension < 2:
        continue
    prof = stretched_profile(H)
    assert prof.stretched == stretched_oracle(H)
    tally[prof.stretched] += 1
print(f"\nstretched: {tally[True]}, not stretched: {tally[False]}")
