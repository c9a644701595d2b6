"""Minimal generators of the defining ideal and the certificate that they are enough."""

from semigroup_forge import WeightedRing, make_semigroup, minimal_generators, nak_certificate
from semigroup_forge.groebner import nakayama_basis, standard_monomials
from semigroup_forge.binomials import format_monomial

H = make_semigroup([6, 11, 13, 16, 20])
mg = minimal_generators(H)
for d, f in zip(mg.betti_degrees, mg.binomials):
    print(f"degree {d:3}: {f}")

ring = WeightedRing(H.generators)
G = nakayama_basis(ring, list(mg.binomials))
std = standard_monomials(G)
print(f"\n{len(std)} standard monomials modulo J + (X1), one per Apéry element:")
print("  " + ", ".join(format_monomial(m) for m in std))
print("certificate holds:", nak_certificate(H, list(mg.binomials)))

# dropping any single generator breaks the certificate
for i, f in enumerate(mg.binomials):
    rest = list(mg.binomials[:i] + mg.binomials[i + 1:])
    assert not nak_certificate(H, rest), f
