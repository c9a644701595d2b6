"""Build the 2 x n monomial matrix whose minors define the toric ideal."""

from semigroup_forge import HypothesisViolated, make_semigroup, verify_main_theorem

for gens in ([6, 13, 40, 41], [7, 39, 43, 47, 17], [5, 6, 7, 8, 9], [8, 9, 28, 29, 15], [6, 11, 13, 16, 20]):
    rep = verify_main_theorem(make_semigroup(gens))
    label = f"<{', '.join(map(str, gens))}>"
    if rep.certificate is not None:
        c = rep.certificate
        print(f"{label}: {c.branch}, matrix {c.matrix}, minors generate: {rep.minors_match}")
    elif rep.beyond_hypothesis is not None:
        print(f"{label}: outside hypothesis ({rep.hypothesis_failure}), still determinantal: "
              f"{rep.beyond_hypothesis.matrix}")
    else:
        print(f"{label}: outside hypothesis ({rep.hypothesis_failure})")
