"""Cohen-Macaulayness of the tangent cone: closed formula against Sally's test."""

from semigroup_forge import construct_matrix, make_semigroup, tangent_cone_report

for gens in ([6, 13, 40, 41], [7, 39, 43, 47, 17], [5, 6, 7, 8, 9]):
    H = make_semigroup(gens)
    rep = tangent_cone_report(H, construct_matrix(H))
    w = rep.order_witness
    where = f", witness degree {w.degree} of order {w.length}" if w else ""
    print(f"<{', '.join(map(str, gens))}> {rep.branch}: formula CM={rep.cm_formula}, "
          f"Sally CM={rep.cm_sally}{where}")
