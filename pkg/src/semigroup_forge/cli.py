"""Command-line interface: ``semigroup-forge <command> ...``.

Exit status is 0 on success, 1 on a computational error (or a failed
verification) and 2 on a usage error.  Groebner resource caps are read from
``SEMIGROUP_FORGE_CAPS``, e.g. ``max_degree=500,max_basis=2000``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .binomials import format_matrix_rows
from .errors import HypothesisViolated, SemigroupForgeError, ValidationFailed
from .families import FamilyParams, family_j1, family_j1_generators, family_jn1, family_jn1_generators
from .golden import run_golden
from .groebner import Caps
from .records import build_record, run_search
from .semigroup import NumericalSemigroup, apery_set, gaps, make_semigroup, pseudo_frobenius
from .stretched import stretched_profile
from .structure import construct_matrix
from .tangent_cone import tangent_cone_report
from .toric import minimal_generators


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _nonnegative(text: str) -> int:
    if text.isdigit():
        return int(text)
    raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}")


def _nums(values) -> str:
    return " ".join(map(str, values))


def _header(H: NumericalSemigroup) -> list[str]:
    lines = [f"H = {H}"]
    if H.redundant:
        lines.append(f"dropped redundant generators: {_nums(H.redundant)}")
    return lines


# -- commands -------------------------------------------------------------

def cmd_analyze(args, caps) -> int:
    H = make_semigroup(args.generators)
    rec = build_record(H, caps)
    if args.json:
        print(rec.to_json(indent=2))
        return 0
    mt = rec.main_theorem
    out = _header(H)
    out.append(f"multiplicity {rec.multiplicity}, embedding dimension {H.embedding_dimension}, "
               f"frobenius {rec.frobenius}")
    out.append(f"Apery set (base {rec.multiplicity}): {_nums(sorted(rec.apery))}")
    out.append(f"PF: {_nums(rec.pseudo_frobenius)}")
    out.append("stretched: " + _stretched_text(stretched_profile(H)) if H.embedding_dimension >= 2
               else "stretched: yes (embedding dimension 1)")
    prof = mt["condition3"]
    out.append("PF arithmetic of length n-1: " +
               ("no" if prof is None else f"yes (h={prof['h']}, alpha={prof['alpha']})"))
    cert = mt["certificate"]
    if cert is not None:
        out.append(f"determinantal: certified, branch {cert['branch']}, "
                   f"b={cert['b']}, h1={cert['h1']}, p={cert['p']}")
        out.append(f"matrix: {_matrix_text(cert['matrix'])}")
        tc = rec.tangent_cone
        out.append("tangent cone: " + ("CM" if tc["cm_formula"] else "NOT CM") +
                   (" (formula and Sally's test agree)" if tc["cm_formula"] == tc["cm_sally"]
                    else " (formula and Sally's test DISAGREE)"))
    else:
        out.append(f"determinantal theorem does not apply: needs {mt['hypothesis_failure']}")
    out.extend(f"note: {n}" for n in mt["notes"])
    if rec.falsifying:
        out.append(f"FALSIFYING: {rec.falsifying}")
    out.append(f"time: {rec.timing_ms} ms")
    print("\n".join(out))
    return 1 if rec.falsifying else 0


def _matrix_text(rows) -> str:
    return "[" + " ".join(rows[0]) + " / " + " ".join(rows[1]) + "]"


def _stretched_text(prof) -> str:
    if not prof.stretched:
        return f"no (ell={prof.ell}, witness {prof.witness} has order 2 beyond the allowed shape)"
    parts = [f"ell={prof.ell}"]
    if prof.lambda_index is not None:
        parts.append(f"lambda={prof.lambda_index}")
    if prof.mu_index is not None:
        parts.append(f"mu={prof.mu_index}")
    return f"yes ({', '.join(parts)})"


def cmd_apery(args, caps) -> int:
    H = make_semigroup(args.generators)
    ap = apery_set(H, args.base)
    print(f"Ap(H, {ap.base}) = {{{', '.join(map(str, sorted(ap)))}}}")
    return 0


def cmd_pf(args, caps) -> int:
    print(_nums(pseudo_frobenius(make_semigroup(args.generators))))
    return 0


def cmd_gaps(args, caps) -> int:
    print(_nums(gaps(make_semigroup(args.generators))))
    return 0


def cmd_stretched(args, caps) -> int:
    H = make_semigroup(args.generators)
    if H.embedding_dimension < 2:
        print("yes (embedding dimension 1)")
        return 0
    print(_stretched_text(stretched_profile(H)))
    return 0


def cmd_ideal(args, caps) -> int:
    H = make_semigroup(args.generators)
    gens = minimal_generators(H, caps)
    print("\n".join(_header(H)))
    print(f"{len(gens)} minimal generators")
    for d, b in zip(gens.betti_degrees, gens.binomials):
        print(f"  degree {d}: {b}")
    return 0


def cmd_matrix(args, caps) -> int:
    H = make_semigroup(args.generators)
    try:
        cert = construct_matrix(H, caps=caps)
    except HypothesisViolated as exc:
        print(f"hypothesis fails: {exc.hypothesis}")
        return 1
    for line in _header(H):
        print(line)
    print(f"branch {cert.branch}, permutation {list(cert.permutation)}")
    print(f"a={cert.a} b={cert.b} h={cert.h} h1={cert.h1} ell={cert.ell} alpha={cert.alpha} p={cert.p}")
    print(f"matrix: {_matrix_text(format_matrix_rows(cert.matrix))}")
    print("certified" if cert.certified else "NOT certified")
    return 0 if cert.certified else 1


def cmd_tangent_cone(args, caps) -> int:
    H = make_semigroup(args.generators)
    try:
        cert = construct_matrix(H, caps=caps)
    except HypothesisViolated as exc:
        print(f"hypothesis fails: {exc.hypothesis}")
        return 1
    rep = tangent_cone_report(H, cert)
    print(f"branch {rep.branch}")
    print(f"formula: {'CM' if rep.cm_formula else 'NOT CM'} (compares {rep.details[0]} with ell={rep.details[1]})")
    line = f"Sally's test: {'CM' if rep.cm_sally else 'NOT CM'}"
    if rep.order_witness is not None:
        w = rep.order_witness
        line += f" (degree {w.degree}, longest factorization {list(w.coefficients)} of length {w.length})"
    print(line)
    if not rep.agree:
        print("DISAGREEMENT between formula and Sally's test")
        return 1
    return 0


def cmd_family(args, caps) -> int:
    params = FamilyParams(args.ell, args.n, args.alpha, args.h1)
    build, raw = (family_j1, family_j1_generators) if args.branch == "j1" else (family_jn1, family_jn1_generators)
    try:
        H = build(params)
    except ValidationFailed as exc:
        print(f"generators {_nums(raw(params))} fail validation:")
        for f in exc.failures:
            print(f"  {f}")
        return 1
    print(f"H = {H}")
    print(f"validated: n={params.n}, a={params.a}, stretched, PF = {_nums(pseudo_frobenius(H))}")
    return 0


def cmd_verify_examples(args, caps) -> int:
    failed = 0
    for _, ok, line in run_golden():
        print(line)
        failed += not ok
    print(f"{failed} mismatches" if failed else "all checks pass")
    return 1 if failed else 0


def cmd_search(args, caps) -> int:
    if args.out:
        with open(args.out, "a", encoding="utf-8") as fh:
            summary = run_search(args.max_multiplicity, args.max_frobenius, args.jobs, fh, caps)
    else:
        summary = run_search(args.max_multiplicity, args.max_frobenius, args.jobs, None, caps)
    print("\n".join(summary.lines()))
    return 1 if summary.falsifying else 0


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semigroup-forge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_gens(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("generators", nargs="+", type=_positive, metavar="GEN")
        p.set_defaults(func=fn)
        return p

    with_gens("analyze", cmd_analyze, "all invariants and verdicts").add_argument(
        "--json", action="store_true", help="print the run record as JSON")
    with_gens("apery", cmd_apery, "Apery set").add_argument("--base", type=_positive, default=None)
    with_gens("pf", cmd_pf, "pseudo-Frobenius numbers")
    with_gens("gaps", cmd_gaps, "gaps")
    with_gens("stretched", cmd_stretched, "stretchedness of k[H]/(t^a1)")
    with_gens("ideal", cmd_ideal, "minimal binomial generators of I_H with Betti degrees")
    with_gens("matrix", cmd_matrix, "certified 2 x n determinantal presentation")
    with_gens("tangent-cone", cmd_tangent_cone, "Cohen-Macaulayness of the tangent cone")

    fam = sub.add_parser("family", help="generate and validate a family member")
    fam.add_argument("branch", choices=["j1", "jn1"])
    fam.add_argument("--ell", type=_positive, required=True)
    fam.add_argument("--n", type=_positive, required=True)
    fam.add_argument("--alpha", type=_positive, required=True)
    fam.add_argument("--h1", type=_nonnegative, required=True)
    fam.set_defaults(func=cmd_family)

    ver = sub.add_parser("verify-paper", help="recompute the published worked examples")
    ver.set_defaults(func=cmd_verify_examples)

    srch = sub.add_parser("search", help="analyze every semigroup within bounds")
    srch.add_argument("--max-multiplicity", type=_positive, required=True)
    srch.add_argument("--max-frobenius", type=_positive, required=True)
    srch.add_argument("--jobs", type=_positive, default=1)
    srch.add_argument("--out", default=None, help="append JSON lines to this file")
    srch.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        caps = Caps.from_env()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, caps)
    except SemigroupForgeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
