"""Published worked examples with their printed values.

Each :class:`GoldenCheck` recomputes one printed value from scratch.  The
expected values are kept exactly as printed, including the one that does not
survive recomputation (PF of ``<8, 9, 28, 29, 15>``), so that a run reports
the discrepancy instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .semigroup import NumericalSemigroup, make_semigroup, pseudo_frobenius
from .stretched import arithmetic_pf_profile, is_stretched
from .structure import construct_matrix, find_template_matrix
from .tangent_cone import cm_by_formula, cm_by_sally


@dataclass(frozen=True)
class GoldenCheck:
    generators: tuple[int, ...]
    label: str
    expected: Any
    compute: Callable[[NumericalSemigroup], Any]

    def run(self) -> tuple[bool, Any]:
        actual = self.compute(make_semigroup(self.generators))
        return actual == self.expected, actual


def _apery(H):
    return frozenset(H.apery)


def _pf(H):
    return frozenset(pseudo_frobenius(H))


def _render(perm, matrix) -> str:
    if tuple(perm) == tuple(range(len(perm))):
        return str(matrix)
    return f"{matrix} in variable order {list(perm)}"


def _certified_matrix(H):
    cert = construct_matrix(H)
    return _render(cert.permutation, cert.matrix) if cert.certified else None


def _tangent_cone_cm(H):
    cert = construct_matrix(H)
    formula = cm_by_formula(cert)
    sally, _ = cm_by_sally(H, cert)
    return formula if formula == sally else ("formula", formula, "sally", sally)


def _arithmetic(H):
    return arithmetic_pf_profile(H) is not None


def _shape_match(H):
    match = find_template_matrix(H)
    return None if match is None else _render(match.permutation, match.matrix)


def _checks(gens, *items):
    return [GoldenCheck(gens, label, expected, fn) for label, expected, fn in items]


GOLDEN: list[GoldenCheck] = [
    *_checks(
        (6, 13, 40, 41),
        ("Apery set", frozenset({0, 13, 26, 39, 40, 41}), _apery),
        ("PF", frozenset({33, 34, 35}), _pf),
        ("stretched", True, is_stretched),
        ("certified matrix", "[X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]", _certified_matrix),
        ("tangent cone CM", False, _tangent_cone_cm),
    ),
    *_checks(
        (7, 39, 43, 47, 17),
        ("Apery set", frozenset({0, 17, 34, 39, 43, 47, 51}), _apery),
        ("PF", frozenset({32, 36, 40, 44}), _pf),
        ("stretched", True, is_stretched),
        ("certified matrix", "[X1^5 X2 X3 X4 X5 / X2 X3 X4 X5^3 X1^3]", _certified_matrix),
        ("tangent cone CM", True, _tangent_cone_cm),
    ),
    *_checks(
        (6, 11, 13, 16, 20),
        ("Apery set", frozenset({0, 11, 13, 16, 20, 27}), _apery),
        ("stretched", True, is_stretched),
        ("PF", frozenset({7, 14, 21}), _pf),
        ("PF arithmetic of length n-1", False, _arithmetic),
    ),
    *_checks(
        (8, 9, 31, 37, 38),
        ("Apery set", frozenset({0, 9, 18, 27, 31, 36, 37, 38}), _apery),
        ("stretched", True, is_stretched),
        ("PF", frozenset({23, 28, 29, 30}), _pf),
        ("PF arithmetic of length n-1", False, _arithmetic),
    ),
    *_checks(
        (8, 9, 28, 29, 15),
        ("Apery set", frozenset({0, 9, 15, 18, 27, 28, 29, 30}), _apery),
        ("stretched", False, is_stretched),
        ("PF", frozenset({10, 11, 12, 13}), _pf),
        ("shape match", "[X1 X2^3 X3 X4 X5 / X2 X3 X4 X5^2 X1^2]", _shape_match),
    ),
    *_checks(
        (6, 7, 11, 15),
        ("stretched", False, is_stretched),
    ),
]


def _show(value) -> str:
    if isinstance(value, frozenset):
        return "{" + ", ".join(map(str, sorted(value))) + "}"
    return str(value)


def run_golden() -> list[tuple[GoldenCheck, bool, str]]:
    """Run every check; returns ``(check, passed, line)`` triples."""
    out = []
    for check in GOLDEN:
        ok, actual = check.run()
        H = "<" + ", ".join(map(str, check.generators)) + ">"
        line = f"{'PASS' if ok else 'FAIL'}  {H} {check.label}: expected {_show(check.expected)}"
        if not ok:
            line += f", got {_show(actual)}"
        out.append((check, ok, line))
    return out
