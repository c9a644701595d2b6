"""Two parametric families of semigroups meeting the structure-theorem hypotheses.

Both take ``ell >= 2``, ``n >= 3``, ``alpha > 0`` and ``h1 >= 0`` and put
``a = ell + n - 1``.  Every output is checked against the properties it is
supposed to have before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionFailed, ValidationFailed
from .semigroup import NumericalSemigroup, make_semigroup
from .stretched import arithmetic_pf_profile, stretched_profile


@dataclass(frozen=True)
class FamilyParams:
    ell: int
    n: int
    alpha: int
    h1: int

    @property
    def a(self) -> int:
        return self.ell + self.n - 1

    def check(self) -> None:
        if self.ell < 2 or self.n < 3 or self.alpha < 1 or self.h1 < 0:
            raise PreconditionFailed(f"need ell >= 2, n >= 3, alpha > 0, h1 >= 0; got {self}")
        if gcd(self.a, self.alpha) != 1:
            raise PreconditionFailed(f"gcd(a, alpha) = gcd({self.a}, {self.alpha}) != 1")


def _validate(gens: list[int], params: FamilyParams, h: int) -> NumericalSemigroup:
    failures = []
    try:
        H = make_semigroup(gens)
    except ValueError as exc:
        raise ValidationFailed([str(exc)], gens) from exc
    if H.embedding_dimension != params.n:
        failures.append(f"embedding dimension {H.embedding_dimension} != {params.n}")
    if H.multiplicity != params.a:
        failures.append(f"multiplicity {H.multiplicity} != {params.a}")
    if not stretched_profile(H).stretched:
        failures.append("k[H]/(t^a) is not stretched")
    prof = arithmetic_pf_profile(H)
    if prof is None or (prof.h, prof.alpha) != (h, params.alpha):
        failures.append(f"PF profile {prof} != (h={h}, alpha={params.alpha})")
    if failures:
        raise ValidationFailed(failures, gens)
    return H


def family_j1_generators(params: FamilyParams) -> list[int]:
    a, ell, alpha = params.a, params.ell, params.alpha
    b = (params.h1 + 1) * a + alpha
    return [a, b] + [ell * b + k * alpha for k in range(1, params.n - 1)]


def family_j1(params: FamilyParams) -> NumericalSemigroup:
    """``<a, b, ell b + alpha, ..., ell b + (n-2) alpha>`` with ``b = (h1+1) a + alpha``."""
    params.check()
    gens = family_j1_generators(params)
    h = params.h1 * params.a + (params.ell - 1) * gens[1]
    return _validate(gens, params, h)


def family_jn1_generators(params: FamilyParams) -> list[int]:
    a, ell, alpha = params.a, params.ell, params.alpha
    q, r = divmod(params.h1 + 1 + alpha, ell)
    if r:
        raise PreconditionFailed(f"(h1 + 1 + alpha)/ell = {params.h1 + 1 + alpha}/{ell} is not an integer")
    b = q * a - alpha
    if b <= a:
        raise PreconditionFailed(f"b = {b} must exceed a = {a}")
    return [a] + [ell * b - k * alpha for k in range(params.n - 2, 0, -1)] + [b]


def family_jn1(params: FamilyParams) -> NumericalSemigroup:
    """``<a, ell b - (n-2) alpha, ..., ell b - alpha, b>`` with ``b = (h1+1+alpha)/ell * a - alpha``."""
    params.check()
    gens = family_jn1_generators(params)
    return _validate(gens, params, params.h1 * params.a)


def sweep(ells=range(2, 6), ns=range(3, 8), alphas=range(1, 7), h1s=range(0, 7)):
    """Yield ``(branch, params, H)`` for every parameter tuple that validates."""
    for ell in ells:
        for n in ns:
            for alpha in alphas:
                for h1 in h1s:
                    params = FamilyParams(ell, n, alpha, h1)
                    for branch, build in (("j=1", family_j1), ("j=n-1", family_jn1)):
                        try:
                            yield branch, params, build(params)
                        except (PreconditionFailed, ValidationFailed):
                            continue
