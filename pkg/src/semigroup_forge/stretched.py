"""Stretchedness of ``k[H]/(t^a1)`` and arithmetic pseudo-Frobenius profiles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .semigroup import NumericalSemigroup, max_order, pseudo_frobenius


@dataclass(frozen=True)
class StretchedProfile:
    """Shape of a stretched Apery set.

    Indices are 1-based generator positions.  ``lambda_index`` is ``None`` for
    maximal embedding dimension (``ell == 1``); ``mu_index`` is set only when
    ``ell == 2``, where the single extra Apery element is
    ``a_lambda + a_mu``.
    """

    ell: int
    lambda_index: Optional[int] = None
    mu_index: Optional[int] = None
    stretched: bool = True


@dataclass(frozen=True)
class NotStretched:
    """Verdict carrying the first Apery element that breaks the stretched shape."""

    ell: int
    witness: int
    stretched: bool = False


@dataclass(frozen=True)
class ArithmeticPFProfile:
    h: int
    alpha: int
    length: int

    @property
    def values(self) -> list[int]:
        return [self.h + i * self.alpha for i in range(1, self.length + 1)]


def _extras(H: NumericalSemigroup) -> list[int]:
    base = set(H.generators[1:]) | {0}
    return sorted(w for w in H.apery if w not in base)


def stretched_profile(H: NumericalSemigroup) -> Union[StretchedProfile, NotStretched]:
    gens = H.generators
    n = len(gens)
    ell = H.multiplicity - n + 1
    extras = _extras(H)
    if ell == 1:
        return StretchedProfile(ell)
    if ell == 2:
        (e,) = extras
        for i in range(1, n):
            for j in range(i, n):
                if gens[i] + gens[j] == e:
                    return StretchedProfile(ell, i + 1, j + 1)
        return NotStretched(ell, e)

    lowest = extras[0]
    for i in range(1, n):
        if 2 * gens[i] == lowest:
            expected = [k * gens[i] for k in range(2, ell + 1)]
            for got, want in zip(extras, expected):
                if got != want:
                    return NotStretched(ell, got)
            return StretchedProfile(ell, i + 1)
    return NotStretched(ell, lowest)


def is_stretched(H: NumericalSemigroup) -> bool:
    return stretched_profile(H).stretched


def order_two_count(H: NumericalSemigroup) -> int:
    """``dim m^2/m^3`` of ``k[H]/(t^a1)``: Apery elements of order exactly two.

    Apery elements never involve the multiplicity in a factorization, so the
    order is taken over the remaining generators.
    """
    others = H.generators[1:]
    return sum(1 for w in H.apery if w and max_order(H, w, others) == 2)


def stretched_oracle(H: NumericalSemigroup) -> bool:
    """Stretchedness straight from the definition: ``m^2`` is zero or principal."""
    return order_two_count(H) <= 1


def arithmetic_pf_profile(H: NumericalSemigroup) -> Optional[ArithmeticPFProfile]:
    n = H.embedding_dimension
    if n < 3:
        return None
    pf = pseudo_frobenius(H)
    if len(pf) != n - 1:
        return None
    alpha = pf[1] - pf[0]
    if alpha <= 0 or any(b - a != alpha for a, b in zip(pf, pf[1:])):
        return None
    h = pf[0] - alpha
    if h < 0:
        return None
    return ArithmeticPFProfile(h, alpha, n - 1)
