"""Cohen-Macaulayness of the tangent cone ``gr(k[H])`` for certified semigroups.

Two independent routes: closed-form inequalities in the certificate
parameters, and the membership ``t^((ell+1) b) in t^a1 m^ell`` evaluated as a
factorization-order bound on ``(ell + 1) b - a1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotInSemigroup, Uncertified
from .semigroup import Factorization, NumericalSemigroup, max_length_factorization
from .structure import MED, DeterminantalCertificate


def _require_certified(cert: DeterminantalCertificate) -> None:
    if not cert.certified:
        raise Uncertified("tangent-cone criteria need a certified presentation")


def cm_by_formula(cert: DeterminantalCertificate) -> bool:
    _require_certified(cert)
    if cert.branch == MED:
        return True
    if cert.branch == "j=1":
        return cert.h1 + 1 >= cert.ell
    # p == (h1 + 1 + alpha) / ell on this branch
    return cert.p >= cert.ell


def cm_by_sally(H: NumericalSemigroup, cert: DeterminantalCertificate) -> tuple[bool, Optional[Factorization]]:
    """``(verdict, witness)``; the witness is a longest factorization of ``(ell+1) b - a1``."""
    _require_certified(cert)
    if cert.branch == MED:
        return True, None
    z = (cert.ell + 1) * cert.b - H.multiplicity
    witness = max_length_factorization(H, z)
    if witness is None:
        raise NotInSemigroup(f"{H}: (ell+1) b - a1 = {z} is not in H")
    return witness.length >= cert.ell, witness


@dataclass(frozen=True)
class Shortcuts:
    """Sufficient (or iff) conditions; ``None`` where a shortcut does not apply."""

    large_h1: Optional[bool] = None  # j = n-1 and h1 >= ell^2 - ell - alpha => CM
    ell_two_last_branch: Optional[bool] = None  # ell = 2 and j = n-1 => CM
    almost_med: Optional[bool] = None  # ell = 2: CM iff not (j = 1 and h = b = a + alpha)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def cm_shortcuts(cert: DeterminantalCertificate) -> Shortcuts:
    _require_certified(cert)
    large_h1 = ell_two = almost = None
    if cert.branch == "j=n-1":
        if cert.h1 >= cert.ell ** 2 - cert.ell - cert.alpha:
            large_h1 = True
        if cert.ell == 2:
            ell_two = True
    if cert.ell == 2 and cert.branch != MED:
        bad = cert.branch == "j=1" and cert.h == cert.b == cert.a + cert.alpha
        almost = not bad
    return Shortcuts(large_h1, ell_two, almost)


@dataclass(frozen=True)
class TangentConeReport:
    branch: str
    cm_formula: bool
    cm_sally: bool
    details: tuple[int, int]  # (compared quantity, ell)
    order_witness: Optional[Factorization]
    shortcuts: Shortcuts

    @property
    def agree(self) -> bool:
        return self.cm_formula == self.cm_sally

    def to_dict(self) -> dict:
        w = self.order_witness
        return {
            "branch": self.branch,
            "cm_formula": self.cm_formula,
            "cm_sally": self.cm_sally,
            "details": list(self.details),
            "order_witness": None if w is None else {"degree": w.degree, "coefficients": list(w.coefficients)},
            "shortcuts": self.shortcuts.to_dict(),
        }


def tangent_cone_report(H: NumericalSemigroup, cert: DeterminantalCertificate) -> TangentConeReport:
    formula = cm_by_formula(cert)
    sally, witness = cm_by_sally(H, cert)
    if cert.branch == "j=1":
        details = (cert.h1 + 1, cert.ell)
    elif cert.branch == "j=n-1":
        details = (cert.p, cert.ell)
    else:
        details = (1, 1)
    return TangentConeReport(cert.branch, formula, sally, details, witness, cm_shortcuts(cert))
