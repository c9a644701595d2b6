"""Determinantal presentations for stretched semigroups with arithmetic PF sets.

Under the hypotheses

* embedding dimension ``n >= 3`` and multiplicity ``a >= 3``,
* ``k[H]/(t^a)`` stretched,
* ``PF(H) = {h + alpha, ..., h + (n-1) alpha}``,

the generators other than ``a`` are ``b = (h + j*alpha + a)/ell`` together
with ``h + i*alpha + a`` for ``i != j``, where ``ell = a - n + 1`` and
``j`` is 1 or ``n - 1``.  :func:`construct_matrix` writes down the 2 x n
matrix whose minors generate ``I_H`` and certifies it; anything that breaks
the expected arithmetic is raised as a :class:`FalsifyingInstance`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import permutations
from math import gcd
from typing import Optional, Union

from .binomials import (
    Binomial,
    MonomialMatrix,
    WeightedRing,
    check_common_difference,
    format_matrix_rows,
    minors2,
)
from .errors import (
    CertificationFailed,
    FalsifyingInstance,
    HypothesisViolated,
    InternalContradiction,
    NonIntegralParameter,
    SemigroupForgeError,
)
from .groebner import Caps, nak_certificate
from .semigroup import NumericalSemigroup
from .stretched import (
    ArithmeticPFProfile,
    NotStretched,
    StretchedProfile,
    arithmetic_pf_profile,
    stretched_profile,
)
from .toric import ToricGenerators, is_minimal_presentation, minimal_generators

MED = "MED"


def complete_residue_check(ell: int, n: int, r: int) -> bool:
    """Is ``{0..ell} + {ell + r, ..., ell + (n-2) r}`` a full residue system mod ``ell + n - 1``?"""
    if ell < 2 or n < 3 or not 1 <= r <= n - 2:
        raise ValueError(f"need ell >= 2, n >= 3, 1 <= r <= n-2; got {(ell, n, r)}")
    a = ell + n - 1
    values = list(range(ell + 1)) + [ell + k * r for k in range(1, n - 1)]
    return len({v % a for v in values}) == a


def _require(H: NumericalSemigroup, profile: Optional[ArithmeticPFProfile]):
    if H.embedding_dimension < 3:
        raise HypothesisViolated("embedding dimension >= 3")
    if H.multiplicity < 3:
        raise HypothesisViolated("multiplicity >= 3")
    shape = stretched_profile(H)
    if not shape.stretched:
        raise HypothesisViolated("k[H]/(t^a1) stretched",
                                 f"k[H]/(t^{H.multiplicity}) is not stretched (Apery element {shape.witness})")
    profile = profile if profile is not None else arithmetic_pf_profile(H)
    if profile is None:
        raise HypothesisViolated("PF(H) arithmetic of length n-1")
    return shape, profile


def classify_apery(H: NumericalSemigroup, profile: Optional[ArithmeticPFProfile] = None) -> Optional[int]:
    """1-based index ``lambda`` with ``Ap(H, a1) = {0, a2..an} + {2 a_lambda, ..., ell a_lambda}``.

    ``None`` marks maximal embedding dimension, where there are no extra
    Apery elements.
    """
    shape, profile = _require(H, profile)
    if shape.ell == 1:
        return None
    if shape.ell >= 3:
        return shape.lambda_index
    gens = H.generators
    (extra,) = sorted(set(H.apery) - set(gens[1:]) - {0})
    for i in range(1, len(gens)):
        if 2 * gens[i] == extra:
            return i + 1
    raise InternalContradiction(
        f"{H}: ell = 2 but the extra Apery element {extra} is not twice a generator")


@dataclass(frozen=True)
class Branch:
    branch: str  # "j=1", "j=n-1" or MED
    j: Optional[int]
    b: Optional[int]
    lambda_index: Optional[int]


def detect_j(H: NumericalSemigroup, profile: Optional[ArithmeticPFProfile] = None) -> Branch:
    shape, profile = _require(H, profile)
    lam = classify_apery(H, profile)
    if lam is None:
        return Branch(MED, None, None, None)
    n = H.embedding_dimension
    a, ell = H.multiplicity, shape.ell
    h, alpha = profile.h, profile.alpha
    b = H.generators[lam - 1]
    hits = [j for j in range(1, n) if ell * b == h + j * alpha + a]
    if len(hits) != 1:
        raise InternalContradiction(f"{H}: no j in 1..{n - 1} with {ell}*{b} = h + j*alpha + a")
    j = hits[0]
    expected = sorted([b] + [h + i * alpha + a for i in range(1, n) if i != j])
    if expected != sorted(H.generators[1:]):
        raise InternalContradiction(f"{H}: generators differ from the predicted set {expected}")
    if j not in (1, n - 1):
        raise InternalContradiction(f"{H}: j = {j} lies strictly between 1 and n-1 = {n - 1}")
    if gcd(a, b) != 1:
        raise InternalContradiction(f"{H}: gcd({a}, {b}) = {gcd(a, b)} != 1")
    return Branch("j=1" if j == 1 else "j=n-1", j, b, lam)


@dataclass(frozen=True)
class DeterminantalCertificate:
    """A certified determinantal presentation ``I_H = I_2(matrix)``.

    ``permutation[k]`` is the 0-based position in ``H.generators`` of the
    generator carried by variable ``X_{k+1}`` of ``matrix``.
    """

    generators: tuple[int, ...]
    permutation: tuple[int, ...]
    branch: str
    j: Optional[int]
    a: int
    b: Optional[int]
    h: int
    h1: int
    ell: int
    alpha: int
    p: int
    matrix: MonomialMatrix
    certified: bool
    lambda_index: Optional[int] = None

    @property
    def permuted_generators(self) -> tuple[int, ...]:
        return tuple(self.generators[k] for k in self.permutation)

    @property
    def ring(self) -> WeightedRing:
        return WeightedRing(self.permuted_generators)

    def minors(self) -> list[Binomial]:
        """Minors in the permuted variables."""
        return minors2(self.matrix)

    def minors_in_original_order(self) -> list[Binomial]:
        return [m.permuted(self.permutation).canonical() for m in self.minors()]

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "permutation": list(self.permutation),
            "branch": self.branch,
            "j": self.j,
            "a": self.a,
            "b": self.b,
            "h": self.h,
            "h1": self.h1,
            "ell": self.ell,
            "alpha": self.alpha,
            "p": self.p,
            "matrix": format_matrix_rows(self.matrix),
            "certified": self.certified,
            "lambda_index": self.lambda_index,
        }


def _exact_div(num: int, den: int, what: str, H) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegralParameter(f"{H}: {what} = {num}/{den} is not an integer")
    return q


def construct_matrix(H: NumericalSemigroup, profile: Optional[ArithmeticPFProfile] = None,
                     caps: Optional[Caps] = None, certify: bool = True) -> DeterminantalCertificate:
    shape, profile = _require(H, profile)
    br = detect_j(H, profile)
    gens = H.generators
    n = len(gens)
    a, ell = H.multiplicity, shape.ell
    h, alpha = profile.h, profile.alpha
    index = {g: k for k, g in enumerate(gens)}

    def pos(i):
        return index[h + i * alpha + a]

    if br.branch == MED:
        perm = (0,) + tuple(pos(i) for i in range(1, n))
        h1 = _exact_div(h, a, "h1 = h/a", H)
        p = h1 + 1 + alpha
        tops = [h1 + 1] + [1] * (n - 1)
        bottoms = [1] * (n - 1) + [p]
    elif br.branch == "j=1":
        perm = (0, index[br.b]) + tuple(pos(i) for i in range(2, n))
        h1 = _exact_div(h - (ell - 1) * br.b, a, "h1 = (h - (ell-1) b)/a", H)
        if h1 < 0:
            raise NonIntegralParameter(f"{H}: h1 = {h1} is negative")
        p = (h1 + 1) * ell + alpha
        tops = [h1 + 1, ell] + [1] * (n - 2)
        bottoms = [1] * (n - 1) + [p]
    else:
        perm = (0,) + tuple(pos(i) for i in range(1, n - 1)) + (index[br.b],)
        h1 = _exact_div(h, a, "h1 = h/a", H)
        p = _exact_div(h1 + 1 + alpha, ell, "p = (h1 + 1 + alpha)/ell", H)
        tops = [h1 + 1] + [1] * (n - 1)
        bottoms = [1] * (n - 2) + [ell, p]

    matrix = MonomialMatrix.cyclic(tops, bottoms)
    cert = DeterminantalCertificate(
        generators=gens, permutation=perm, branch=br.branch, j=br.j, a=a, b=br.b,
        h=h, h1=h1, ell=ell, alpha=alpha, p=p, matrix=matrix, certified=False,
        lambda_index=br.lambda_index)
    if not certify:
        return cert
    ok, diff = check_common_difference(cert.ring, matrix)
    if not ok or diff != alpha:
        raise CertificationFailed(f"{H}: matrix {matrix} has no common difference {alpha}")
    if not nak_certificate(H, cert.minors(), caps, ring=cert.ring):
        raise CertificationFailed(f"{H}: minors of {matrix} do not generate I_H")
    return replace(cert, certified=True)


@dataclass(frozen=True)
class TemplateMatch:
    """A matrix of the cyclic pure-power shape whose minors generate ``I_H``."""

    permutation: tuple[int, ...]
    matrix: MonomialMatrix

    def to_dict(self) -> dict:
        return {"permutation": list(self.permutation), "matrix": format_matrix_rows(self.matrix)}


def find_template_matrix(H: NumericalSemigroup, reference: Optional[ToricGenerators] = None,
                         max_n: int = 7, caps: Optional[Caps] = None) -> Optional[TemplateMatch]:
    """Search ``(X1^l1 .. Xn^ln / X2^m2 .. X1^m1)`` up to permuting ``a2..an``.

    Entries are bounded by the largest Betti degree, since every entry occurs
    in some minor.  Permutations are tried in lexicographic order and
    exponents in increasing order, so the first hit is deterministic.
    """
    n = H.embedding_dimension
    if n < 3 or n > max_n:
        return None
    reference = reference or minimal_generators(H, caps)
    if len(reference) != n * (n - 1) // 2:
        return None
    betti = sorted(reference.betti_degrees)
    top = betti[-1]
    gens = H.generators

    for perm_tail in permutations(range(1, n)):
        perm = (0,) + perm_tail
        w = [gens[k] for k in perm]
        for found in _cyclic_solutions(w, top):
            matrix = MonomialMatrix.cyclic(*found)
            try:
                minors = minors2(matrix)
            except SemigroupForgeError:
                continue
            ring = WeightedRing(w)
            if sorted(sum(e * x for e, x in zip(m.plus, w)) for m in minors) != betti:
                continue
            original = [m.permuted(perm).canonical() for m in minors]
            if not is_minimal_presentation(H, original, reference):
                continue
            if nak_certificate(H, minors, caps, ring=ring):
                return TemplateMatch(perm, matrix)
    return None


def _cyclic_solutions(w, top):
    n = len(w)
    for l0 in range(1, top // w[0] + 1):
        for m1 in range(1, top // w[1] + 1):
            d = m1 * w[1] - l0 * w[0]
            yield from _extend(w, top, d, [l0], [m1])


def _extend(w, top, d, tops, bottoms):
    n = len(w)
    c = len(tops)
    if c == n:
        yield list(tops), list(bottoms)
        return
    nxt = (c + 1) % n
    for l in range(1, top // w[c] + 1):
        num = d + l * w[c]
        if num <= 0 or num % w[nxt]:
            continue
        m = num // w[nxt]
        if m * w[nxt] > top:
            continue
        yield from _extend(w, top, d, tops + [l], bottoms + [m])


@dataclass
class MainTheoremReport:
    generators: tuple[int, ...]
    stretched: bool
    stretched_profile: Union[StretchedProfile, NotStretched, None]
    condition3: Optional[ArithmeticPFProfile]
    in_hypothesis: bool
    hypothesis_failure: Optional[str] = None
    certificate: Optional[DeterminantalCertificate] = None
    condition2: Optional[bool] = None
    minors_match: Optional[bool] = None
    minors_literal_match: Optional[bool] = None
    beyond_hypothesis: Optional[TemplateMatch] = None
    falsifying: Optional[str] = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        sp = self.stretched_profile
        return {
            "generators": list(self.generators),
            "stretched": self.stretched,
            "stretched_profile": None if sp is None else dict(sp.__dict__),
            "condition3": None if self.condition3 is None else dict(self.condition3.__dict__),
            "in_hypothesis": self.in_hypothesis,
            "hypothesis_failure": self.hypothesis_failure,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "condition2": self.condition2,
            "minors_match": self.minors_match,
            "minors_literal_match": self.minors_literal_match,
            "beyond_hypothesis": None if self.beyond_hypothesis is None else self.beyond_hypothesis.to_dict(),
            "falsifying": self.falsifying,
            "notes": list(self.notes),
        }


def verify_main_theorem(H: NumericalSemigroup, caps: Optional[Caps] = None,
                        shape_match: bool = True) -> MainTheoremReport:
    """Evaluate every condition of the main equivalence on ``H``; never raises on math outcomes."""
    n = H.embedding_dimension
    shape = stretched_profile(H) if n >= 2 else None
    stretched = bool(shape and shape.stretched) or n < 2
    prof = arithmetic_pf_profile(H)
    report = MainTheoremReport(H.generators, stretched, shape, prof, in_hypothesis=False)

    if n < 3:
        report.hypothesis_failure = "embedding dimension >= 3"
        return report
    if H.multiplicity < 3:
        report.hypothesis_failure = "multiplicity >= 3"
        return report
    if stretched and prof is None:
        report.hypothesis_failure = "PF(H) arithmetic of length n-1"
        report.notes.append("PF(H) is not an arithmetic sequence of length n-1, so I_H is not the "
                            "ideal of 2x2 minors of any 2 x n matrix of homogeneous forms")
        return report
    if not stretched:
        report.hypothesis_failure = "k[H]/(t^a1) stretched"
        if prof is not None and shape_match:
            match = find_template_matrix(H, caps=caps)
            report.beyond_hypothesis = match
            if match is not None:
                report.notes.append("outside the stretched hypothesis, yet I_H is determinantal "
                                    f"of the cyclic shape {match.matrix}")
        return report

    report.in_hypothesis = True
    try:
        cert = construct_matrix(H, prof, caps)
    except FalsifyingInstance as exc:
        report.falsifying = f"{type(exc).__name__}: {exc}"
        report.condition2 = False
        return report
    report.certificate = cert
    report.condition2 = cert.certified
    reference = minimal_generators(H, caps)
    mapped = cert.minors_in_original_order()
    report.minors_match = is_minimal_presentation(H, mapped, reference)
    report.minors_literal_match = set(mapped) == set(reference.binomials)
    if not report.minors_match:
        report.falsifying = "certified minors are not a minimal presentation of I_H"
    return report
