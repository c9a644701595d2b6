"""Buchberger completion for ideals generated by binomials and monomials.

With coefficients fixed at +1/-1 every S-polynomial and every reduction step
produces again a difference of two monomials, a single monomial, or zero, so
the whole computation runs on exponent tuples and needs no field arithmetic.
Signs are dropped along the way; results are correct up to a unit.

Term order: weighted degree first, ties broken lexicographically on the
exponent vector read from the last variable down to the first.
"""

from __future__ import annotations

import heapq
import math
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .binomials import Binomial, Monomial, WeightedRing, divides, is_in_defining_ideal, var_power
from .errors import CapExceeded

Poly = tuple  # (lead, trail-or-None); the zero polynomial is None
CAPS_ENV = "SEMIGROUP_FORGE_CAPS"


@dataclass(frozen=True)
class Caps:
    """Resource ceilings for :func:`buchberger`."""

    max_degree: int = 10**6
    max_basis: int = 10**4

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        """Read ``max_degree=..,max_basis=..`` from ``SEMIGROUP_FORGE_CAPS``."""
        raw = (os.environ if environ is None else environ).get(CAPS_ENV, "").strip()
        if not raw:
            return cls()
        values = {}
        for item in raw.split(","):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in ("max_degree", "max_basis"):
                raise ValueError(f"unknown cap {key!r} in {CAPS_ENV}")
            values[key] = int(val)
        return cls(**values)


@dataclass(frozen=True)
class TermOrder:
    weights: tuple[int, ...]

    def key(self, m: Monomial):
        return (sum(e * w for e, w in zip(m, self.weights)), m[::-1])

    def degree(self, m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, self.weights))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis; each element's ``plus`` is its leading term."""

    elements: tuple[Binomial, ...]
    order: TermOrder

    @property
    def leading_terms(self) -> list[Monomial]:
        return [g.plus for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _quotient(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(u, v))


def _times(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def _lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def _make(order: TermOrder, u: Optional[Monomial], v: Optional[Monomial]) -> Optional[Poly]:
    """Normalise ``+-(u - v)``; either argument may be ``None`` (absent term)."""
    if u is None and v is None:
        return None
    if u is None:
        return (v, None)
    if v is None:
        return (u, None)
    if u == v:
        return None
    if order.key(u) > order.key(v):
        return (u, v)
    return (v, u)


def _as_poly(order: TermOrder, p: Union[Binomial, Monomial]) -> Optional[Poly]:
    if isinstance(p, Binomial):
        return _make(order, p.plus, p.minus)
    return (tuple(p), None)


def _find_reducer(term: Monomial, basis: Sequence[Poly]) -> Optional[Poly]:
    for g in basis:
        if divides(g[0], term):
            return g
    return None


def _reduce_term(order: TermOrder, p: Poly, which: int, g: Poly) -> Optional[Poly]:
    """Cancel term ``p[which]`` against ``g``."""
    term = p[which]
    other = p[1 - which]
    q = _quotient(term, g[0])
    replacement = None if g[1] is None else _times(q, g[1])
    return _make(order, replacement, other)


def _normal_form(order: TermOrder, p: Optional[Poly], basis: Sequence[Poly]) -> Optional[Poly]:
    while p is not None:
        g = _find_reducer(p[0], basis)
        if g is not None:
            p = _reduce_term(order, p, 0, g)
            continue
        if p[1] is None:
            return p
        g = _find_reducer(p[1], basis)
        if g is None:
            return p
        p = _reduce_term(order, p, 1, g)
    return None


def _spoly(order: TermOrder, f: Poly, g: Poly) -> Optional[Poly]:
    L = _lcm(f[0], g[0])
    a = None if f[1] is None else _times(_quotient(L, f[0]), f[1])
    b = None if g[1] is None else _times(_quotient(L, g[0]), g[1])
    return _make(order, a, b)


def _coprime(u: Monomial, v: Monomial) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(u, v))


def _to_binomial(p: Poly) -> Binomial:
    return Binomial(p[0], p[1])


def _interreduce(order: TermOrder, polys: list[Poly]) -> list[Poly]:
    polys = sorted(polys, key=lambda p: order.key(p[0]))
    minimal: list[Poly] = []
    for p in polys:
        if not any(divides(q[0], p[0]) for q in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        if p[1] is None:
            out.append(p)
            continue
        tail = _normal_form(order, (p[1], None), others)
        out.append((p[0], None if tail is None else tail[0]))
    return out


def buchberger(generators: Iterable[Union[Binomial, Monomial]], ring: WeightedRing,
               caps: Optional[Caps] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by ``generators``.

    Pairs are processed by weighted degree of the lcm of their leading terms,
    ties by insertion index; pairs with coprime leading terms are skipped.
    """
    caps = caps or Caps.from_env()
    order = TermOrder(ring.weights)
    basis: list[Poly] = []
    pairs: list[tuple[int, int, int]] = []

    def add(p: Poly) -> None:
        k = len(basis)
        basis.append(p)
        if len(basis) > caps.max_basis:
            raise CapExceeded(f"basis grew past {caps.max_basis} elements")
        for i in range(k):
            if (p[1] is None and basis[i][1] is None) or _coprime(basis[i][0], p[0]):
                continue
            deg = order.degree(_lcm(basis[i][0], p[0]))
            if deg > caps.max_degree:
                raise CapExceeded(f"S-pair degree {deg} exceeds {caps.max_degree}")
            heapq.heappush(pairs, (deg, i, k))

    seed = [q for q in (_as_poly(order, g) for g in generators) if q is not None]
    for p in sorted(seed, key=lambda q: order.key(q[0])):
        r = _normal_form(order, p, basis)
        if r is not None:
            add(r)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        s = _spoly(order, basis[i], basis[j])
        r = _normal_form(order, s, basis)
        if r is not None:
            add(r)

    reduced = _interreduce(order, basis)
    reduced.sort(key=lambda p: order.key(p[0]))
    return GroebnerBasis(tuple(_to_binomial(p) for p in reduced), order)


def normal_form(p: Union[Binomial, Monomial], G: GroebnerBasis) -> Optional[Binomial]:
    """Remainder of ``p`` modulo ``G`` (up to sign); ``None`` means zero."""
    order = G.order
    basis = [(g.plus, g.minus) for g in G.elements]
    r = _normal_form(order, _as_poly(order, p), basis)
    return None if r is None else _to_binomial(r)


def is_groebner(G: GroebnerBasis) -> bool:
    """Direct check that every S-pair of ``G`` reduces to zero."""
    order = G.order
    basis = [(g.plus, g.minus) for g in G.elements]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if _normal_form(order, _spoly(order, basis[i], basis[j]), basis) is not None:
                return False
    return True


def standard_monomials(G: GroebnerBasis) -> Optional[list[Monomial]]:
    """Monomials outside the leading-term ideal, or ``None`` if there are infinitely many."""
    leads = G.leading_terms
    if not leads:
        return None
    n = len(leads[0])
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in leads):
            return None
    start = (0,) * n
    if any(divides(m, start) for m in leads):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                c = m[:i] + (m[i] + 1,) + m[i + 1:]
                if c not in seen and not any(divides(l, c) for l in leads):
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(seen, key=G.order.key)


def quotient_dimension(G: GroebnerBasis) -> Union[int, float]:
    """``dim_k S/I`` for the ideal with basis ``G``; ``math.inf`` when not Artinian."""
    std = standard_monomials(G)
    return math.inf if std is None else len(std)


def nakayama_basis(ring: WeightedRing, J: Sequence[Binomial], caps: Optional[Caps] = None,
                   previous: Optional[GroebnerBasis] = None) -> GroebnerBasis:
    """Groebner basis of ``J + (X1)``.

    ``previous``, a basis of ``J' + (X1)`` for some subset ``J'`` of ``J``,
    may be passed to reuse earlier work; the result is the same.
    """
    seed = list(J) + [var_power(ring.num_vars, 1)]
    if previous is not None:
        seed = list(previous.elements) + seed
    return buchberger(seed, ring, caps)


def nakayama_dimension(ring: WeightedRing, J: Sequence[Binomial], caps: Optional[Caps] = None):
    """``dim_k S/(J + (X1))``."""
    return quotient_dimension(nakayama_basis(ring, J, caps))


def nak_certificate(H, J: Sequence[Binomial], caps: Optional[Caps] = None,
                    ring: Optional[WeightedRing] = None) -> bool:
    """True iff ``J`` lies in the defining ideal and ``dim_k S/(J+(X1)) = a1``.

    When true, ``J`` generates the whole defining ideal of ``k[H]``.
    ``ring`` defaults to the weights ``H.generators``; pass a permuted ring
    when ``J`` is written in permuted variables.
    """
    ring = ring or WeightedRing(H.generators)
    if ring.weights[0] != H.multiplicity:
        raise ValueError("first variable must carry the multiplicity")
    if not all(is_in_defining_ideal(ring, b) for b in J):
        return False
    return nakayama_dimension(ring, J, caps) == H.multiplicity
