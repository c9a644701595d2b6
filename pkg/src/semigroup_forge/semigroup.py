"""Numerical semigroups and their basic invariants.

A numerical semigroup is stored through its minimal generators and its Apery
set with respect to the multiplicity; every other invariant (membership, gaps,
Frobenius number, pseudo-Frobenius numbers) is read off the Apery set.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import BaseNotInSemigroup, EmptyInput, GcdNotOne, InSemigroup


def _reachable(generators: Sequence[int], bound: int) -> list[bool]:
    """Boolean table of which 0..bound are non-negative combinations of ``generators``."""
    table = [False] * (bound + 1)
    table[0] = True
    for g in generators:
        for x in range(g, bound + 1):
            if table[x - g]:
                table[x] = True
    return table


def _apery(generators: Sequence[int], base: int) -> tuple[int, ...]:
    # Dijkstra over residues modulo `base`; arc weights are the generators.
    dist: list[Optional[int]] = [None] * base
    dist[0] = 0
    heap = [(0, 0)]
    steps = [g for g in set(generators) if g % base]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in steps:
            s = (r + g) % base
            nd = d + g
            if dist[s] is None or nd < dist[s]:
                dist[s] = nd
                heapq.heappush(heap, (nd, s))
    if any(d is None for d in dist):
        raise GcdNotOne(f"generators {list(generators)} do not reach every residue mod {base}")
    return tuple(dist)  # type: ignore[arg-type]


class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    ``generators`` keeps the caller's order with the multiplicity moved to the
    front, so that variable ``X1`` always carries the multiplicity.
    Redundant inputs are listed in ``redundant``.
    """

    __slots__ = ("generators", "redundant", "multiplicity", "apery", "_frobenius")

    def __init__(self, generators: Sequence[int], redundant: Sequence[int] = ()):
        gens = tuple(int(g) for g in generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "redundant", tuple(redundant))
        object.__setattr__(self, "multiplicity", min(gens))
        object.__setattr__(self, "apery", _apery(gens, min(gens)))
        object.__setattr__(self, "_frobenius", max(self.apery) - self.multiplicity)

    def __setattr__(self, name, value):
        raise AttributeError("NumericalSemigroup is immutable")

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"

    def __str__(self):
        return "<" + ", ".join(map(str, self.generators)) + ">"

    def __contains__(self, z: int) -> bool:
        return membership(self, z)

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def sorted_generators(self) -> tuple[int, ...]:
        return tuple(sorted(self.generators))

    @property
    def frobenius(self) -> int:
        return self._frobenius

    @property
    def conductor(self) -> int:
        return self._frobenius + 1


def make_semigroup(raw_generators: Iterable[int]) -> NumericalSemigroup:
    """Build a semigroup from a possibly redundant list of generators.

    >>> make_semigroup([4, 6, 9, 13]).generators
    (4, 6, 9)
    """
    raw = [int(g) for g in raw_generators]
    if not raw:
        raise EmptyInput("at least one generator is required")
    if any(g <= 0 for g in raw):
        raise ValueError(f"generators must be positive, got {raw}")
    if reduce(gcd, raw) != 1:
        raise GcdNotOne(f"gcd{tuple(raw)} = {reduce(gcd, raw)}")

    kept: list[int] = []
    redundant: list[int] = []
    for g in sorted(raw):
        if g in kept or _reachable(kept, g)[g]:
            redundant.append(g)
        else:
            kept.append(g)
    survivors = []
    remaining = list(kept)
    for g in raw:
        if g in remaining:
            survivors.append(g)
            remaining.remove(g)
    m = min(survivors)
    survivors.remove(m)
    return NumericalSemigroup([m] + survivors, redundant)


@dataclass(frozen=True)
class AperySet:
    base: int
    representatives: tuple[int, ...]

    def __iter__(self):
        return iter(self.representatives)

    def __len__(self):
        return len(self.representatives)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.representatives)


@dataclass(frozen=True)
class Factorization:
    coefficients: tuple[int, ...]
    degree: int

    @property
    def length(self) -> int:
        return sum(self.coefficients)


def membership(H: NumericalSemigroup, z: int) -> bool:
    if z < 0:
        return False
    return z >= H.apery[z % H.multiplicity]


def apery_set(H: NumericalSemigroup, h: Optional[int] = None) -> AperySet:
    """Apery set of ``H`` with respect to ``h`` (the multiplicity by default)."""
    if h is None or h == H.multiplicity:
        return AperySet(H.multiplicity, H.apery)
    if h <= 0 or not membership(H, h):
        raise BaseNotInSemigroup(f"{h} is not a positive element of {H}")
    return AperySet(h, _apery(H.generators, h))


def frobenius(H: NumericalSemigroup) -> int:
    return H.frobenius


def gaps(H: NumericalSemigroup) -> list[int]:
    m = H.multiplicity
    out = []
    for r, w in enumerate(H.apery):
        out.extend(range(r, w, m))
    return sorted(out)


def _le(H: NumericalSemigroup, x: int, y: int) -> bool:
    return membership(H, y - x)


def pseudo_frobenius(H: NumericalSemigroup) -> list[int]:
    """Pseudo-Frobenius numbers, from the maximal Apery elements.

    An Apery element ``w`` is maximal when no other Apery element differs from
    it by an element of ``H``; the pseudo-Frobenius numbers are the maximal
    elements shifted down by the multiplicity.
    """
    if H.multiplicity == 1:
        return []
    ap = H.apery
    maximal = [w for w in ap if not any(v != w and _le(H, w, v) for v in ap)]
    return sorted(w - H.multiplicity for w in maximal)


def pf_witness(H: NumericalSemigroup, z: int) -> int:
    """Least pseudo-Frobenius number ``alpha`` with ``alpha - z`` in ``H``."""
    if membership(H, z):
        raise InSemigroup(f"{z} belongs to {H}")
    for alpha in pseudo_frobenius(H):
        if membership(H, alpha - z):
            return alpha
    raise AssertionError(f"no pseudo-Frobenius witness for gap {z} of {H}")


def factorizations(H: NumericalSemigroup, d: int) -> list[Factorization]:
    """All ways of writing ``d`` over the generators, in lexicographic order."""
    if d < 0:
        return []
    return _factorizations(H.generators, d, suffix_tables(H.generators, d))


def suffix_tables(gens: Sequence[int], bound: int) -> list[list[bool]]:
    """``tables[i][x]``: ``x`` is a combination of ``gens[i:]`` (for ``x <= bound``)."""
    return [_reachable(gens[i:], bound) for i in range(len(gens))]


def _factorizations(gens: Sequence[int], d: int, suffix: list[list[bool]]) -> list[Factorization]:
    n = len(gens)
    if not suffix[0][d]:
        return []
    out: list[Factorization] = []
    coeffs = [0] * n

    def walk(i: int, rest: int) -> None:
        g = gens[i]
        if i == n - 1:
            if rest % g == 0:
                coeffs[i] = rest // g
                out.append(Factorization(tuple(coeffs), d))
            return
        nxt = suffix[i + 1]
        for c in range(rest // g + 1):
            r = rest - c * g
            if nxt[r]:
                coeffs[i] = c
                walk(i + 1, r)
        coeffs[i] = 0

    walk(0, d)
    return out


def max_order(H: NumericalSemigroup, d: int, generators: Optional[Sequence[int]] = None) -> Optional[int]:
    """Largest factorization length of ``d``, or ``None`` when ``d`` is not in ``H``.

    ``generators`` restricts the factorizations to a subset of the generators.
    """
    if d < 0:
        return None
    gens = H.generators if generators is None else tuple(generators)
    best: list[Optional[int]] = [None] * (d + 1)
    best[0] = 0
    for x in range(1, d + 1):
        top = None
        for g in gens:
            if g <= x and best[x - g] is not None:
                cand = best[x - g] + 1  # type: ignore[operator]
                if top is None or cand > top:
                    top = cand
        best[x] = top
    return best[d]


def max_length_factorization(H: NumericalSemigroup, d: int) -> Optional[Factorization]:
    """A factorization of ``d`` realising :func:`max_order` (lexicographically least)."""
    target = max_order(H, d)
    if target is None:
        return None
    for f in factorizations(H, d):
        if f.length == target:
            return f
    raise AssertionError("max_order disagrees with factorizations")
