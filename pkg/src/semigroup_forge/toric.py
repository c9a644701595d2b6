"""Minimal binomial generators of the defining ideal ``I_H``.

Degrees of ``H`` are swept upwards.  In each degree the factorizations are
grouped into connected components of the "shares a generator" relation; a
degree with ``c`` components contributes ``c - 1`` minimal generators.  The
sweep stops as soon as the accumulated binomials pass
the Nakayama dimension test: ``dim_k S/(J + (X1)) = a1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .binomials import Binomial
from .errors import NotInSemigroup, SweepCapExceeded
from .binomials import WeightedRing
from .groebner import Caps, nakayama_basis, quotient_dimension
from .semigroup import (
    Factorization,
    NumericalSemigroup,
    _factorizations,
    factorizations,
    membership,
    suffix_tables,
)


@dataclass(frozen=True)
class FactorizationGraph:
    degree: int
    vertices: tuple[Factorization, ...]
    components: tuple[tuple[int, ...], ...]  # vertex indices, each sorted, ordered by least member


def _components(vectors) -> list[list[int]]:
    parent = list(range(len(vectors)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[int, int] = {}
    for idx, v in enumerate(vectors):
        for var, c in enumerate(v):
            if c:
                if var in owner:
                    ra, rb = find(owner[var]), find(idx)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
                else:
                    owner[var] = idx
    groups: dict[int, list[int]] = {}
    for idx in range(len(vectors)):
        groups.setdefault(find(idx), []).append(idx)
    return sorted(groups.values(), key=lambda g: g[0])


def factorization_graph(H: NumericalSemigroup, d: int) -> FactorizationGraph:
    if not membership(H, d):
        raise NotInSemigroup(f"{d} is not in {H}")
    facts = factorizations(H, d)
    comps = _components([f.coefficients for f in facts])
    return FactorizationGraph(d, tuple(facts), tuple(tuple(c) for c in comps))


@dataclass(frozen=True)
class ToricGenerators:
    binomials: tuple[Binomial, ...]
    betti_degrees: tuple[int, ...]  # one entry per binomial, non-decreasing

    def __iter__(self):
        return iter(self.binomials)

    def __len__(self):
        return len(self.binomials)


def _could_be_betti(H: NumericalSemigroup, d: int) -> bool:
    hits = 0
    for g in H.generators:
        if membership(H, d - g):
            hits += 1
            if hits == 2:
                return True
    return False


def minimal_generators(H: NumericalSemigroup, caps: Optional[Caps] = None,
                       ceiling: Optional[int] = None) -> ToricGenerators:
    """Canonical minimal generating set of ``I_H`` with its Betti degrees.

    Within a degree, the component holding the lexicographically least
    factorization is joined to the least factorization of every other
    component.
    """
    n = H.embedding_dimension
    if n < 2:
        return ToricGenerators((), ())
    if ceiling is None:
        ceiling = 4 * H.frobenius + 4 * max(H.generators)
    ring = WeightedRing(H.generators)
    tables = suffix_tables(H.generators, ceiling)
    found: list[Binomial] = []
    degrees: list[int] = []
    basis = None  # Groebner basis of found + (X1), extended degree by degree
    for d in range(1, ceiling + 1):
        if not membership(H, d) or not _could_be_betti(H, d):
            continue
        facts = _factorizations(H.generators, d, tables)
        comps = _components([f.coefficients for f in facts])
        if len(comps) < 2:
            continue
        anchor = facts[comps[0][0]].coefficients
        new = [Binomial(anchor, facts[comp[0]].coefficients).canonical() for comp in comps[1:]]
        found.extend(new)
        degrees.extend([d] * len(new))
        # every binomial joins two factorizations of d, so found lies in I_H
        basis = nakayama_basis(ring, new, caps, previous=basis)
        if quotient_dimension(basis) == H.multiplicity:
            return ToricGenerators(tuple(found), tuple(degrees))
    raise SweepCapExceeded(f"no certified generating set for {H} below degree {ceiling}")


def _degree(H: NumericalSemigroup, m) -> int:
    return sum(e * g for e, g in zip(m, H.generators))


def is_minimal_presentation(H: NumericalSemigroup, binomials, reference: Optional[ToricGenerators] = None) -> bool:
    """Whether ``binomials`` is a minimal generating set of ``I_H``.

    Minimal generating sets are not unique: inside a degree, any term of a
    generator may be swapped for another factorization in the same component.
    The test is therefore combinatorial.  In every degree the binomials must
    join distinct components of the factorization graph and, together, form a
    spanning tree of those components.  The degrees used must be exactly the
    Betti degrees of ``reference`` (computed when omitted).
    """
    reference = reference or minimal_generators(H)
    by_degree: dict[int, list[Binomial]] = {}
    for b in binomials:
        if b.minus is None:
            return False
        d = _degree(H, b.plus)
        if d != _degree(H, b.minus):
            return False
        by_degree.setdefault(d, []).append(b)
    wanted: dict[int, int] = {}
    for d in reference.betti_degrees:
        wanted[d] = wanted.get(d, 0) + 1
    if {d: len(bs) for d, bs in by_degree.items()} != wanted:
        return False
    for d, bs in by_degree.items():
        graph = factorization_graph(H, d)
        where = {}
        for cid, comp in enumerate(graph.components):
            for idx in comp:
                where[graph.vertices[idx].coefficients] = cid
        parent = list(range(len(graph.components)))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for b in bs:
            ra, rb = find(where[b.plus]), find(where[b.minus])
            if ra == rb:
                return False
            parent[ra] = rb
        if len(bs) != len(graph.components) - 1:
            return False
    return True
