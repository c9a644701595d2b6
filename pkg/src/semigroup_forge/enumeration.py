"""Enumeration of numerical semigroups through the tree of gap removals.

The root is the semigroup of all non-negative integers.  The children of
``S`` are ``S - {g}`` for each minimal generator ``g`` larger than the
Frobenius number of ``S``; every numerical semigroup appears exactly once.
Along a branch the Frobenius number strictly increases and the multiplicity
never decreases, so both bounds prune whole subtrees.
"""

from __future__ import annotations

from typing import Iterator

from .semigroup import NumericalSemigroup, make_semigroup


def _minimal_generators(gapmask: int, frob: int) -> list[int]:
    def inside(x: int) -> bool:
        return x > frob or not (gapmask >> x) & 1

    m = next(x for x in range(1, frob + 3) if inside(x))
    gens = []
    for x in range(m, max(frob + m, m) + 1):
        if not inside(x):
            continue
        if not any(inside(s) and inside(x - s) for s in range(m, x - m + 1)):
            gens.append(x)
    return gens


def iter_semigroups(max_multiplicity: int, max_frobenius: int) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup with multiplicity and Frobenius number within bounds.

    Yields in depth-first tree order; sort by ``generators`` for a canonical order.
    """
    stack = [(0, -1)]  # (bitmask of gaps, frobenius)
    while stack:
        gapmask, frob = stack.pop()
        gens = _minimal_generators(gapmask, frob)
        if gens[0] > max_multiplicity:
            continue
        yield make_semigroup(gens)
        children = []
        for g in gens:
            if g <= frob or g > max_frobenius:
                continue
            child = gapmask | (1 << g)
            if g == gens[0] and g + 1 > max_multiplicity:
                continue
            children.append((child, g))
        stack.extend(reversed(children))


def enumerate_semigroups(max_multiplicity: int, max_frobenius: int) -> list[NumericalSemigroup]:
    """Sorted by generator tuple (the multiplicity first, then the rest ascending)."""
    return sorted(iter_semigroups(max_multiplicity, max_frobenius), key=lambda H: H.generators)
