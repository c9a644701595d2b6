"""Brute-force reference implementations used as test oracles.

Nothing here imports the package: every routine works from the raw generator
list with the most direct method available, so agreement with the library is
evidence rather than tautology.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd


def members_upto(gens, bound):
    """Set of elements of <gens> up to ``bound``, by closure under addition."""
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y <= bound and y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def frobenius_bound(gens):
    # Schur-type bound, loose on purpose: (min - 1) * (max - 1) + max
    return (min(gens) - 1) * (max(gens) - 1) + max(gens)


def brute_frobenius(gens):
    bound = frobenius_bound(gens)
    mem = members_upto(gens, bound)
    gaps = [x for x in range(bound + 1) if x not in mem]
    return max(gaps) if gaps else -1


def brute_gaps(gens):
    bound = frobenius_bound(gens)
    mem = members_upto(gens, bound)
    return [x for x in range(bound + 1) if x not in mem]


def brute_pf(gens):
    """Gaps ``x`` with ``x + h`` in H for every positive ``h`` in H (checked on generators)."""
    gaps = brute_gaps(gens)
    mem = members_upto(gens, (max(gaps) if gaps else 0) + max(gens) + 1)
    return sorted(x for x in gaps if all(x + g in mem for g in gens))


def brute_apery(gens, h):
    bound = frobenius_bound(gens) + h + 1
    mem = members_upto(gens, bound)
    return sorted(min(x for x in mem if x % h == r) for r in range(h))


def minimal_subset(gens):
    """Drop every generator that is a sum of the other (smaller) ones."""
    out = []
    for g in sorted(set(gens)):
        if g not in members_upto(out, g):
            out.append(g)
    return out


def brute_factorizations(gens, d):
    ranges = [range(d // g + 1) for g in gens]
    return sorted(c for c in product(*ranges) if sum(x * g for x, g in zip(c, gens)) == d)


def brute_max_order(gens, d):
    facts = brute_factorizations(gens, d)
    return max(map(sum, facts)) if facts else None


def brute_order_two_count(gens):
    """Apery elements (w.r.t. the multiplicity) whose longest factorization has length 2."""
    a = min(gens)
    rest = [g for g in gens if g != a]
    count = 0
    for w in brute_apery(gens, a):
        if w and brute_max_order(rest, w) == 2:
            count += 1
    return count


def brute_stretched(gens):
    """m^2 of k[H]/(t^a1) is zero or principal: at most one element of order exactly 2."""
    return brute_order_two_count(gens) <= 1


def brute_complete_residues(ell, n, r):
    a = ell + n - 1
    hit = [False] * a
    for v in list(range(ell + 1)) + [ell + k * r for k in range(1, n - 1)]:
        if hit[v % a]:
            return False
        hit[v % a] = True
    return all(hit)


def is_coprime_list(gens):
    g = 0
    for x in gens:
        g = gcd(g, x)
    return g == 1


@lru_cache(maxsize=None)
def brute_semigroups(max_multiplicity, max_frobenius):
    """All numerical semigroups within the bounds, as sorted minimal generator tuples.

    A semigroup with Frobenius number at most ``F`` is fixed by which of
    ``1..F`` it contains.  Walk those choices in increasing order; ``x`` is
    forced in when it is a sum of two chosen elements.
    """
    F = max_frobenius
    out = []
    stack = [(1, 0, 0)]  # (next value, chosen-elements bitmask, pairwise-sums bitmask)
    while stack:
        x, S, sums = stack.pop()
        if S == 0 and x > max_multiplicity and x <= F:
            continue  # multiplicity would exceed the bound
        if x > F:
            out.append(_generators_of(S, F))
            continue
        if (sums >> x) & 1:
            stack.append((x + 1, S | (1 << x), sums | ((S | (1 << x)) << x)))
            continue
        stack.append((x + 1, S, sums))
        stack.append((x + 1, S | (1 << x), sums | ((S | (1 << x)) << x)))
    return sorted(g for g in out if g[0] <= max_multiplicity)


def _generators_of(S, F):
    def mem(v):
        return v == 0 or v > F or (S >> v) & 1

    m = next(v for v in range(1, F + 2) if mem(v))
    return tuple(v for v in range(m, F + m + 1)
                 if mem(v) and not any(mem(s) and mem(v - s) for s in range(m, v - m + 1)))
