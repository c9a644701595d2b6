"""Monomials, binomials and 2 x n monomial matrices over a weighted polynomial ring.

Monomials are plain tuples of exponents.  Binomials carry implicit
coefficients ``+1`` and ``-1``; a binomial whose ``minus`` part is ``None``
stands for a single monomial generator.
"""

from __future__ import annotations

import re
from operator import le
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import DimensionMismatch, ShapeMismatch

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class WeightedRing:
    """``k[X1..Xn]`` graded by ``deg Xi = weights[i-1]``."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    @property
    def num_vars(self) -> int:
        return len(self.weights)

    def variable(self, i: int, power: int = 1) -> Monomial:
        """The monomial ``X_i^power`` (1-based ``i``)."""
        return var_power(self.num_vars, i, power)


def var_power(n: int, i: int, power: int = 1) -> Monomial:
    e = [0] * n
    e[i - 1] = power
    return tuple(e)


def weighted_degree(ring: WeightedRing, m: Monomial) -> int:
    if len(m) != ring.num_vars:
        raise DimensionMismatch(f"monomial has {len(m)} exponents, ring has {ring.num_vars} variables")
    return sum(e * w for e, w in zip(m, ring.weights))


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    return all(map(le, u, v))


def pure_power(m: Monomial) -> Optional[tuple[int, int]]:
    """``(i, e)`` when ``m == X_i^e`` with ``e > 0`` (1-based ``i``), else ``None``."""
    support = [(i, e) for i, e in enumerate(m) if e]
    if len(support) != 1:
        return None
    i, e = support[0]
    return i + 1, e


@dataclass(frozen=True)
class Binomial:
    plus: Monomial
    minus: Optional[Monomial] = None

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(self.plus))
        if self.minus is not None:
            object.__setattr__(self, "minus", tuple(self.minus))
            if self.plus == self.minus:
                raise ValueError("binomial with equal terms is zero")
            if len(self.plus) != len(self.minus):
                raise DimensionMismatch("terms have different numbers of variables")

    @property
    def is_monomial(self) -> bool:
        return self.minus is None

    @property
    def num_vars(self) -> int:
        return len(self.plus)

    def canonical(self) -> "Binomial":
        """Orient so that ``plus`` is the lexicographically larger term."""
        if self.minus is None or self.plus > self.minus:
            return self
        return Binomial(self.minus, self.plus)

    def permuted(self, perm: Sequence[int]) -> "Binomial":
        """Relabel variables: new variable ``k`` becomes old variable ``perm[k]``.

        ``perm`` lists 0-based source positions; the result is expressed in the
        source (unpermuted) ordering.
        """
        return Binomial(_unpermute(self.plus, perm),
                        None if self.minus is None else _unpermute(self.minus, perm))

    def __str__(self):
        if self.minus is None:
            return format_monomial(self.plus)
        return f"{format_monomial(self.plus)} - {format_monomial(self.minus)}"


def _unpermute(m: Monomial, perm: Sequence[int]) -> Monomial:
    out = [0] * len(m)
    for k, src in enumerate(perm):
        out[src] = m[k]
    return tuple(out)


def is_in_defining_ideal(ring: WeightedRing, b: Binomial) -> bool:
    """A +/-1 binomial lies in the toric ideal iff its terms have equal weight."""
    if b.minus is None:
        return False
    return weighted_degree(ring, b.plus) == weighted_degree(ring, b.minus)


@dataclass(frozen=True)
class MonomialMatrix:
    top: tuple[Monomial, ...]
    bottom: tuple[Monomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(tuple(m) for m in self.top))
        object.__setattr__(self, "bottom", tuple(tuple(m) for m in self.bottom))
        if len(self.top) != len(self.bottom):
            raise ShapeMismatch("rows have different lengths")

    @property
    def num_columns(self) -> int:
        return len(self.top)

    @classmethod
    def cyclic(cls, top_exponents: Sequence[int], bottom_exponents: Sequence[int]) -> "MonomialMatrix":
        """Matrix ``(X1^l1 .. Xn^ln / X2^m2 .. Xn^mn X1^m1)``.

        ``bottom_exponents[i]`` is the exponent in column ``i + 1``, i.e. of
        ``X_{i+2}`` (and of ``X1`` in the last column).
        """
        n = len(top_exponents)
        top = [var_power(n, i + 1, e) for i, e in enumerate(top_exponents)]
        bottom = [var_power(n, (i + 1) % n + 1, e) for i, e in enumerate(bottom_exponents)]
        return cls(tuple(top), tuple(bottom))

    def cyclic_exponents(self) -> tuple[list[int], list[int]]:
        """Inverse of :meth:`cyclic`; raises :class:`ShapeMismatch` on other shapes."""
        n = self.num_columns
        tops, bottoms = [], []
        for c in range(n):
            t = pure_power(self.top[c])
            b = pure_power(self.bottom[c])
            if t is None or b is None or t[0] != c + 1 or b[0] != (c + 1) % n + 1:
                raise ShapeMismatch(f"column {c + 1} is not of the cyclic pure-power shape")
            tops.append(t[1])
            bottoms.append(b[1])
        return tops, bottoms

    def __str__(self):
        return "[" + " ".join(map(format_monomial, self.top)) + " / " + \
            " ".join(map(format_monomial, self.bottom)) + "]"


def minors2(M: MonomialMatrix) -> list[Binomial]:
    """The 2 x 2 minors ``top_i*bot_j - top_j*bot_i`` for ``i < j``, canonically signed."""
    out = []
    for i, j in combinations(range(M.num_columns), 2):
        u = mono_mul(M.top[i], M.bottom[j])
        v = mono_mul(M.top[j], M.bottom[i])
        if u == v:
            raise ShapeMismatch(f"minor ({i + 1},{j + 1}) vanishes identically")
        out.append(Binomial(u, v).canonical())
    return out


def check_common_difference(ring: WeightedRing, M: MonomialMatrix) -> tuple[bool, Optional[int]]:
    """Check ``deg(bottom_c) - deg(top_c)`` is the same for every column.

    Returns ``(True, difference)`` or ``(False, None)``.
    """
    M.cyclic_exponents()
    if M.num_columns != ring.num_vars:
        raise DimensionMismatch("matrix width differs from number of variables")
    diffs = {weighted_degree(ring, b) - weighted_degree(ring, t) for t, b in zip(M.top, M.bottom)}
    if len(diffs) == 1:
        return True, diffs.pop()
    return False, None


# -- text form ------------------------------------------------------------

def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"X{i + 1}")
        elif e > 1:
            parts.append(f"X{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^X(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    text = text.strip()
    e = [0] * n
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise DimensionMismatch(f"variable X{i} outside X1..X{n}")
        e[i - 1] += int(match.group(2) or 1)
    return tuple(e)


def parse_binomial(text: str, n: int) -> Binomial:
    left, sep, right = text.partition(" - ")
    if not sep:
        return Binomial(parse_monomial(left, n))
    return Binomial(parse_monomial(left, n), parse_monomial(right, n))


def format_matrix_rows(M: MonomialMatrix) -> list[list[str]]:
    return [[format_monomial(m) for m in M.top], [format_monomial(m) for m in M.bottom]]


def parse_matrix_rows(rows: Sequence[Sequence[str]], n: int) -> MonomialMatrix:
    top, bottom = rows
    return MonomialMatrix(tuple(parse_monomial(s, n) for s in top),
                          tuple(parse_monomial(s, n) for s in bottom))
