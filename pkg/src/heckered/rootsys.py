"""Irreducible root systems of types A-G in Bourbaki labeling.

Roots are stored as integer coefficient tuples in the basis of simple roots.
Nodes are numbered from 1 everywhere in the public API; the Cartan matrix is
stored 0-based with ``A[i][j] = <alpha_j, coroot_i>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

RootVec = tuple[int, ...]

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise ValueError(f"unknown Cartan family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise ValueError(f"invalid rank {self.rank} for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _edges(t: CartanType) -> list[tuple[int, int, int]]:
    """Dynkin edges as (i, j, m) meaning A[i][j] = -m, A[j][i] = -1 (0-based).

    For a multiple bond, ``i`` is the short node.
    """
    n, f = t.rank, t.family
    chain = [(i, i + 1, 1) for i in range(n - 1)]
    if f == "A":
        return chain
    if f == "B":
        # alpha_n short
        return chain[:-1] + [(n - 1, n - 2, 2)]
    if f == "C":
        # alpha_n long
        return chain[:-1] + [(n - 2, n - 1, 2)]
    if f == "D":
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
    if f == "E":
        return [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, n - 1)]
    if f == "F":
        return [(0, 1, 1), (2, 1, 2), (2, 3, 1)]
    if f == "G":
        return [(0, 1, 3)]
    raise AssertionError(f)


@lru_cache(maxsize=None)
def cartan_matrix(t: CartanType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, m in _edges(t):
        a[i][j] = -m
        a[j][i] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizer(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    denom = 1
    for x in d:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[RootVec, ...]
    highest_root: RootVec
    _index: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    def roots(self) -> list[RootVec]:
        """All roots, positive first then their negatives."""
        return list(self.positive_roots) + [neg(b) for b in self.positive_roots]

    def is_root(self, beta: Iterable[int]) -> bool:
        beta = tuple(beta)
        return beta in self._index or neg(beta) in self._index

    def simple_root(self, node: int) -> RootVec:
        self._check_node(node)
        return tuple(int(k == node - 1) for k in range(self.rank))

    def coroot_pairing(self, beta: RootVec, node: int) -> int:
        """<beta, coroot of alpha_node>."""
        row = self.cartan_matrix[node - 1]
        return sum(c * row[j] for j, c in enumerate(beta))

    def form(self, beta: RootVec, gamma: RootVec) -> int:
        """Invariant form with (alpha_i, alpha_i) = 2 d_i."""
        total = 0
        for i, ci in enumerate(beta):
            if ci:
                di, row = self.symmetrizer[i], self.cartan_matrix[i]
                total += ci * di * sum(cj * row[j] for j, cj in enumerate(gamma))
        return total

    def _check_node(self, node: int) -> None:
        if not 1 <= node <= self.rank:
            raise ValueError(f"node {node} out of range 1..{self.rank}")


def neg(beta: RootVec) -> RootVec:
    return tuple(-c for c in beta)


def height(beta: RootVec) -> int:
    return sum(beta)


@lru_cache(maxsize=None)
def build_root_system(t: CartanType) -> RootSystem:
    """Enumerate positive roots by height using alpha_i-strings."""
    a = cartan_matrix(t)
    n = t.rank
    simples = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    known = set(simples)
    layer = list(simples)
    ordered = list(simples)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p: how far down the alpha_i-string through beta extends
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                q = p - sum(c * a[i][j] for j, c in enumerate(beta))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        nxt.sort(reverse=True)
        ordered.extend(nxt)
        layer = nxt
    top = max(ordered, key=height)
    return RootSystem(
        cartan_type=t,
        cartan_matrix=a,
        symmetrizer=_symmetrizer(a),
        positive_roots=tuple(ordered),
        highest_root=top,
        _index=frozenset(ordered),
    )


@dataclass(frozen=True)
class CartanElement:
    """Rational point of the Cartan subalgebra, stored as its pairings
    with the simple roots (coordinates in the fundamental coweight basis)."""

    pairings: tuple[Fraction, ...]

    def __post_init__(self):
        pairs = tuple(Fraction(x) for x in self.pairings)
        object.__setattr__(self, "pairings", pairs)
        den = 1
        for x in pairs:
            den = den * x.denominator // gcd(den, x.denominator)
        # integer numerators over a common denominator keep dot() cheap
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_num", tuple(x.numerator * (den // x.denominator) for x in pairs))

    @classmethod
    def zero(cls, rank: int) -> "CartanElement":
        return cls((0,) * rank)

    @classmethod
    def fundamental_coweight(cls, rank: int, node: int) -> "CartanElement":
        return cls(tuple(int(k == node - 1) for k in range(rank)))

    def __add__(self, other: "CartanElement") -> "CartanElement":
        return CartanElement(tuple(x + y for x, y in zip(self.pairings, other.pairings)))

    def __mul__(self, scalar) -> "CartanElement":
        s = Fraction(scalar)
        return CartanElement(tuple(s * x for x in self.pairings))

    __rmul__ = __mul__

    def dot(self, beta: RootVec) -> Fraction:
        return Fraction(sum(c * x for c, x in zip(beta, self._num)), self._den)


def pairing(rs: RootSystem, beta: RootVec, x: CartanElement) -> Fraction:
    beta = tuple(beta)
    if not rs.is_root(beta):
        raise ValueError(f"{beta} is not a root of {rs.cartan_type}")
    return x.dot(beta)


def coroot_as_element(rs: RootSystem, beta: RootVec) -> CartanElement:
    beta = tuple(beta)
    if not rs.is_root(beta):
        raise ValueError(f"{beta} is not a root of {rs.cartan_type}")
    d_beta = rs.form(beta, beta) // 2
    out = []
    for j in range(rs.rank):
        num = sum(c * rs.symmetrizer[i] * rs.cartan_matrix[i][j] for i, c in enumerate(beta))
        assert num % d_beta == 0, "coroot pairing must be integral"
        out.append(num // d_beta)
    return CartanElement(tuple(out))


def coweight_coefficient(rs: RootSystem, beta: RootVec, node: int) -> int:
    beta = tuple(beta)
    rs._check_node(node)
    if not rs.is_root(beta):
        raise ValueError(f"{beta} is not a root of {rs.cartan_type}")
    return beta[node - 1]
