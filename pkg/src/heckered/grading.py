"""Grading of g by a semisimple element and the orbit-dimension formula.

Everything is counted on roots: a root space g_beta sits in degree
<beta, chi>, and the Cartan contributes ``rank`` to degree 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .rootsys import CartanElement, RootSystem


@dataclass(frozen=True)
class GradedDims:
    dims: dict[Fraction, int]

    def __getitem__(self, t) -> int:
        return self.dims.get(Fraction(t), 0)

    @property
    def total(self) -> int:
        return sum(self.dims.values())


@dataclass(frozen=True)
class GoodParabolicDims:
    p0: int
    p1: int
    g0: int
    g1: int


def graded_dims(rs: RootSystem, chi: CartanElement) -> GradedDims:
    counts = Counter(chi.dot(beta) for beta in rs.roots())
    counts[Fraction(0)] += rs.rank
    return GradedDims(dict(counts))


def good_parabolic_dims(rs: RootSystem, chi: CartanElement, h: CartanElement) -> GoodParabolicDims:
    """Degree-0 and degree-1 pieces of the parabolic sum_{t <= r} g_t^r."""
    p0 = g0 = rs.rank
    p1 = g1 = 0
    for beta in rs.roots():
        h_beta = h.dot(beta)
        if h_beta.denominator != 1:
            raise ValueError(f"<beta, h> = {h_beta} is not integral for beta = {beta}")
        t = chi.dot(beta)
        r = h_beta / 2
        if t == 0:
            g0 += 1
            p0 += r >= 0
        elif t == 1:
            g1 += 1
            p1 += r >= 1
    return GoodParabolicDims(p0=p0, p1=p1, g0=g0, g1=g1)


def orbit_dim(gp: GoodParabolicDims) -> int:
    return gp.g0 - gp.p0 + gp.p1


def is_open(rs: RootSystem, chi: CartanElement, h: CartanElement) -> bool:
    gp = good_parabolic_dims(rs, chi, h)
    return orbit_dim(gp) == gp.g1
