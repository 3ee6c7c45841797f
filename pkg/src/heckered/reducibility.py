"""Reducibility points of generic standard modules induced from a maximal parabolic.

Three independent routes are provided and cross-checked by ``full_report``:

* ``reducibility_points_strings``: split each coweight eigenspace n_i of the
  nilradical into sl(2)-strings of lengths d and collect (d + 1) / (2 i);
* ``reducibility_points_rational``: zeros of
  prod_{beta in N} (1 - <beta, chi>) / <beta, chi> with chi = h/2 + nu * omega,
  found by cancelling numerator and denominator roots;
* ``reducibility_points_scan``: evaluate the count criterion
  #{<beta, chi> = 1} == #{<beta, chi> = 0} on a grid that provably contains
  every zero.

The orbit-dimension route of :mod:`heckered.grading` is checked against the
count criterion on the same grid.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from ._exact import fmt
from .grading import is_open
from .levi import (
    LeviSubset,
    MiddleElement,
    NilpotentDatum,
    format_datum,
    maximal_levi,
    middle_element,
)
from .rootsys import CartanElement, CartanType, RootSystem, RootVec, build_root_system


class NotAnSl2Module(ValueError):
    """A weight multiset is not the character of an sl(2)-module."""


class ReducibilityError(ValueError):
    """A stage of the report pipeline failed; ``stage`` names it."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause


@dataclass(frozen=True)
class InductionSpec:
    ambient: CartanType
    levi: LeviSubset
    datum: NilpotentDatum
    removed_node: Optional[int]

    @classmethod
    def maximal(
        cls, ambient: CartanType, removed_node: int, datum: NilpotentDatum | None = None
    ) -> "InductionSpec":
        rs = build_root_system(ambient)
        levi = maximal_levi(rs, removed_node)
        if datum is None:
            datum = NilpotentDatum.all_principal(levi)
        return cls(ambient, levi, datum, removed_node)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.ambient)

    def middle(self) -> MiddleElement:
        return middle_element(self.root_system, self.levi, self.datum)

    def check_maximal(self) -> None:
        rank = self.ambient.rank
        if self.removed_node is None:
            if len(self.levi.nodes) != rank:
                raise ValueError("no removed node given for a proper Levi")
            return
        expected = set(range(1, rank + 1)) - {self.removed_node}
        if set(self.levi.nodes) != expected:
            raise ValueError(
                f"Levi {sorted(self.levi.nodes)} is not the maximal Levi omitting node {self.removed_node}"
            )


@dataclass(frozen=True)
class StringDecomposition:
    per_eigenvalue: dict[int, tuple[int, ...]]
    dim_n: int
    k_alpha: int


@dataclass(frozen=True)
class MethodAgreement:
    rational: bool
    scan: bool
    orbit: bool

    @property
    def all(self) -> bool:
        return self.rational and self.scan and self.orbit


@dataclass(frozen=True)
class ReducibilityReport:
    spec: InductionSpec
    points: tuple[Fraction, ...]
    strings: StringDecomposition
    method_agreement: MethodAgreement
    net_multiplicities: dict[Fraction, int] = field(default_factory=dict)


def k_alpha(rs: RootSystem, node: int) -> int:
    return rs.highest_root[node - 1]


def _nilradical(rs: RootSystem, levi: LeviSubset) -> list[RootVec]:
    outside = [j - 1 for j in range(1, rs.rank + 1) if j not in levi.nodes]
    return [b for b in rs.positive_roots if any(b[j] for j in outside)]


def _as_number(q: Fraction):
    return q.numerator if q.denominator == 1 else q


def nilradical_weights(
    rs: RootSystem, levi: LeviSubset, h: CartanElement, removed_node: int, i: int
) -> list:
    """Weights of h on the i-eigenspace of the fundamental coweight, largest first."""
    if removed_node in levi.nodes:
        raise ValueError(f"removed node {removed_node} lies in the Levi")
    k = k_alpha(rs, removed_node)
    if not 1 <= i <= k:
        raise ValueError(f"eigenvalue {i} outside 1..{k}")
    ws = [h.dot(b) for b in rs.positive_roots if b[removed_node - 1] == i]
    return sorted((_as_number(w) for w in ws), reverse=True)


def decompose_strings(weights: Iterable) -> list[int]:
    """Greedy split of a weight multiset into strings m, m-2, ..., -m.

    Returns the string dimensions, largest first.
    """
    remaining = Counter(Fraction(w) for w in weights)
    out = []
    while remaining:
        top = max(remaining)
        if top < 0 or top.denominator != 1:
            raise NotAnSl2Module(f"weight {fmt(top)} cannot head an sl(2)-string")
        m = int(top)
        for w in range(m, -m - 1, -2):
            if remaining[Fraction(w)] == 0:
                raise NotAnSl2Module(f"string of highest weight {m} is missing weight {w}")
            remaining[Fraction(w)] -= 1
            if remaining[Fraction(w)] == 0:
                del remaining[Fraction(w)]
        out.append(m + 1)
    return out


def string_decomposition(spec: InductionSpec, h: CartanElement | None = None) -> StringDecomposition:
    rs = spec.root_system
    if h is None:
        h = spec.middle().h
    if spec.removed_node is None:
        return StringDecomposition({}, 0, 0)
    k = k_alpha(rs, spec.removed_node)
    per = {
        i: tuple(decompose_strings(nilradical_weights(rs, spec.levi, h, spec.removed_node, i)))
        for i in range(1, k + 1)
    }
    dim_n = len(_nilradical(rs, spec.levi))
    return StringDecomposition(per, dim_n, k)


def reducibility_points_strings(spec: InductionSpec, h: CartanElement | None = None) -> set[Fraction]:
    spec.check_maximal()
    sd = string_decomposition(spec, h)
    return {Fraction(d + 1, 2 * i) for i, ds in sd.per_eigenvalue.items() for d in ds}


def rational_net_multiplicities(spec: InductionSpec, h: CartanElement | None = None) -> dict[Fraction, int]:
    """Numerator-minus-denominator multiplicity of every root of the rational function in nu."""
    spec.check_maximal()
    rs = spec.root_system
    if h is None:
        h = spec.middle().h
    net: Counter = Counter()
    if spec.removed_node is None:
        return {}
    for b in _nilradical(rs, spec.levi):
        t = h.dot(b)
        i = b[spec.removed_node - 1]
        net[(2 - t) / (2 * i)] += 1
        net[-t / (2 * i)] -= 1
    return {v: c for v, c in sorted(net.items()) if c != 0}


def reducibility_points_rational(spec: InductionSpec, h: CartanElement | None = None) -> set[Fraction]:
    net = rational_net_multiplicities(spec, h)
    return {v for v, c in net.items() if c > 0 and v > 0}


def _nu_element(rs, levi, removed_node, nu) -> CartanElement:
    if isinstance(nu, CartanElement):
        for j in range(1, rs.rank + 1):
            x = nu.pairings[j - 1]
            if j in levi.nodes and x != 0:
                raise ValueError(f"nu must vanish on the Levi; pairing with node {j} is {fmt(x)}")
            if j not in levi.nodes and x <= 0:
                raise ValueError(f"nu is not dominant for the nilradical; pairing with node {j} is {fmt(x)}")
        return nu
    nu = Fraction(nu)
    if nu <= 0:
        raise ValueError(f"nu must be positive, got {fmt(nu)}")
    if removed_node is None or removed_node in levi.nodes:
        raise ValueError("a scalar nu needs a removed node outside the Levi")
    return CartanElement.fundamental_coweight(rs.rank, removed_node) * nu


def infinitesimal_character(
    rs: RootSystem, levi: LeviSubset, h: CartanElement, removed_node, nu
) -> CartanElement:
    """chi = h/2 + nu * omega (or h/2 + nu for a Cartan-element nu)."""
    return h * Fraction(1, 2) + _nu_element(rs, levi, removed_node, nu)


def nilradical_counts(
    rs: RootSystem, levi: LeviSubset, h: CartanElement, removed_node, nu
) -> tuple[int, int]:
    """(#{beta in N : <beta, chi> = 1}, #{beta in N : <beta, chi> = 0})."""
    chi = infinitesimal_character(rs, levi, h, removed_node, nu)
    values = [chi.dot(b) for b in _nilradical(rs, levi)]
    return values.count(1), values.count(0)


def is_irreducible_at(
    rs: RootSystem,
    levi: LeviSubset,
    h: CartanElement,
    removed_node: Optional[int],
    nu: Union[Fraction, int, str, CartanElement],
) -> bool:
    ones, zeros = nilradical_counts(rs, levi, h, removed_node, nu)
    return ones == zeros


def candidate_grid(spec: InductionSpec, h: CartanElement | None = None) -> list[Fraction]:
    """Positive q / (2 i), i <= k(alpha), q <= 2 + max |<beta, h>| over the nilradical."""
    spec.check_maximal()
    if spec.removed_node is None:
        return []
    rs = spec.root_system
    if h is None:
        h = spec.middle().h
    bound = 2 + max(abs(h.dot(b)) for b in _nilradical(rs, spec.levi))
    k = k_alpha(rs, spec.removed_node)
    qmax = math.ceil(bound)
    return sorted({Fraction(q, 2 * i) for i in range(1, k + 1) for q in range(1, qmax + 1)})


def reducibility_points_scan(spec: InductionSpec, h: CartanElement | None = None) -> set[Fraction]:
    rs = spec.root_system
    if h is None:
        h = spec.middle().h
    return {
        nu
        for nu in candidate_grid(spec, h)
        if not is_irreducible_at(rs, spec.levi, h, spec.removed_node, nu)
    }


def orbit_route_agrees(spec: InductionSpec, h: CartanElement | None = None) -> bool:
    """Count criterion and open-orbit test give the same verdict on the whole grid."""
    rs = spec.root_system
    if h is None:
        h = spec.middle().h
    for nu in candidate_grid(spec, h):
        chi = infinitesimal_character(rs, spec.levi, h, spec.removed_node, nu)
        if is_open(rs, chi, h) != is_irreducible_at(rs, spec.levi, h, spec.removed_node, nu):
            return False
    return True


def _stage(name, fn, *args):
    try:
        return fn(*args)
    except ValueError as exc:
        raise ReducibilityError(name, exc) from exc


def full_report(spec: InductionSpec) -> ReducibilityReport:
    h = _stage("middle element", lambda: spec.middle().h)
    _stage("spec", spec.check_maximal)
    strings = _stage("string decomposition", string_decomposition, spec, h)
    by_strings = _stage("string formula", reducibility_points_strings, spec, h)
    net = _stage("rational function", rational_net_multiplicities, spec, h)
    by_rational = {v for v, c in net.items() if c > 0 and v > 0}
    by_scan = _stage("dimension scan", reducibility_points_scan, spec, h)
    orbit_ok = _stage("orbit dimension", orbit_route_agrees, spec, h)
    agreement = MethodAgreement(
        rational=by_rational == by_strings,
        scan=by_scan == by_strings,
        orbit=orbit_ok,
    )
    return ReducibilityReport(
        spec=spec,
        points=tuple(sorted(by_strings)),
        strings=strings,
        method_agreement=agreement,
        net_multiplicities=net,
    )


def report_to_dict(report: ReducibilityReport) -> dict:
    spec = report.spec
    return {
        "type": str(spec.ambient),
        "removed_node": spec.removed_node,
        "levi_type": spec.levi.label,
        "nilpotent": format_datum(spec.datum),
        "k_alpha": report.strings.k_alpha,
        "dim_n": report.strings.dim_n,
        "strings": {str(i): list(ds) for i, ds in sorted(report.strings.per_eigenvalue.items())},
        "points": [fmt(p) for p in report.points],
        "methods_agree": report.method_agreement.all,
    }
