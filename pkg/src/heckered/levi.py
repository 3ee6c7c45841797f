"""Levi subsets of a root system and middle elements of sl(2)-triples in them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from ._exact import solve
from .rootsys import CartanElement, CartanType, RootSystem, RootVec, cartan_matrix


class InvalidDatum(ValueError):
    """Nilpotent datum does not fit the Levi it is attached to."""


@dataclass(frozen=True)
class LeviComponent:
    nodes: tuple[int, ...]  # ambient node numbers in Bourbaki order of the component
    cartan_type: CartanType


@dataclass(frozen=True)
class LeviSubset:
    nodes: frozenset[int]
    components: tuple[LeviComponent, ...]

    @property
    def label(self) -> str:
        if not self.components:
            return "none"
        return "+".join(str(c.cartan_type) for c in self.components)


@dataclass(frozen=True)
class Principal:
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))


@dataclass(frozen=True)
class ExplicitMarks:
    """Marks over the component's nodes listed in ascending ambient order."""

    marks: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "marks", tuple(Fraction(m) for m in self.marks))


Recipe = Union[Principal, Partition, ExplicitMarks]


@dataclass(frozen=True)
class NilpotentDatum:
    recipes: tuple[Recipe, ...]

    @classmethod
    def all_principal(cls, levi: LeviSubset) -> "NilpotentDatum":
        return cls(tuple(Principal() for _ in levi.components))


@dataclass(frozen=True)
class MiddleElement:
    h: CartanElement
    coroot_coords: dict[int, Fraction]  # Levi node -> coefficient of its coroot

    @property
    def marks(self) -> dict[int, Fraction]:
        return {j: self.h.pairings[j - 1] for j in self.coroot_coords}


# --- classification -------------------------------------------------------


def _bond(rs: RootSystem, i: int, j: int) -> int:
    a = rs.cartan_matrix
    return a[i - 1][j - 1] * a[j - 1][i - 1]


def _is_long(rs: RootSystem, i: int) -> bool:
    return rs.symmetrizer[i - 1] == max(rs.symmetrizer)


def _walk(adj: dict[int, list[int]], start: int, avoid: set[int]) -> list[int]:
    path, prev, cur = [start], None, start
    while True:
        nxt = [v for v in adj[cur] if v != prev and v not in avoid]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def _classify_component(rs: RootSystem, comp: set[int]) -> LeviComponent:
    adj = {i: sorted(j for j in comp if j != i and _bond(rs, i, j)) for i in comp}
    m = len(comp)
    if m == 1:
        return LeviComponent(tuple(comp), CartanType("A", 1))
    branch = [i for i in comp if len(adj[i]) == 3]
    if branch:
        c = branch[0]
        arms = sorted(
            (_walk(adj, leaf, {c}) for leaf in adj[c]),
            key=lambda arm: (len(arm), -min(arm)),
        )
        short1, a2, a3 = arms  # arm lists start next to the center
        if len(a2) == 1:
            # D_m: long arm from its leaf to the center, then the two forks
            order = list(reversed(a3)) + [c] + sorted([short1[0], a2[0]])
            return LeviComponent(tuple(order), CartanType("D", m))
        if len(a2) == 2 and len(a3) >= 2:
            if len(a3) == 2 and a3[-1] < a2[-1]:
                a2, a3 = a3, a2
            order = [a2[1], short1[0], a2[0], c] + a3
            return LeviComponent(tuple(order), CartanType("E", m))
        raise AssertionError(f"unexpected branched diagram on {sorted(comp)}")
    ends = sorted(i for i in comp if len(adj[i]) == 1)
    path = _walk(adj, ends[0], set())
    bonds = [_bond(rs, path[k], path[k + 1]) for k in range(m - 1)]
    if all(b == 1 for b in bonds):
        return LeviComponent(tuple(path), CartanType("A", m))
    if 3 in bonds:
        order = path if not _is_long(rs, path[0]) else path[::-1]
        return LeviComponent(tuple(order), CartanType("G", 2))
    k = bonds.index(2)
    if m == 4 and k == 1:
        order = path if _is_long(rs, path[0]) else path[::-1]
        return LeviComponent(tuple(order), CartanType("F", 4))
    if m > 2 and k == 0:
        path = path[::-1]
    family = "C" if _is_long(rs, path[-1]) else "B"
    return LeviComponent(tuple(path), CartanType(family, m))


def classify_levi(rs: RootSystem, nodes: Iterable[int]) -> LeviSubset:
    """Split a set of simple roots into connected components and name them."""
    nodes = frozenset(nodes)
    for j in nodes:
        rs._check_node(j)
    remaining = set(nodes)
    comps = []
    while remaining:
        seed = min(remaining)
        comp, stack = {seed}, [seed]
        while stack:
            i = stack.pop()
            for j in remaining:
                if j not in comp and _bond(rs, i, j):
                    comp.add(j)
                    stack.append(j)
        remaining -= comp
        lc = _classify_component(rs, comp)
        ref = cartan_matrix(lc.cartan_type)
        sub = tuple(
            tuple(rs.cartan_matrix[i - 1][j - 1] for j in lc.nodes) for i in lc.nodes
        )
        assert sub == ref, f"component {lc} does not match its Cartan matrix"
        comps.append(lc)
    comps.sort(key=lambda c: min(c.nodes))
    return LeviSubset(nodes, tuple(comps))


def maximal_levi(rs: RootSystem, removed_node: int) -> LeviSubset:
    rs._check_node(removed_node)
    return classify_levi(rs, set(range(1, rs.rank + 1)) - {removed_node})


# --- nilpotent data -------------------------------------------------------

_DEFINING_DIM = {
    "A": lambda m: m + 1,
    "B": lambda m: 2 * m + 1,
    "C": lambda m: 2 * m,
    "D": lambda m: 2 * m,
}


def check_partition(t: CartanType, parts: Sequence[int]) -> None:
    if t.family not in _DEFINING_DIM:
        raise InvalidDatum(f"partitions are only defined for classical types, not {t}")
    if not parts or any(not isinstance(p, int) or p <= 0 for p in parts):
        raise InvalidDatum(f"partition parts must be positive integers: {parts}")
    size = _DEFINING_DIM[t.family](t.rank)
    if sum(parts) != size:
        raise InvalidDatum(f"partition {list(parts)} of {sum(parts)} does not fit {t} (needs {size})")
    mult = Counter(parts)
    if t.family in "BD":
        bad = [p for p, k in mult.items() if p % 2 == 0 and k % 2]
    elif t.family == "C":
        bad = [p for p, k in mult.items() if p % 2 == 1 and k % 2]
    else:
        bad = []
    if bad:
        raise InvalidDatum(f"partition {list(parts)} violates the parity rule for {t} (parts {sorted(bad)})")


def partition_marks(component_type: CartanType, partition: Sequence[int]) -> tuple[Fraction, ...]:
    """Weighted Dynkin diagram of the nilpotent orbit with the given Jordan type.

    Marks are returned in the Bourbaki node order of ``component_type``.
    """
    check_partition(component_type, partition)
    eig = sorted((p - 1 - 2 * k for p in partition for k in range(p)), reverse=True)
    m = component_type.rank
    fam = component_type.family
    x = eig if fam == "A" else eig[:m]
    marks = [x[i] - x[i + 1] for i in range(m if fam == "A" else m - 1)]
    if fam == "B":
        marks.append(x[m - 1])
    elif fam == "C":
        marks.append(2 * x[m - 1])
    elif fam == "D":
        marks.append(x[m - 2] + x[m - 1])
    return tuple(Fraction(v) for v in marks)


def _component_marks(comp: LeviComponent, recipe: Recipe) -> dict[int, Fraction]:
    if isinstance(recipe, Principal):
        return {j: Fraction(2) for j in comp.nodes}
    if isinstance(recipe, Partition):
        return dict(zip(comp.nodes, partition_marks(comp.cartan_type, recipe.parts)))
    if isinstance(recipe, ExplicitMarks):
        if len(recipe.marks) != len(comp.nodes):
            raise InvalidDatum(
                f"{len(recipe.marks)} marks given for component {comp.cartan_type} "
                f"with {len(comp.nodes)} nodes"
            )
        return dict(zip(sorted(comp.nodes), recipe.marks))
    raise InvalidDatum(f"unknown recipe {recipe!r}")


def middle_element(rs: RootSystem, levi: LeviSubset, datum: NilpotentDatum) -> MiddleElement:
    """Solve for h in the span of the Levi coroots with the prescribed marks."""
    if len(datum.recipes) != len(levi.components):
        raise InvalidDatum(
            f"{len(datum.recipes)} recipes for {len(levi.components)} Levi components ({levi.label})"
        )
    marks: dict[int, Fraction] = {}
    for comp, recipe in zip(levi.components, datum.recipes):
        marks.update(_component_marks(comp, recipe))
    nodes = sorted(levi.nodes)
    a = rs.cartan_matrix
    # sum_j b_j <alpha_i, coroot_j> = m_i, and <alpha_i, coroot_j> = A[j][i]
    system = [[a[j - 1][i - 1] for j in nodes] for i in nodes]
    b = solve(system, [marks[i] for i in nodes]) if nodes else []
    coords = dict(zip(nodes, b))
    pair = [sum((bj * a[j - 1][k] for j, bj in coords.items()), Fraction(0)) for k in range(rs.rank)]
    return MiddleElement(CartanElement(tuple(pair)), coords)


def centralizer_roots(rs: RootSystem, x: CartanElement) -> set[RootVec]:
    return {beta for beta in rs.positive_roots if x.dot(beta) == 0}


# --- text grammar ---------------------------------------------------------


def parse_datum(text: str, levi: LeviSubset) -> NilpotentDatum:
    """Parse ``principal``, ``marks:q1,q2,...`` or ``partitions:p.p.p;p.p;...``.

    Marks run over the Levi nodes in ascending ambient order. Partitions are
    given one per component (components ordered by their smallest node), parts
    separated by ``.``; a component entry may also read ``principal``.
    """
    text = text.strip()
    if text == "principal":
        return NilpotentDatum.all_principal(levi)
    kind, sep, body = text.partition(":")
    if not sep:
        raise InvalidDatum(f"cannot parse nilpotent datum {text!r}")
    if kind == "marks":
        try:
            values = [Fraction(v) for v in body.split(",")] if body.strip() else []
        except ValueError as exc:
            raise InvalidDatum(f"bad mark in {body!r}") from exc
        if len(values) != len(levi.nodes):
            raise InvalidDatum(f"{len(values)} marks given for {len(levi.nodes)} Levi nodes")
        by_node = dict(zip(sorted(levi.nodes), values))
        return NilpotentDatum(
            tuple(ExplicitMarks(tuple(by_node[j] for j in sorted(c.nodes))) for c in levi.components)
        )
    if kind == "partitions":
        entries = [e.strip() for e in body.split(";")] if body.strip() else []
        if len(entries) != len(levi.components):
            raise InvalidDatum(
                f"{len(entries)} partitions given for {len(levi.components)} Levi components ({levi.label})"
            )
        recipes: list[Recipe] = []
        for entry in entries:
            if entry == "principal":
                recipes.append(Principal())
                continue
            try:
                recipes.append(Partition(tuple(int(p) for p in entry.split("."))))
            except ValueError as exc:
                raise InvalidDatum(f"bad partition {entry!r}") from exc
        return NilpotentDatum(tuple(recipes))
    raise InvalidDatum(f"unknown nilpotent datum kind {kind!r}")


def format_datum(datum: NilpotentDatum) -> str:
    recipes = datum.recipes
    if all(isinstance(r, Principal) for r in recipes):
        return "principal"
    if all(isinstance(r, ExplicitMarks) for r in recipes):
        from ._exact import fmt

        return "marks:" + ",".join(fmt(m) for r in recipes for m in r.marks)
    if any(isinstance(r, ExplicitMarks) for r in recipes):
        raise ValueError("mixed explicit-mark data have no text form")
    entries = ["principal" if isinstance(r, Principal) else ".".join(map(str, r.parts)) for r in recipes]
    return "partitions:" + ";".join(entries)
