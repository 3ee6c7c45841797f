"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import json
import random
import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction as F

import pytest

from heckered.grading import is_open
from heckered.levi import ExplicitMarks, NilpotentDatum, partition_marks
from heckered.reducibility import (
    InductionSpec,
    NotAnSl2Module,
    candidate_grid,
    infinitesimal_character,
    is_irreducible_at,
    nilradical_weights,
    reducibility_points_rational,
    reducibility_points_scan,
    reducibility_points_strings,
    string_decomposition,
)
from heckered.rootsys import CartanType, build_root_system

from conftest import ALL_MAXIMAL, ALL_TYPES
from test_levi import partitions, valid
from test_rootsys import EXPECTED_COUNT, bourbaki_highest, classical_count


def cli(*argv):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "heckered", *argv], capture_output=True, text=True, check=False
    )
    return proc, time.perf_counter() - start


@pytest.mark.criterion("1 E8 flagship reproduction")
def test_e8_flagship(criterion):
    proc, elapsed = cli("reduce", "--type", "E8", "--node", "4", "--nilpotent", "principal", "--format", "json")
    assert proc.returncode == 0, proc.stderr
    data = json.loads(proc.stdout)
    assert data["k_alpha"] == 6
    assert data["dim_n"] == 106
    assert data["strings"] == {
        "1": [8, 6, 6, 4, 4, 2],
        "2": [9, 7, 5, 5, 3, 1],
        "3": [8, 6, 4, 2],
        "4": [7, 5, 3],
        "5": [4, 2],
        "6": [5],
    }
    assert data["points"] == ["3/10", "1/2", "3/4", "5/6", "1", "7/6", "3/2", "2", "5/2", "7/2", "9/2"]
    assert data["methods_agree"] is True
    assert elapsed < 1.0, f"took {elapsed:.3f} s"
    criterion(True)


@pytest.mark.criterion("2 C-family reproduction (k = 1, 2, 3)")
def test_c_family(criterion):
    for k in (1, 2, 3):
        n = k * (k + 1) // 2
        parts = ".".join(str(2 * j) for j in range(1, k + 1))
        proc, elapsed = cli(
            "reduce", "--type", f"C{n + 1}", "--node", "1", "--nilpotent", f"partitions:{parts}", "--format", "json"
        )
        assert proc.returncode == 0, proc.stderr
        expected = [F(2 * j + 1, 2) for j in range(k + 1)]
        assert [F(p) for p in json.loads(proc.stdout)["points"]] == expected
        assert elapsed < 1.0, f"k={k} took {elapsed:.3f} s"
    criterion(True)


@pytest.mark.criterion("3 triple-oracle equivalence, rank <= 8")
def test_triple_oracle(criterion):
    start = time.perf_counter()
    for t, node in ALL_MAXIMAL:
        spec = InductionSpec.maximal(t, node)
        rs, h = spec.root_system, spec.middle().h
        by_strings = reducibility_points_strings(spec, h)
        assert by_strings == reducibility_points_rational(spec, h) == reducibility_points_scan(spec, h), (t, node)
        for nu in candidate_grid(spec, h):
            chi = infinitesimal_character(rs, spec.levi, h, node, nu)
            assert is_irreducible_at(rs, spec.levi, h, node, nu) == is_open(rs, chi, h), (t, node, nu)
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"took {elapsed:.1f} s"
    criterion(True)


@pytest.mark.criterion("4 root-system tables")
def test_root_tables(criterion):
    for t in ALL_TYPES:
        rs = build_root_system(t)
        assert len(rs.positive_roots) == (EXPECTED_COUNT.get(str(t)) or classical_count(t)), t
        assert rs.highest_root == bourbaki_highest(t), t
    criterion(True)


@pytest.mark.criterion("5 sl(2) invariants and mutation")
def test_sl2_invariants(criterion):
    rnd = random.Random(20061015)
    mutated = 0
    for t, node in ALL_MAXIMAL:
        spec = InductionSpec.maximal(t, node)
        rs, h = spec.root_system, spec.middle().h
        sd = string_decomposition(spec, h)
        for i in range(1, sd.k_alpha + 1):
            w = nilradical_weights(rs, spec.levi, h, node, i)
            assert Counter(w) == Counter(-x for x in w), (t, node, i)
            assert sum(sd.per_eigenvalue[i]) == len(w)
        total = sum(sum(ds) for ds in sd.per_eigenvalue.values())
        levi_pos = [b for b in rs.positive_roots if b[node - 1] == 0]
        assert total == sd.dim_n == len(rs.positive_roots) - len(levi_pos)

        if not spec.levi.nodes:
            continue
        base = reducibility_points_strings(spec, h)
        bump = rnd.choice(sorted(spec.levi.nodes))
        recipes = tuple(
            ExplicitMarks(tuple(2 + (j == bump) for j in sorted(c.nodes))) for c in spec.levi.components
        )
        bad = InductionSpec(t, spec.levi, NilpotentDatum(recipes), node)
        try:
            changed = reducibility_points_strings(bad) != base
        except NotAnSl2Module:
            changed = True
        assert changed, (t, node, bump)
        mutated += 1
    assert mutated == len(ALL_MAXIMAL) - 1  # A1 has an empty Levi
    criterion(True)


@pytest.mark.criterion("6 weighted marks in {0,1,2}")
def test_weighted_marks(criterion):
    dims = {"A": lambda m: m + 1, "B": lambda m: 2 * m + 1, "C": lambda m: 2 * m, "D": lambda m: 2 * m}
    lows = {"A": 1, "B": 2, "C": 2, "D": 4}
    checked = 0
    for fam, size_of in dims.items():
        m = lows[fam]
        while size_of(m) <= 8:
            t = CartanType(fam, m)
            for parts in partitions(size_of(m)):
                if valid(fam, parts):
                    assert set(partition_marks(t, parts)) <= {0, 1, 2}, (t, parts)
                    checked += 1
            assert set(partition_marks(t, [size_of(m)] if fam != "D" else [size_of(m) - 1, 1])) == {2}
            m += 1
    for t, node in ALL_MAXIMAL:
        spec = InductionSpec.maximal(t, node)
        assert set(spec.middle().marks.values()) <= {2}
    assert checked > 0
    criterion(True)


@pytest.mark.criterion("7 non-generic set bounded by generic set (k = 2)")
def test_non_generic_subset(criterion):
    from heckered.levi import Partition

    spec = InductionSpec.maximal(CartanType("C", 4), 1, NilpotentDatum((Partition((2, 4)),)))
    generic = reducibility_points_strings(spec)
    assert generic == {F(1, 2), F(3, 2), F(5, 2)}
    non_generic_documented = {F(3, 2), F(5, 2)}
    assert non_generic_documented <= generic
    criterion(True)
