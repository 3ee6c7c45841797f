"""Small exact-rational helpers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square system by Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n] for row in m]


def fmt(q) -> str:
    """Render a rational as ``p/q`` in lowest terms, or ``n`` for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
