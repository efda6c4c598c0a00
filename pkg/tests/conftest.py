"""Shared helpers for the test suite: seeded random generators and
independent oracles (kept out of the engine on purpose)."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from g2forms.exterior import AltForm, Vector
from g2forms.scalars import PolyScalar


def random_rational(rng: random.Random, span: int = 6) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.randint(1, span)
    return Fraction(num, den)


def random_form(rng: random.Random, dim: int, degree: int, symbols=(), density=0.5) -> AltForm:
    symbols = tuple(symbols)
    coeffs = {}
    for idx in combinations(range(1, dim + 1), degree):
        if rng.random() < density:
            value = random_rational(rng)
            if value:
                coeffs[idx] = PolyScalar.constant(value, symbols)
    return AltForm(dim, degree, symbols, coeffs)


def random_vector(rng: random.Random, dim: int, symbols=()) -> Vector:
    symbols = tuple(symbols)
    return Vector(
        [PolyScalar.constant(random_rational(rng), symbols) for _ in range(dim)]
    )


def random_unimodular(rng: random.Random, n: int, shears: int = 8):
    """Product of elementary shears: exact determinant 1."""
    mat = [[Fraction(i == j) for j in range(n)] for i in range(n)]
    for _ in range(shears):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        factor = Fraction(rng.randint(-2, 2))
        if not factor:
            continue
        for c in range(n):
            mat[i][c] += factor * mat[j][c]
    return mat


def rank_by_reverse_elimination(rows) -> int:
    """Row rank via fraction-free elimination pivoting from the last column.

    Deliberately independent of the engine's RREF (different pivot order,
    no normalization) so it can serve as an oracle for kernel dimensions.
    """
    work = [list(row) for row in rows if any(row)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    used = [False] * len(work)
    for col in range(ncols - 1, -1, -1):
        pivot = None
        for r in range(len(work)):
            if not used[r] and work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        used[pivot] = True
        rank += 1
        for r in range(len(work)):
            if r != pivot and not used[r] and work[r][col]:
                f = work[r][col]
                p = work[pivot][col]
                work[r] = [p * a - f * b for a, b in zip(work[r], work[pivot])]
    return rank
