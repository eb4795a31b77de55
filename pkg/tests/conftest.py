"""Shared generators for the test suite."""

from __future__ import annotations

import random

from torusglue.lattice import IntMatrix, content
from torusglue.torus3 import CurveClass


def random_elementary(rng: random.Random, n: int = 3, coeff: int = 3) -> IntMatrix:
    """A random elementary matrix: shear, swap, or sign flip."""
    kind = rng.randrange(3)
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if kind == 0:
        i, j = rng.sample(range(n), 2)
        rows[i][j] = rng.choice([k for k in range(-coeff, coeff + 1) if k != 0])
    elif kind == 1:
        i, j = rng.sample(range(n), 2)
        rows[i][i] = rows[j][j] = 0
        rows[i][j] = rows[j][i] = 1
    else:
        i = rng.randrange(n)
        rows[i][i] = -1
    return IntMatrix.from_rows(rows)


def random_unimodular(
    rng: random.Random,
    n: int = 3,
    max_factors: int = 20,
    coeff: int = 3,
    entry_cap: int = 10**6,
) -> IntMatrix:
    """Product of at most max_factors elementary matrices, entries capped."""
    m = IntMatrix.identity(n)
    factors = rng.randint(0, max_factors)
    for _ in range(factors):
        candidate = m @ random_elementary(rng, n, coeff)
        if max(abs(x) for x in candidate.entries) > entry_cap:
            continue
        m = candidate
    return m


def random_lambda_stabilizer(
    rng: random.Random, index: int, max_factors: int = 12, coeff: int = 2
) -> IntMatrix:
    """A random unimodular matrix fixing the given 0-based axis up to sign.

    Generated from shears whose source column avoids the axis, the swap of
    the other two rows, and sign flips; every factor sends e_index to
    +-e_index, so the product is a framing change that preserves a piece's
    lambda curve as an unoriented class.
    """
    others = [i for i in range(3) if i != index]
    m = IntMatrix.identity(3)
    for _ in range(rng.randint(1, max_factors)):
        kind = rng.randrange(3)
        rows = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
        if kind == 0:
            j = rng.choice(others)  # shear source must avoid the fixed axis
            i = rng.choice([r for r in range(3) if r != j])
            rows[i][j] = rng.choice([k for k in range(-coeff, coeff + 1) if k != 0])
        elif kind == 1:
            a, b = others
            rows[a][a] = rows[b][b] = 0
            rows[a][b] = rows[b][a] = 1
        else:
            i = rng.randrange(3)
            rows[i][i] = -1
        m = m @ IntMatrix.from_rows(rows)
    return m


def random_primitive_vector(rng: random.Random, bound: int = 4) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(3))
        if content(v) == 1:
            return v


def random_curve(rng: random.Random, bound: int = 4) -> CurveClass:
    return CurveClass.of(random_primitive_vector(rng, bound))
