import cmath
import math
import random

import pytest

from logsplit import Matrix, Representation, Scalar


def rand_complex(rng: random.Random, radius: float = 1.0) -> complex:
    # Uniform over the disk of the given radius.
    r = radius * math.sqrt(rng.random())
    return r * cmath.exp(2j * math.pi * rng.random())


def rand_matrix(rng: random.Random, n: int, radius: float = 1.0) -> Matrix:
    return Matrix(
        [[Scalar.inexact(rand_complex(rng, radius)) for _ in range(n)] for _ in range(n)]
    )


def rand_invertible(rng: random.Random, n: int, det_floor: float = 1e-6) -> Matrix:
    while True:
        m = rand_matrix(rng, n)
        if abs(m.det()) >= det_floor:
            return m


def frobenius(m: Matrix) -> float:
    return math.sqrt(sum(abs(e) ** 2 for row in m.rows for e in row))


def rand_well_conditioned(rng: random.Random, n: int, cond_bound: float = 1e3) -> Matrix:
    # Frobenius-based estimate dominates the spectral condition number.
    while True:
        s = rand_invertible(rng, n)
        if frobenius(s) * frobenius(s.inverse()) < cond_bound:
            return s


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, m = a.n, b.n
    zero = Scalar.exact(0)
    rows = []
    for i in range(n):
        rows.append(list(a.rows[i]) + [zero] * m)
    for i in range(m):
        rows.append([zero] * n + list(b.rows[i]))
    return Matrix(rows)


@pytest.fixture
def golden_pair() -> tuple[Matrix, Matrix]:
    """The embedded modular-group generators with exact rational entries."""
    from fractions import Fraction as F

    gen_t = Matrix([[1, 0], [0, -1]])
    gen_s = Matrix([[F(-1, 2), 1], [F(3, 4), F(1, 2)]])
    return gen_t, gen_s


@pytest.fixture
def golden_rep(golden_pair) -> Representation:
    return Representation(3, golden_pair)
