import random

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from weakcore.matrix import Matrix

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

A1 = Matrix([[0, 8, -8], [8, -5, 8], [8, -5, 8]])
A = Matrix([[-3, -3, -1], [1, 1, 1], [0, 0, 0]])
B = Matrix([[3, 1, 0], [-3, -1, 0], [2, -2, 0]])
I3 = Matrix.identity(3)
Z3 = Matrix.zeros(3)
N2 = Matrix([[0, 1], [0, 0]])


def q(rows):
    """Matrix from a nested list of rational strings or ints."""
    return Matrix(rows)


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])


def from_sympy(m: sympy.Matrix) -> Matrix:
    return Matrix([[f"{sympy.Rational(x).p}/{sympy.Rational(x).q}" for x in m.row(i)] for i in range(m.rows)])


@st.composite
def int_matrices(draw, min_size=1, max_size=4, bound=5, square=True):
    rows = draw(st.integers(min_size, max_size))
    cols = rows if square else draw(st.integers(min_size, max_size))
    entries = st.integers(-bound, bound)
    return Matrix([[draw(entries) for _ in range(cols)] for _ in range(rows)])


@st.composite
def structured_matrices(draw, max_size=4):
    """Square matrices biased towards singular, nilpotent and higher-index cases."""
    from weakcore.sampling import FLAVOURS, sample_matrix

    n = draw(st.integers(2, max_size))
    flavour = draw(st.sampled_from(FLAVOURS))
    seed = draw(st.integers(0, 2**32 - 1))
    return sample_matrix(random.Random(seed), n, flavour)


@pytest.fixture
def rng():
    return random.Random(1234)
