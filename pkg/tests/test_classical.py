import random

import pytest
import sympy
from hypothesis import given

from conftest import A, A1, B, I3, N2, Z3, int_matrices, structured_matrices, to_sympy
from weakcore.classical import (
    IndexResult,
    drazin,
    drazin_index,
    group_inverse,
    inner_inverse,
    moore_penrose,
    one_three_inverse,
)
from weakcore.corefamily import weak_core
from weakcore.matrix import DimensionError, Matrix, power
from weakcore.verify import InverseKind, check_axioms


def jordan_drazin(m: Matrix) -> sympy.Matrix:
    """Drazin inverse from the Jordan form: invert the blocks with nonzero eigenvalue."""
    s = to_sympy(m)
    p, j = s.jordan_form()
    jd = sympy.zeros(*j.shape)
    blocks = []
    i = 0
    n = j.rows
    while i < n:
        e = i
        while e + 1 < n and j[e, e + 1] == 1 and j[e + 1, e + 1] == j[i, i]:
            e += 1
        blocks.append((i, e + 1))
        i = e + 1
    for lo, hi in blocks:
        if j[lo, lo] != 0:
            jd[lo:hi, lo:hi] = j[lo:hi, lo:hi].inv()
    return sympy.simplify(p * jd * p.inv())


def random_w(rng, rows, cols):
    return Matrix([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])


class TestMoorePenrose:
    def test_identity_and_zero(self):
        assert moore_penrose(I3) == I3
        assert moore_penrose(Z3) == Z3
        assert moore_penrose(Matrix.zeros(2, 3)) == Matrix.zeros(3, 2)

    def test_example_matrix(self):
        x = moore_penrose(A)
        assert check_axioms(A, x, InverseKind.MP).overall
        # frozen from sympy.Matrix.pinv
        assert x == Matrix([["-1/4", "-1/4", 0], ["-1/4", "-1/4", 0], ["1/2", "3/2", 0]])

    @given(int_matrices(square=False))
    def test_penrose_equations_and_sympy_oracle(self, m):
        x = moore_penrose(m)
        assert check_axioms(m, x, InverseKind.MP).overall
        assert to_sympy(x) == to_sympy(m).pinv()


class TestOneThree:
    def test_base_point(self):
        assert one_three_inverse(A, Matrix.zeros(3)) == moore_penrose(A)
        assert one_three_inverse(A) == moore_penrose(A)

    def test_identity_absorbs_w(self, rng):
        assert one_three_inverse(I3, random_w(rng, 3, 3)) == I3

    def test_random_w_is_one_three(self, rng):
        for _ in range(5):
            x = one_three_inverse(A, random_w(rng, 3, 3))
            assert check_axioms(A, x, InverseKind.ONE_THREE).overall

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            one_three_inverse(A, Matrix.zeros(2))

    @given(int_matrices(square=False))
    def test_projector_invariant_across_w(self, m):
        rng = random.Random(hash(m))
        w1, w2 = random_w(rng, m.cols, m.rows), random_w(rng, m.cols, m.rows)
        x1, x2 = one_three_inverse(m, w1), one_three_inverse(m, w2)
        assert m @ x1 @ m == m
        assert m @ x1 == m @ x2 == m @ moore_penrose(m)


@given(int_matrices(square=False))
def test_inner_inverse_family(m):
    rng = random.Random(hash(m) + 1)
    x = inner_inverse(m, random_w(rng, m.cols, m.rows))
    assert check_axioms(m, x, InverseKind.INNER).overall


class TestIndex:
    def test_examples(self):
        assert drazin_index(I3) == IndexResult(0, 1)
        assert drazin_index(N2) == IndexResult(2, 2)
        # rank(A) = 2, rank(A^2) = rank(A^3) = 1
        assert drazin_index(A).drazin_index == 2
        assert drazin_index(A1).drazin_index == 2
        assert drazin_index(A @ B).drazin_index == 1
        assert drazin_index(A + B).drazin_index == 0

    def test_non_square(self):
        with pytest.raises(DimensionError):
            drazin_index(Matrix([[1, 2]]))

    @given(structured_matrices())
    def test_rank_stabilization(self, m):
        from weakcore.matrix import rank

        k = drazin_index(m).drazin_index
        ranks = [rank(power(m, i)) for i in range(k + 2)]
        assert ranks[k] == ranks[k + 1]
        assert all(ranks[i] > ranks[i + 1] for i in range(k))


class TestDrazin:
    def test_invertible_and_nilpotent(self):
        m = Matrix([[2, 1], [1, 1]])
        assert drazin(m) == Matrix([[1, -1], [-1, 2]])
        assert drazin(N2) == Matrix.zeros(2)

    @pytest.mark.parametrize("m", [A, A1, B, A @ B, A + B], ids=["A", "A1", "B", "AB", "A+B"])
    def test_against_jordan_oracle(self, m):
        x = drazin(m)
        assert check_axioms(m, x, InverseKind.DRAZIN, drazin_index(m).paper_index).overall
        assert to_sympy(x) == jordan_drazin(m)

    @given(structured_matrices())
    def test_axioms(self, m):
        k = drazin_index(m).paper_index
        z = drazin(m)
        assert z @ m @ z == z
        assert m @ z == z @ m
        assert z @ power(m, k + 1) == power(m, k)

    @given(structured_matrices())
    def test_weak_core_power_formula(self, m):
        res = weak_core(m)
        k = res.index
        assert power(res.inverse, k + 1) @ power(m, k) == drazin(m)


class TestGroup:
    def test_examples(self):
        assert group_inverse(N2) is None
        assert group_inverse(I3) == I3
        assert group_inverse(A) is None  # index 2
        assert group_inverse(A @ B) is not None

    @given(structured_matrices())
    def test_group_of_powers(self, m):
        k = drazin_index(m).paper_index
        d = drazin(m)
        for j in (k, k + 1):
            g = group_inverse(power(m, j))
            assert g is not None
            assert g == power(d, j)
            assert check_axioms(power(m, j), g, InverseKind.GROUP).overall
