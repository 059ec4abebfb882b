from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import A, A1, I3, N2, Z3, structured_matrices
from weakcore.classical import drazin, moore_penrose
from weakcore.corefamily import weak_core
from weakcore.matrix import DimensionError, Matrix
from weakcore.report import consistency_report
from weakcore.verify import EQUATIONS, InverseKind, characterize_weak_core, check_axioms

A1_WC = Matrix([[0, 0, 0], [0, "1/6", "1/6"], [0, "1/6", "1/6"]])


def test_every_kind_uses_known_equations():
    for kind in InverseKind:
        assert set(kind.equations) <= set(EQUATIONS)


@pytest.mark.parametrize(
    "kind, equations",
    [
        (InverseKind.MP, {"1", "2", "3", "4"}),
        (InverseKind.GROUP, {"2", "5", "6k"}),
        (InverseKind.DRAZIN, {"2", "5", "6k"}),
        (InverseKind.CORE, {"1", "7", "3"}),
        (InverseKind.CORE_EP, {"3", "6k", "7"}),
        (InverseKind.WEAK_GROUP, {"6k", "7", "wg"}),
        (InverseKind.WEAK_CORE, {"6k", "7", "6*"}),
        (InverseKind.CENTRAL_DRAZIN, {"c'", "2", "6k'"}),
        (InverseKind.CENTRAL_WEAK_CORE, {"c", "6k", "2", "3"}),
    ],
)
def test_equation_sets(kind, equations):
    assert set(kind.equations) == equations


def test_published_weak_core_passes():
    rep = check_axioms(A1, A1_WC, InverseKind.WEAK_CORE, 2)
    assert rep.overall
    assert [name for name, _ in rep.verdicts] == ["6k", "7", "6*"]


def test_published_weak_core_needs_index_two():
    # A1 has index 2; at k = 1 both power equations fail
    rep = check_axioms(A1, A1_WC, InverseKind.WEAK_CORE, 1)
    assert rep.failed() == ["6k", "6*"]


@pytest.mark.parametrize("kind", list(InverseKind))
def test_identity_is_every_inverse_of_identity(kind):
    assert check_axioms(I3, I3, kind, 1).overall


def test_zero_is_not_mp_of_nonzero():
    rep = check_axioms(A, Z3, InverseKind.MP)
    assert not rep.overall
    assert dict(rep.verdicts)["1"] is False


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        check_axioms(A, Matrix.identity(2), InverseKind.MP)


def test_report_dict_shape():
    d = check_axioms(A1, A1_WC, InverseKind.WEAK_CORE, 2).to_dict()
    assert d["kind"] == "weak-core" and d["index"] == 2 and d["overall"]
    assert {"name", "holds"} <= set(d["axioms"][0])


@given(structured_matrices(), st.integers(0, 15), st.sampled_from([Fraction(1), Fraction(-1, 7), Fraction(3, 2)]))
def test_single_entry_perturbation_flips_verdict(m, pos, eps):
    y = weak_core(m).inverse
    k = weak_core(m).index
    i, j = divmod(pos % (m.rows * m.cols), m.cols)
    bumped = Matrix([[x + (eps if (r, c) == (i, j) else 0) for c, x in enumerate(row)] for r, row in enumerate(y)])
    assert check_axioms(m, y, InverseKind.WEAK_CORE, k).overall
    # uniqueness: no other matrix passes the same axiom system
    assert not check_axioms(m, bumped, InverseKind.WEAK_CORE, k).overall


class TestCharacterization:
    def test_examples(self):
        assert characterize_weak_core(A, weak_core(A).inverse, 2)
        assert not characterize_weak_core(A, Z3, 1)

    def test_drazin_is_generally_not_weak_core(self):
        # counterexample search: the Drazin inverse lacks (6*) whenever it differs
        assert drazin(A) != weak_core(A).inverse
        assert not characterize_weak_core(A, drazin(A), 2)
        assert not check_axioms(A, drazin(A), InverseKind.WEAK_CORE, 2).overall

    @given(structured_matrices(), st.integers(1, 4))
    def test_equivalent_to_axioms(self, m, k):
        candidates = [weak_core(m).inverse, drazin(m), moore_penrose(m), Matrix.zeros(m.rows)]
        for y in candidates:
            assert characterize_weak_core(m, y, k) == check_axioms(m, y, InverseKind.WEAK_CORE, k).overall


class TestConsistencyReport:
    def test_first_example(self):
        rep = consistency_report(A1)
        assert rep.all_pass, rep.failures()
        assert rep.inverses["weak-core"] == A1_WC
        assert rep.inverses["group"] is None

    def test_identity(self):
        rep = consistency_report(I3)
        assert rep.all_pass
        assert all(v == I3 for v in rep.inverses.values())

    def test_nilpotent(self):
        rep = consistency_report(N2)
        assert rep.all_pass
        zero = Matrix.zeros(2)
        # A† of a nilpotent is not zero: for E_12 it is E_21
        assert rep.inverses["mp"] == N2.T
        assert all(v == zero for k, v in rep.inverses.items() if k not in ("group", "core", "mp"))
        assert rep.inverses["group"] is None

    def test_serializes(self):
        d = consistency_report(A).to_dict()
        assert d["drazin_index"] == 2 and d["weak_core_index"] == 2
        assert all(item["holds"] for item in d["identities"])
