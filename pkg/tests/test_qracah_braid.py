from fractions import Fraction

import pytest

from qbr.exactlinalg import QMatrix, inverse
from qbr.qnumbers import QContext, chi
from qbr.qracah_braid import (alpha_table, betasq, betasq_telescoping, build_model,
                              check_addition, check_braid_relation, check_braid_transition,
                              check_diagonalization, check_duality, check_model_invariants,
                              check_n1_closed_forms, check_orthogonality, check_q_inversion,
                              check_recurrence_form, check_s2_entries, describe, gamma, m_const,
                              model_params, palbraid, palrec, racah_R, spins_for_model,
                              sum_gamma_betasq, transition_matrix)

F = Fraction

ALL_CHECKS = (check_model_invariants, check_diagonalization, check_braid_relation,
              check_braid_transition, check_s2_entries, check_orthogonality, check_addition,
              check_recurrence_form, check_q_inversion, check_duality)


@pytest.mark.parametrize("s, l, aN", [
    ("1/2", "1/2", (0, 1)), ("1/2", "3/2", (1, 0)), ("1", "0", (1, 0)), ("1", "1", (0, 2)),
    ("1", "2", (1, 1)), ("1", "3", (2, 0)), ("3/2", "1/2", (1, 1)), ("3/2", "3/2", (0, 3)),
    ("3/2", "9/2", (3, 0)),
])
def test_model_params(s, l, aN):
    assert model_params(s, l) == aN
    assert (F(s), F(l)) in spins_for_model(*aN)


def test_model_params_rejects_absent_spin():
    with pytest.raises(ValueError):
        model_params("1", "1/2")


def test_spins_for_model():
    assert spins_for_model(0, 2) == [(F(1), F(1))]
    assert spins_for_model(1, 1) == [(F(1), F(2)), (F(3, 2), F(1, 2))]
    assert "(a=1, N=1)" in describe(1, 1)


def test_trivial_model(qc):
    m = build_model(2, 0, qc)
    assert m.P == QMatrix([[1]])
    assert m.S1 == m.S2 == QMatrix([[1]])
    assert m.X1 == m.X2 == QMatrix([[chi(2, qc)]])
    assert m.m_q == 1


def test_s1_frozen():
    # a = 0, N = 1, u = 3/5: gamma_1 = -q^2 = -(3/5)^4
    m = build_model(0, 1, QContext(F(3, 5)))
    assert m.S1 == QMatrix.diag([1, F(-81, 625)])


def test_gamma_values(qc):
    q = qc.q
    assert gamma(0, 0, qc) == 1
    assert gamma(0, 1, qc) == -q * q
    assert gamma(1, 2, qc) == q ** 10


def test_m_const_frozen(qc):
    # m_q at (0, 1) is q^6 (1 - q^-2) / (1 - q^4) = -q^4 / (1 + q^2)
    q = qc.q
    assert m_const(0, 1, qc) == -q ** 4 / (1 + q * q)
    m = build_model(0, 1, qc)
    assert sum_gamma_betasq(m) == -(1 + q * q) / q ** 4


def test_n1_closed_forms_alphas(qc):
    # explicit N = 1 coefficients
    q = qc.q
    for a in range(4):
        al = alpha_table(a, 1, qc)
        c = 1 + q ** (2 * a + 2)
        assert al[(0, 1)] == -q ** (-2 * a - 3) * (1 - q * q) * (1 - q ** (6 * a + 6)) / c
        assert al[(1, 0)] == -q ** -1 * (1 - q * q) * (1 - q ** (2 * a + 2)) / c
        assert al[(0, -1)] == 0 and al[(1, 2)] == 0


def test_palbraid_equals_palrec(qc):
    for a in range(4):
        assert palbraid(a, qc) == palrec(a, qc)
        assert check_n1_closed_forms(a, qc).passed


def test_betasq_forms_agree(qc):
    for a in range(3):
        for N in range(5):
            al = alpha_table(a, N, qc)
            assert betasq(a, N, qc) == betasq_telescoping(al, N, qc.one)


def test_first_column_of_p(qc):
    P = transition_matrix(1, 3, qc)
    assert P.column(0) == [1, 1, 1, 1]
    Q = qc.q * qc.q
    assert racah_R(0, 2, 1, 3, Q) == 1


def test_transition_on_one_case():
    qc = QContext(F(5, 9))
    m = build_model(1, 3, qc)
    B = m.S1 @ m.S2 @ m.S1
    assert B == m.P * m.m_q
    assert inverse(B) == m.P * m_const(1, 3, qc.inverted())


@pytest.mark.parametrize("a", range(4))
@pytest.mark.parametrize("N", range(5))
def test_model_checks_small_grid(a, N, qc):
    for check in ALL_CHECKS:
        rep = check(a, N, qc)
        assert rep.passed, str(rep)
        assert rep.residual == 0


def test_float_model_small_case():
    qc = QContext(F(3, 5), "float")
    for check in ALL_CHECKS:
        rep = check(0, 1, qc)
        assert rep.passed, str(rep)
