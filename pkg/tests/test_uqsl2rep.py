from fractions import Fraction

import pytest

from qbr.exactlinalg import QMatrix
from qbr.qnumbers import QContext, chi, qnumber
from qbr.uqsl2rep import (check_EnFk, check_EnFk_all, check_coassociativity,
                          check_omega_plus, check_representation, check_tensor_spectrum,
                          coproduct2_rep, coproduct_rep, decomposition_data, degeneracy,
                          double_rep, omega_plus, spin_rep, triple_rep)

F = Fraction
SPINS = ("0", "1/2", "1", "3/2")


def test_spin_half_matrices(qc35):
    m = spin_rep("0.5", qc35)
    q = qc35.q
    assert m.E == QMatrix([[0, 1], [0, 0]])
    assert m.F == QMatrix([[0, 0], [1, 0]])
    assert m.K == QMatrix.diag([qc35.base, 1 / qc35.base])
    assert m.casimir() == QMatrix.identity(2) * (q * q + 1 / (q * q))


def test_spin_one_raising_entries(qc35):
    m = spin_rep(1, qc35)
    two = qnumber(2, qc35)
    # E w_1 = [1][2] w_0, E w_2 = [2][1] w_1
    assert m.E[0, 1] == two and m.E[1, 2] == two
    assert m.dim == 3


def test_negative_spin_rejected(qc35):
    with pytest.raises(ValueError):
        spin_rep("-0.5", qc35)


def test_tensor_is_coproduct(qc35):
    m = spin_rep("0.5", qc35)
    D = double_rep("0.5", qc35)
    assert coproduct_rep(m, m, "E") == D.E
    assert coproduct2_rep(m, "K") == triple_rep("0.5", qc35).K


def test_bracketings_agree_for_any_matrices(qc35):
    # the two bracketings of D^(2) agree formally, even when E, F, K satisfy no relation
    m = spin_rep("0.5", qc35)
    junk = type(m)(E=m.E + m.F, F=m.K, K=m.E * 3, Kinv=m.Kinv * 2, qc=qc35, j=m.j)
    for g in ("E", "F", "K", "Kinv"):
        coproduct2_rep(junk, g)


@pytest.mark.parametrize("s, table", [
    ("0", {F(0): 1}),
    ("1/2", {F(1, 2): 2, F(3, 2): 1}),
    ("1", {F(0): 1, F(1): 3, F(2): 2, F(3): 1}),
    ("3/2", {F(1, 2): 2, F(3, 2): 4, F(5, 2): 3, F(7, 2): 2, F(9, 2): 1}),
])
def test_decomposition_tables(s, table):
    # counted by hand from Clebsch-Gordan: M_s (x) M_s (x) M_s
    d = decomposition_data(s)
    assert d.degeneracy == table
    assert d.total_dim == int(2 * F(s) + 1) ** 3


def test_degeneracy_formula():
    assert degeneracy(2, 0) == 1
    assert degeneracy(2, 3) == 4
    assert degeneracy(2, 2) == 5
    assert degeneracy(2, 6) == 1


@pytest.mark.parametrize("s", SPINS)
def test_representation_suite(s, qc):
    for check in (check_representation, check_coassociativity, check_tensor_spectrum,
                  check_omega_plus, check_EnFk_all):
        rep = check(s, qc)
        assert rep.passed, str(rep)
        assert rep.residual == 0


def test_omega_plus_spin_half(qc35):
    # r = 0: the q-singlet w0 (x) w1 - q w1 (x) w0 up to the factor [1]! [0]! = 1
    q = qc35.q
    assert omega_plus("0.5", 0, qc35) == [0, 1, -q, 0]
    assert omega_plus("0.5", 1, qc35) == [1, 0, 0, 0]


def test_omega_ratio_frozen(qc35):
    # rho_1 / rho_0 = -q for s = 1/2, r = 0
    w = omega_plus("0.5", 0, qc35)
    assert w[2] / w[1] == -qc35.q


def test_casimir_on_omega(qc35):
    D = double_rep(1, qc35)
    for r in range(3):
        w = omega_plus(1, r, qc35)
        assert D.casimir() @ w == [v * chi(r, qc35) for v in w]


def test_EnFk_range(qc35):
    with pytest.raises(ValueError):
        check_EnFk(1, 2, 1, qc35)
    assert check_EnFk(1, 1, 2, qc35).passed


def test_float_mode_relations():
    qc = QContext(F(3, 5), "float")
    rep = check_representation("3/2", qc)
    assert rep.passed and rep.residual < 1e-12
