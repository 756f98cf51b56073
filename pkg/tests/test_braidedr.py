from fractions import Fraction

import pytest

from qbr.braidedr import (braided_r, check_intertwining, check_spectral_decomposition, check_ybe,
                          swap, universal_r_rep, xi)
from qbr.exactlinalg import QMatrix, rank
from qbr.qnumbers import QContext
from qbr.uqsl2rep import omega_plus

F = Fraction


def hand_r_half(qc):
    """Spin-1/2 R-matrix worked out by hand from the series.

    q^(2 H(x)H) is q^(1/2) on equal weights and q^(-1/2) otherwise; the only
    n = 1 contribution maps w1 (x) w0 to (q - q^-1) q^(-1/2) w0 (x) w1.
    """
    q, u = qc.q, qc.base
    R = [[0] * 4 for _ in range(4)]
    R[0][0] = R[3][3] = u
    R[1][1] = R[2][2] = 1 / u
    R[1][2] = (q - 1 / q) / u
    return QMatrix(R)


def test_spin_half_r_matrix_by_hand(qc):
    assert universal_r_rep("0.5", qc) == hand_r_half(qc)


def test_spin_half_eigenvalues(qc):
    # xi_0 = -q^(-3/2) on the singlet, xi_1 = q^(1/2) on the triplet
    u = qc.base
    assert xi("0.5", 0, qc) == -u ** -3
    assert xi("0.5", 1, qc) == u
    br = braided_r("0.5", qc)
    I = QMatrix.identity(4)
    assert (br.Rcheck - I * u) @ (br.Rcheck + I * u ** -3) == QMatrix.zeros(4)
    assert rank(br.Rcheck - I * u) == 1


def test_swap_is_involution():
    s = swap(1)
    assert s @ s == QMatrix.identity(9)
    assert s[1, 3] == 1 and s[3, 1] == 1


def test_spin_zero_trivial(qc):
    br = braided_r(0, qc)
    assert br.Rcheck == QMatrix([[qc.base ** 0]])
    assert br.xi == (1,)


@pytest.mark.parametrize("s", ["0", "1/2", "1", "3/2"])
def test_r_matrix_suite(s, qc):
    for check in (check_intertwining, check_ybe, check_spectral_decomposition):
        rep = check(s, qc)
        assert rep.passed, str(rep)
        assert rep.residual == 0


def test_projector_ranks(qc35):
    br = braided_r(1, qc35)
    assert [rank(P) for P in br.projectors] == [1, 3, 5]
    for r, P in enumerate(br.projectors):
        w = omega_plus(1, r, qc35)
        assert P @ w == w


def test_inverse_q_gives_inverse_rcheck():
    # replacing q by 1/q inverts the eigenvalues on each summand
    qc = QContext(F(2, 7))
    assert [1 / x for x in braided_r(1, qc).xi] == list(braided_r(1, qc.inverted()).xi)
