from fractions import Fraction

import pytest

from qbr.braidedr import xi
from qbr.centralizer import (casimir_bundle, check_aw_model, check_aw_relations,
                             check_centralizer_membership, check_multiplicity,
                             check_rcheck_vs_S, check_restricted_pair, kappa,
                             multiplicity_space, restrict, restricted_pair)
from qbr.exactlinalg import QMatrix
from qbr.qnumbers import chi
from qbr.qracah_braid import build_model
from qbr.uqsl2rep import decomposition_data, triple_rep

F = Fraction


def test_kappa_matches_xi(qc):
    # at a = 0 the constant is xi_0 itself
    assert kappa("0.5", 0, qc) == xi("0.5", 0, qc) == -qc.base ** -3
    assert kappa(1, 1, qc) == xi(1, 1, qc)


@pytest.mark.parametrize("s", ["0", "1/2", "1"])
def test_multiplicity_dimensions(s, qc):
    table = decomposition_data(s)
    for l in table.spins:
        W = multiplicity_space(s, l, qc)
        assert W.dim == table.degeneracy[l]
        # the basis is the identity on its chosen coordinates
        sub = W.basis.submatrix(list(W.rows), range(W.dim))
        assert sub == QMatrix.identity(W.dim)


def test_casimirs_preserve_w(qc35):
    s, l = F(1), F(1)
    W = multiplicity_space(s, l, qc35)
    cb = casimir_bundle(s, qc35)
    for C in (cb.C12, cb.C23):
        M = restrict(C, W)
        assert C @ W.basis == W.basis @ M
    assert restrict(cb.C123, W) == QMatrix.identity(3) * chi(l, qc35)


def test_restricted_pair_spin_half(qc):
    D1, T2 = restricted_pair("1/2", "1/2", qc)
    m = build_model(0, 1, qc)
    assert D1 == m.X1
    assert T2[0, 0] == m.X2[0, 0] and T2[1, 1] == m.X2[1, 1]
    assert T2[0, 1] * T2[1, 0] == m.X2[0, 1] * m.X2[1, 0]


@pytest.mark.parametrize("s", ["0", "1/2", "1"])
def test_centralizer_suite(s, qc):
    for check in (check_aw_relations, check_centralizer_membership, check_multiplicity):
        rep = check(s, qc)
        assert rep.passed, str(rep)
    for l in decomposition_data(s).spins:
        for check in (check_restricted_pair, check_rcheck_vs_S):
            rep = check(s, l, qc)
            assert rep.passed, str(rep)
            assert rep.residual == 0


@pytest.mark.parametrize("a, N", [(0, 0), (0, 3), (1, 2), (3, 6)])
def test_aw_model(a, N, qc):
    rep = check_aw_model(a, N, qc)
    assert rep.passed, str(rep)


def test_triple_dimension(qc35):
    assert triple_rep(1, qc35).dim == 27
