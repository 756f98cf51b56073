"""Intermediate Casimirs on M_s^(x)3 and their action on multiplicity spaces.

The multiplicity space of spin l is realized as the joint highest weight space

    W_l = { w : D2(E) w = 0, D2(q^H) w = q^l w }

inside M_s^(x)3.  C12 and C23 preserve W_l; restricted to it they become the
pair (X1, X2) of the (a, N) model up to a diagonal change of basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braidedr import braided_r, xi
from .exactlinalg import (QMatrix, inverse, kron, nullspace_with_free, qcommutator,
                          restrict as _restrict, spectral_idempotents)
from .qnumbers import QContext, chi, half, spin_str
from .qracah_braid import build_model, model_params, spins_for_model
from .report import Tally
from .uqsl2rep import decomposition_data, double_rep, spin_rep, triple_rep


class MultiplicityError(AssertionError):
    pass


@dataclass(frozen=True)
class CasimirBundle:
    s: Fraction
    C1: QMatrix
    C2: QMatrix
    C3: QMatrix
    C12: QMatrix
    C23: QMatrix
    C123: QMatrix


@lru_cache(maxsize=None)
def casimir_bundle(s, qc: QContext) -> CasimirBundle:
    s = half(s)
    m = spin_rep(s, qc)
    I = m.identity()
    C = m.casimir()
    C2s = double_rep(s, qc).casimir()
    return CasimirBundle(
        s=s,
        C1=kron(C, I, I),
        C2=kron(I, C, I),
        C3=kron(I, I, C),
        C12=kron(C2s, I),
        C23=kron(I, C2s),
        C123=triple_rep(s, qc).casimir(),
    )


def aw_sides(C1, C2, C3, C12, C23, C123, q):
    """Both sides of the two Askey-Wilson relations, multiplied through by (q - q^-1)^2."""
    d2 = (q - 1 / q) ** 2
    qq = q + 1 / q
    lhs1 = qcommutator(C23, qcommutator(C12, C23, q), q)
    rhs1 = (C12 * (qq * qq) + (C1 @ C3 + C2 @ C123) @ C23 - (C1 @ C2 + C3 @ C123) * qq) * d2
    lhs2 = qcommutator(qcommutator(C12, C23, q), C12, q)
    rhs2 = (C23 * (qq * qq) + (C1 @ C3 + C2 @ C123) @ C12 - (C2 @ C3 + C1 @ C123) * qq) * d2
    return (lhs1, rhs1), (lhs2, rhs2)


def check_aw_relations(s, qc: QContext):
    s = half(s)
    tally = Tally("aw_relations", {"s": spin_str(s)}, qc)
    cb = casimir_bundle(s, qc)
    n = cb.C1.rows
    I = QMatrix.identity(n, one=qc.one)
    cs = chi(s, qc)
    for name, C in (("C1", cb.C1), ("C2", cb.C2), ("C3", cb.C3)):
        tally.compare(f"{name} = chi_s I", C, I * cs)
    tally.compare("[C12, C3] = 0", cb.C12 @ cb.C3, cb.C3 @ cb.C12)
    tally.compare("[C12, C123] = 0", cb.C12 @ cb.C123, cb.C123 @ cb.C12)
    tally.compare("[C23, C123] = 0", cb.C23 @ cb.C123, cb.C123 @ cb.C23)
    (l1, r1), (l2, r2) = aw_sides(cb.C1, cb.C2, cb.C3, cb.C12, cb.C23, cb.C123, qc.q)
    tally.compare("AW1", l1, r1)
    tally.compare("AW2", l2, r2)
    return tally.done()


def check_aw_model(a: int, N: int, qc: QContext):
    """The same relations with C_i -> chi_s, C123 -> chi_l, C12 -> X1, C23 -> X2."""
    tally = Tally("aw_model", {"a": a, "N": N}, qc)
    m = build_model(a, N, qc)
    I = m.identity()
    for s, l in spins_for_model(a, N):
        Cs, Cl = I * chi(s, qc), I * chi(l, qc)
        (l1, r1), (l2, r2) = aw_sides(Cs, Cs, Cs, m.X1, m.X2, Cl, qc.q)
        tag = f"s={spin_str(s)},l={spin_str(l)}"
        tally.compare(f"AW1 {tag}", l1, r1)
        tally.compare(f"AW2 {tag}", l2, r2)
    return tally.done()


def check_centralizer_membership(s, qc: QContext):
    """[D2(x), M] = 0 for x in E, F, K and M in C12, C23, C123, Rcheck_1, Rcheck_2."""
    s = half(s)
    tally = Tally("centralizer_membership", {"s": spin_str(s)}, qc)
    cb = casimir_bundle(s, qc)
    R1, R2 = _braided_legs(s, qc)
    rep = triple_rep(s, qc)
    for g in ("E", "F", "K"):
        D = rep.gen(g)
        for name, M in (("C1", cb.C1), ("C12", cb.C12), ("C23", cb.C23),
                        ("C123", cb.C123), ("R1", R1), ("R2", R2)):
            tally.compare(f"[D2({g}), {name}]", D @ M, M @ D)
    return tally.done()


@lru_cache(maxsize=None)
def _braided_legs(s, qc: QContext):
    Rc = braided_r(s, qc).Rcheck
    I = spin_rep(s, qc).identity()
    return kron(Rc, I), kron(I, Rc)


@dataclass(frozen=True)
class MultiplicitySpace:
    s: Fraction
    l: Fraction
    basis: QMatrix  # columns span W_l
    rows: tuple  # coordinates in which the basis is the identity

    @property
    def dim(self) -> int:
        return self.basis.cols


def _weight_indices(s: Fraction, weight: Fraction) -> list[int]:
    n = int(2 * s) + 1
    out = []
    for i1 in range(n):
        for i2 in range(n):
            for i3 in range(n):
                if 3 * s - (i1 + i2 + i3) == weight:
                    out.append((i1 * n + i2) * n + i3)
    return out


@lru_cache(maxsize=None)
def multiplicity_space(s, l, qc: QContext) -> MultiplicitySpace:
    s, l = half(s), half(l)
    table = decomposition_data(s)
    if l not in table.spins:
        raise ValueError(f"spin {l} does not occur in M_{s}^(x)3")
    E = triple_rep(s, qc).E
    cols = _weight_indices(s, l)
    rows = _weight_indices(s, l + 1)
    size = E.rows
    if rows:
        kernel, free = nullspace_with_free(E.submatrix(rows, cols))
    else:
        free = list(range(len(cols)))
        kernel = [[qc.one if i == k else qc.zero for i in range(len(cols))] for k in free]
    if len(kernel) != table.degeneracy[l]:
        raise MultiplicityError(
            f"dim W_{l} = {len(kernel)} but the degeneracy is {table.degeneracy[l]}")
    full = []
    for v in kernel:
        w = [qc.zero] * size
        for c, x in zip(cols, v):
            w[c] = x
        full.append(w)
    # the basis restricted to the free coordinates is the identity
    return MultiplicitySpace(s=s, l=l, basis=QMatrix.from_columns(full),
                             rows=tuple(cols[f] for f in free))


def restrict(op: QMatrix, W: MultiplicitySpace) -> QMatrix:
    """Matrix M with op @ basis = basis @ M."""
    return _restrict(op, W.basis, W.rows)


def _eigencolumn(E: QMatrix) -> list:
    """A nonzero column of a rank-one idempotent."""
    norms = [max(abs(v) for v in E.column(j)) for j in range(E.cols)]
    j = max(range(E.cols), key=lambda k: norms[k])
    return E.column(j)


@dataclass(frozen=True)
class RestrictedPair:
    s: Fraction
    l: Fraction
    a: int
    N: int
    D1: QMatrix  # C12 in its eigenbasis, ascending chi_(a+j)
    T2: QMatrix  # C23 in the same basis
    V: QMatrix  # eigenbasis, in coordinates of the W_l basis
    aligned: QMatrix  # V rescaled so that C23 becomes exactly X2


@lru_cache(maxsize=None)
def restricted_data(s, l, qc: QContext) -> RestrictedPair:
    s, l = half(s), half(l)
    a, N = model_params(s, l)
    W = multiplicity_space(s, l, qc)
    cb = casimir_bundle(s, qc)
    M12, M23 = restrict(cb.C12, W), restrict(cb.C23, W)
    eig = [chi(a + j, qc) for j in range(N + 1)]
    idem = spectral_idempotents(M12, eig)
    V = QMatrix.from_columns([_eigencolumn(E) for E in idem])
    Vi = inverse(V)
    D1, T2 = Vi @ M12 @ V, Vi @ M23 @ V
    X2 = build_model(a, N, qc).X2
    lam = [qc.one]
    for j in range(N):
        lam.append(lam[-1] * X2[j, j + 1] / T2[j, j + 1])
    aligned = V @ QMatrix.diag(lam)
    return RestrictedPair(s, l, a, N, D1, T2, V, aligned)


def restricted_pair(s, l, qc: QContext) -> tuple[QMatrix, QMatrix]:
    rp = restricted_data(s, l, qc)
    return rp.D1, rp.T2


def check_multiplicity(s, qc: QContext):
    """dim W_l = d_l for every l, and D2(E) w = 0, D2(K) w = q^l w on the basis."""
    s = half(s)
    tally = Tally("multiplicity", {"s": spin_str(s)}, qc)
    table = decomposition_data(s)
    rep = triple_rep(s, qc)
    for l in table.spins:
        W = multiplicity_space(s, l, qc)
        tally.require(f"dim W_{l}", W.dim == table.degeneracy[l])
        zero = [qc.zero] * rep.dim
        for k in range(W.dim):
            w = W.basis.column(k)
            tally.compare(f"D2(E) w_{k} (l={l})", rep.E @ w, zero,
                          scale=rep.E.max_abs() * max(abs(x) for x in w))
            tally.compare(f"D2(K) w_{k} (l={l})", rep.K @ w, [x * qc.qpow(l) for x in w])
    return tally.done()


def check_restricted_pair(s, l, qc: QContext):
    s, l = half(s), half(l)
    tally = Tally("restricted_pair", {"s": spin_str(s), "l": spin_str(l)}, qc)
    rp = restricted_data(s, l, qc)
    m = build_model(rp.a, rp.N, qc)
    n = rp.N + 1
    tally.compare("D1 = X1", rp.D1, m.X1)
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1:
                tally.compare(f"T2[{i},{j}] = 0", rp.T2[i, j], qc.zero, scale=rp.T2.max_abs())
    for j in range(n):
        tally.compare(f"T2[{j},{j}] = alpha_jj", rp.T2[j, j], m.alpha[(j, j)])
    for j in range(rp.N):
        tally.compare(f"T2 pair product {j}", rp.T2[j, j + 1] * rp.T2[j + 1, j],
                      m.alpha[(j, j + 1)] * m.alpha[(j + 1, j)])
    W = multiplicity_space(s, l, qc)
    cb = casimir_bundle(s, qc)
    A = rp.aligned
    tally.compare("aligned C23 = X2", inverse(A) @ restrict(cb.C23, W) @ A, m.X2)
    # both restrictions have spectrum {chi_(a+j)}
    I = m.identity()
    for name, X in (("C12", rp.D1), ("C23", rp.T2)):
        prod = I
        for e in m.eigenvalues:
            prod = prod @ (X - I * e)
        tally.compare(f"minimal polynomial of {name}|W", prod,
                      QMatrix.zeros(n, zero=qc.zero), scale=X.max_abs() ** n)
    return tally.done()


def kappa(s, a: int, qc: QContext):
    """(-1)^(2s+a) q^(a(a+1) - 2s(s+1)); equals xi_(a+r) / gamma_r for every r."""
    s = half(s)
    return (-1) ** (int(2 * s) + a) * qc.qpow(a * (a + 1) - 2 * s * (s + 1))


def check_rcheck_vs_S(s, l, qc: QContext):
    """Rcheck_i restricted to W_l equals kappa S_i."""
    s, l = half(s), half(l)
    tally = Tally("rcheck_vs_S", {"s": spin_str(s), "l": spin_str(l)}, qc)
    rp = restricted_data(s, l, qc)
    m = build_model(rp.a, rp.N, qc)
    k = kappa(s, rp.a, qc)
    for r in range(rp.N + 1):
        tally.compare(f"xi_(a+{r}) / gamma_{r} = kappa", xi(s, rp.a + r, qc) / m.gamma[r], k)
    W = multiplicity_space(s, l, qc)
    R1, R2 = _braided_legs(s, qc)
    A = rp.aligned
    Ai = inverse(A)
    T1, T2 = Ai @ restrict(R1, W) @ A, Ai @ restrict(R2, W) @ A
    tally.compare("Rcheck_1|W = kappa S1", T1, m.S1 * k)
    tally.compare("Rcheck_2|W = kappa S2", T2, m.S2 * k)
    tally.compare("braid relation on W", T1 @ T2 @ T1, T2 @ T1 @ T2)
    # scaling-invariant comparison in the unaligned eigenbasis
    Vi = inverse(rp.V)
    U2 = Vi @ restrict(R2, W) @ rp.V
    n = rp.N + 1
    for i in range(n):
        tally.compare(f"diag {i}", U2[i, i], m.S2[i, i] * k)
        for j in range(i + 1, n):
            tally.compare(f"pair ({i},{j})", U2[i, j] * U2[j, i],
                          m.S2[i, j] * m.S2[j, i] * k * k)
    return tally.done()


def check_centralizer_suite(s, qc: QContext):
    """Everything above for one spin s and all l in J_s."""
    s = half(s)
    tally = Tally("centralizer", {"s": spin_str(s)}, qc)
    tally.merge(check_aw_relations(s, qc))
    tally.merge(check_centralizer_membership(s, qc))
    tally.merge(check_multiplicity(s, qc))
    for l in decomposition_data(s).spins:
        tally.merge(check_restricted_pair(s, l, qc), f"l={l}: ")
        tally.merge(check_rcheck_vs_S(s, l, qc), f"l={l}: ")
    return tally.done()
