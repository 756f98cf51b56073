"""The (a, N) model of the centralizer: X1, X2, braid matrices and q-Racah transition matrix.

For a multiplicity space V_l of M_s^(x)3 one sets a = |s - l| and
N = dim V_l - 1.  On V_l the two intermediate Casimirs act as the diagonal
matrix X1 = diag(chi_(a+j)) and the tridiagonal matrix X2 whose entries are
the recurrence coefficients alpha_(i,j) of q-Racah polynomials.  S1, S2 are
the braid matrices obtained from X1, X2 by the Lagrange idempotents, and P is
the transition matrix with entries beta_j^2 R_i(mu(j)).

Everything here is defined for arbitrary nonnegative (a, N).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactlinalg import QMatrix, inverse, spectral_idempotents
from .qnumbers import (QContext, QRacahParams, chi, half, phi, qpochhammer,
                       qracah, spin_str)
from .report import Tally
from .uqsl2rep import decomposition_data


def model_params(s, l) -> tuple[int, int]:
    """(a, N) = (|s - l|, min(2s, s + l) - |s - l|)."""
    s, l = half(s), half(l)
    if l not in decomposition_data(s).spins:
        raise ValueError(f"spin {l} does not occur in M_{s}^(x)3")
    a = abs(s - l)
    N = min(2 * s, s + l) - a
    return int(a), int(N)


def spins_for_model(a: int, N: int) -> list[tuple[Fraction, Fraction]]:
    """All (s, l) with model_params(s, l) == (a, N)."""
    out = [(Fraction(a + N, 2), Fraction(3 * a + N, 2))]
    if a > 0:
        out.append((Fraction(2 * a + N, 2), Fraction(N, 2)))
    return out


def _f(qc, e):
    """1 - q^e."""
    return 1 - qc.qpow(e)


def alpha_up(j: int, a: int, N: int, qc: QContext):
    """alpha_(j-1, j)."""
    return (qc.qpow(-2 * a - 1)
            * _f(qc, 2 * (j + a)) * _f(qc, 2 * (j + 2 * a))
            * _f(qc, 2 * (j - N - 1)) * _f(qc, 2 * (j + 3 * a + N + 1))
            / (_f(qc, 2 * (2 * j + 2 * a - 1)) * _f(qc, 2 * (2 * j + 2 * a))))


def alpha_down(j: int, a: int, N: int, qc: QContext):
    """alpha_(j, j-1)."""
    return (qc.qpow(2 * a + 1)
            * _f(qc, 2 * (j + a)) * _f(qc, 2 * j)
            * _f(qc, 2 * (j + 2 * a + N + 1)) * _f(qc, 2 * (j - a - N - 1))
            / (_f(qc, 2 * (2 * j + 2 * a)) * _f(qc, 2 * (2 * j + 2 * a + 1))))


def alpha_table(a: int, N: int, qc: QContext) -> dict:
    """alpha_(i,j) for |i - j| <= 1, with alpha_(0,-1) = alpha_(N,N+1) = 0."""
    al = {(0, -1): qc.zero, (N, N + 1): qc.zero}
    for j in range(1, N + 1):
        al[(j - 1, j)] = alpha_up(j, a, N, qc)
        al[(j, j - 1)] = alpha_down(j, a, N, qc)
    ca = chi(a, qc)
    for j in range(N + 1):
        al[(j, j)] = ca - (al[(j, j + 1)] + al[(j, j - 1)])
    return al


def betasq(a: int, N: int, qc: QContext) -> list:
    """beta_j^2 in closed form (products of q^2-shifted factorials)."""
    q2 = qc.q * qc.q
    top = (qc.qpow(2 * a + 3), -qc.qpow(2 * a + 3), qc.qpow(2 * (2 * a + 1)),
           qc.qpow(2 * (3 * a + N + 2)), qc.qpow(-2 * N))
    bot = (q2, qc.qpow(2 * a + 1), -qc.qpow(2 * a + 1), qc.qpow(-2 * (a + N)),
           qc.qpow(2 * (2 * a + N + 2)))
    return [qc.qpow(-2 * j * (2 * a + 1)) * qpochhammer(top, q2, j) / qpochhammer(bot, q2, j)
            for j in range(N + 1)]


def betasq_telescoping(alpha: dict, N: int, one) -> list:
    """beta_j^2 = prod_(k<=j) alpha_(k-1,k) / alpha_(k,k-1)."""
    out = [one]
    for k in range(1, N + 1):
        out.append(out[-1] * alpha[(k - 1, k)] / alpha[(k, k - 1)])
    return out


def gamma(a: int, r: int, qc: QContext):
    """(-1)^r q^(r(r+2a+1)), the eigenvalue of S_i on the r-th idempotent."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return (-1) ** r * qc.qpow(r * (r + 2 * a + 1))


def m_const(a: int, N: int, qc: QContext):
    """m_q = q^(2N(3a+N+2)) (q^(-2(a+N)); q^2)_N / (q^(4(a+1)); q^2)_N."""
    q2 = qc.q * qc.q
    return (qc.qpow(2 * N * (3 * a + N + 2)) * qpochhammer(qc.qpow(-2 * (a + N)), q2, N)
            / qpochhammer(qc.qpow(4 * (a + 1)), q2, N))


def racah_R(i: int, j: int, a: int, N: int, Q):
    """R_i(mu(j); Q^a, Q^a, Q^(3a+N+1), Q^(-a-N-1) | Q)."""
    return qracah(QRacahParams(n=i, x=j, alpha=Q ** a, beta=Q ** a,
                               gamma=Q ** (3 * a + N + 1), delta=Q ** (-a - N - 1),
                               q=Q, N=N))


def racah_R_4phi3(i: int, j: int, a: int, N: int, Q):
    """The same polynomial written directly as the balanced 4phi3."""
    upper = (Q ** (-i), Q ** (2 * a + 1 + i), Q ** (-j), Q ** (2 * a + 1 + j))
    lower = (Q ** (a + 1), Q ** (-N), Q ** (3 * a + N + 2))
    return phi(upper, lower, Q, Q, terms=min(i, j))


def transition_matrix(a: int, N: int, qc: QContext) -> QMatrix:
    Q = qc.q * qc.q
    b2 = betasq(a, N, qc)
    return QMatrix([[b2[j] * racah_R(i, j, a, N, Q) for j in range(N + 1)]
                    for i in range(N + 1)])


@dataclass(frozen=True)
class ModelRep:
    a: int
    N: int
    qc: QContext
    alpha: dict
    X1: QMatrix
    X2: QMatrix
    betasq: tuple
    gamma: tuple
    eigenvalues: tuple
    E1: tuple  # idempotents of X1
    E2: tuple  # idempotents of X2
    S1: QMatrix
    S2: QMatrix
    P: QMatrix
    m_q: object

    @property
    def size(self) -> int:
        return self.N + 1

    def identity(self) -> QMatrix:
        return QMatrix.identity(self.size, one=self.qc.one)


def braid_matrix(X: QMatrix, eigenvalues, gammas) -> tuple[QMatrix, list[QMatrix]]:
    """S = sum_r gamma_r E^(r) with E^(r) the Lagrange idempotents of X."""
    idem = spectral_idempotents(X, eigenvalues)
    S = idem[0] * gammas[0]
    for g, E in zip(gammas[1:], idem[1:]):
        S = S + E * g
    return S, idem


@lru_cache(maxsize=None)
def build_model(a: int, N: int, qc: QContext) -> ModelRep:
    if a < 0 or N < 0:
        raise ValueError("a and N must be nonnegative")
    al = alpha_table(a, N, qc)
    n = N + 1
    eig = [chi(a + j, qc) for j in range(n)]
    X1 = QMatrix.diag(eig)
    zero = qc.zero
    X2 = QMatrix([[al.get((i, j), zero) if abs(i - j) <= 1 else zero for j in range(n)]
                  for i in range(n)])
    gam = [gamma(a, r, qc) for r in range(n)]
    S1, E1 = braid_matrix(X1, eig, gam)
    S2, E2 = braid_matrix(X2, eig, gam)
    return ModelRep(a=a, N=N, qc=qc, alpha=al, X1=X1, X2=X2,
                    betasq=tuple(betasq(a, N, qc)), gamma=tuple(gam),
                    eigenvalues=tuple(eig), E1=tuple(E1), E2=tuple(E2),
                    S1=S1, S2=S2, P=transition_matrix(a, N, qc), m_q=m_const(a, N, qc))


def _params(a, N):
    return {"a": a, "N": N}


def check_model_invariants(a: int, N: int, qc: QContext):
    """Boundary values, row sums, traces, beta^2 forms, symmetrizability, idempotent axioms."""
    tally = Tally("model_invariants", _params(a, N), qc)
    m = build_model(a, N, qc)
    al = m.alpha
    tally.compare("alpha_(N,N+1) formula", alpha_up(N + 1, a, N, qc), qc.zero)
    if a > 0:
        # at a = 0 the j = 0 formula is 0/0; the boundary value is then a convention
        tally.compare("alpha_(0,-1) formula", alpha_down(0, a, N, qc), qc.zero)
    ca = chi(a, qc)
    for i in range(N + 1):
        tally.compare(f"row sum {i}", sum(m.X2.data[i]), ca)
    tally.compare("trace X2 = trace X1", m.X2.trace(), m.X1.trace())
    tally.compare("trace X1 = sum chi", m.X1.trace(), sum(m.eigenvalues))
    tally.compare("beta_0^2 = 1", m.betasq[0], qc.one)
    tally.compare("beta^2 closed = telescoping", list(m.betasq),
                  betasq_telescoping(al, N, qc.one))
    for i in range(N):
        tally.compare(f"beta^2 symmetry {i}", m.betasq[i] * al[(i, i + 1)],
                      m.betasq[i + 1] * al[(i + 1, i)])
    I = m.identity()
    for name, X, idem in (("X1", m.X1, m.E1), ("X2", m.X2, m.E2)):
        total = idem[0]
        for E in idem[1:]:
            total = total + E
        tally.compare(f"sum E({name}) = I", total, I)
        for r, Er in enumerate(idem):
            for p, Ep in enumerate(idem):
                want = Er if r == p else QMatrix.zeros(N + 1, zero=qc.zero)
                tally.compare(f"E{r}E{p} ({name})", Er @ Ep, want, scale=Er.max_abs())
            tally.compare(f"E{r}{name} = chi E{r}", Er @ X, Er * m.eigenvalues[r])
            tally.compare(f"{name}E{r} = chi E{r}", X @ Er, Er * m.eigenvalues[r])
    tally.compare("S1 diagonal gamma", m.S1, QMatrix.diag(m.gamma))
    inv1 = m.E1[0] * (1 / m.gamma[0])
    inv2 = m.E2[0] * (1 / m.gamma[0])
    for g, E1, E2 in zip(m.gamma[1:], m.E1[1:], m.E2[1:]):
        inv1 = inv1 + E1 * (1 / g)
        inv2 = inv2 + E2 * (1 / g)
    tally.compare("S1^-1 = sum gamma^-1 E", inverse(m.S1), inv1)
    tally.compare("S2^-1 = sum gamma^-1 E", inverse(m.S2), inv2)
    return tally.done()


def check_diagonalization(a: int, N: int, qc: QContext):
    """X2 P = P X1, P invertible, first column of P all ones."""
    tally = Tally("diagonalization", _params(a, N), qc)
    m = build_model(a, N, qc)
    tally.compare("X2 P = P X1", m.X2 @ m.P, m.P @ m.X1)
    Pinv = inverse(m.P)
    tally.compare("P P^-1 = I", m.P @ Pinv, m.identity())
    tally.compare("P X1 P^-1 = X2", m.P @ m.X1 @ Pinv, m.X2)
    tally.compare("trace P X1 P^-1", (m.P @ m.X1 @ Pinv).trace(), m.X1.trace())
    tally.compare("column 0 of P", m.P.column(0), [qc.one] * (N + 1))
    # the recurrence, column by column
    for j in range(N + 1):
        col = m.P.column(j)
        tally.compare(f"recurrence column {j}", m.X2 @ col, [v * m.eigenvalues[j] for v in col])
    return tally.done()


def check_braid_relation(a: int, N: int, qc: QContext):
    """Braid relation and the two conjugations carrying X1 to X2."""
    tally = Tally("braid_relation", _params(a, N), qc)
    m = build_model(a, N, qc)
    S1, S2 = m.S1, m.S2
    S1i, S2i = inverse(S1), inverse(S2)
    tally.compare("S1S2S1 = S2S1S2", S1 @ S2 @ S1, S2 @ S1 @ S2)
    A = S1 @ S2 @ m.X1 @ S2i @ S1i
    B = S1i @ S2i @ m.X1 @ S2 @ S1
    tally.compare("X2 = S1S2 X1 (S1S2)^-1", A, m.X2)
    tally.compare("X2 = (S2S1)^-1 X1 S2S1", B, m.X2)
    tally.compare("trace of conjugation", A.trace(), m.X1.trace())
    return tally.done()


def sum_gamma_betasq(m: ModelRep):
    return sum(b / g for g, b in zip(m.gamma, m.betasq))


def sum_gamma_betasq_6phi4(a: int, N: int, qc: QContext):
    """sum_r gamma_r^-1 beta_r^2 written as a terminating 6phi4 in base q^2."""
    Q = qc.q * qc.q
    up = (qc.qpow(2 * a + 3), -qc.qpow(2 * a + 3), qc.qpow(2 * (2 * a + 1)),
          qc.qpow(2 * (3 * a + N + 2)), qc.zero, qc.qpow(-2 * N))
    lo = (qc.qpow(2 * a + 1), -qc.qpow(2 * a + 1), qc.qpow(-2 * (a + N)),
          qc.qpow(2 * (2 * a + N + 2)))
    return phi(up, lo, Q, qc.qpow(-2 * (3 * a + 2)), terms=N)


def check_braid_transition(a: int, N: int, qc: QContext):
    """S1S2S1 = m_q P, (S1S2S1)^-1 = m_(1/q) P, and both forms of m_q."""
    tally = Tally("braid_transition", _params(a, N), qc)
    m = build_model(a, N, qc)
    B = m.S1 @ m.S2 @ m.S1
    tally.compare("S1S2S1 = m_q P", B, m.P * m.m_q)
    m_inv = m_const(a, N, qc.inverted())
    tally.compare("(S1S2S1)^-1 = m_(1/q) P", inverse(B), m.P * m_inv)
    sgb = sum_gamma_betasq(m)
    tally.compare("m_q = 1/sum gamma^-1 beta^2", m.m_q, 1 / sgb)
    tally.compare("sum gamma^-1 beta^2 as 6phi4", sgb, sum_gamma_betasq_6phi4(a, N, qc))
    return tally.done()


def check_s2_entries(a: int, N: int, qc: QContext):
    """(S2)_ij = m_q gamma_i^-1 gamma_j^-1 beta_j^2 R_i(mu(j)) and the braid relation it implies."""
    tally = Tally("s2_entries", _params(a, N), qc)
    m = build_model(a, N, qc)
    Q = qc.q * qc.q
    n = N + 1
    S2 = QMatrix([[m.m_q / (m.gamma[i] * m.gamma[j]) * m.betasq[j] * racah_R(i, j, a, N, Q)
                   for j in range(n)] for i in range(n)])
    tally.compare("S2 entries", S2, m.S2)
    tally.compare("braid relation with S2 entries", m.S1 @ S2 @ m.S1, S2 @ m.S1 @ S2)
    return tally.done()


def orthogonality_weight(k: int, a: int, N: int, Q):
    return ((1 - Q ** (2 * a + 1 + 2 * k)) / (Q ** (k * (2 * a + 1)) * (1 - Q ** (2 * a + 1)))
            * qpochhammer((Q ** (2 * a + 1), Q ** (3 * a + N + 2), Q ** (-N)), Q, k)
            / qpochhammer((Q, Q ** (-(a + N)), Q ** (2 * a + N + 2)), Q, k))


def orthogonality_norm(i: int, a: int, N: int, Q):
    const = (qpochhammer((Q ** (2 * a + 2), Q ** (-2 * a - N - 1)), Q, N)
             / qpochhammer((Q ** (-a - N), Q ** (a + 1)), Q, N))
    return (const * Q ** (i * (2 * a + 1)) * (1 - Q ** (2 * a + 1)) / (1 - Q ** (2 * a + 1 + 2 * i))
            * qpochhammer((Q, Q ** (-a - N), Q ** (2 * a + N + 2)), Q, i)
            / qpochhammer((Q ** (2 * a + 1), Q ** (3 * a + N + 2), Q ** (-N)), Q, i))


def _bases(qc: QContext):
    """Series bases on which the normalized formulas are checked.

    Base q is the formula read in the square-root variable; base q^2 is the
    one in which the polynomials coincide with the entries of P.
    """
    q = qc.q
    return (("q", q), ("q^2", q * q))


def check_orthogonality(a: int, N: int, qc: QContext):
    tally = Tally("orthogonality", _params(a, N), qc)
    m = build_model(a, N, qc)
    mm = m.m_q * m_const(a, N, qc.inverted())
    tally.compare("m_q m_(1/q) P^2 = I", (m.P @ m.P) * mm, m.identity())
    n = N + 1
    for tag, Q in _bases(qc):
        R = [[racah_R(i, k, a, N, Q) for k in range(n)] for i in range(n)]
        w = [orthogonality_weight(k, a, N, Q) for k in range(n)]
        for i in range(n):
            h = orthogonality_norm(i, a, N, Q)
            for j in range(n):
                terms = [w[k] * R[i][k] * R[j][k] for k in range(n)]
                lhs = sum(terms)
                rhs = h if i == j else qc.zero
                scale = max(abs(t) for t in terms)
                tally.compare(f"[{tag}] orth({i},{j})", lhs, rhs, scale=scale)
        if tag == "q^2":
            tally.compare("R(q^2) = P / beta^2", R,
                          [[m.P[i, k] / m.betasq[k] for k in range(n)] for i in range(n)])
    return tally.done()


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def addition_weight(k: int, a: int, N: int, Q):
    return ((-1) ** k * Q ** (-_binom2(k) - k * (3 * a + 2))
            * (1 - Q ** (2 * a + 1 + 2 * k)) / (1 - Q ** (2 * a + 1))
            * qpochhammer((Q ** (2 * a + 1), Q ** (3 * a + N + 2), Q ** (-N)), Q, k)
            / qpochhammer((Q, Q ** (-a - N), Q ** (2 * a + N + 2)), Q, k))


def addition_factor(i: int, j: int, a: int, N: int, Q):
    return ((-1) ** ((i + j - N) % 2)
            * Q ** (_binom2(i) + _binom2(j) - _binom2(N) + (i + j - 2 * N) * (a + 1))
            * qpochhammer(Q ** (2 * a + 2), Q, N) / qpochhammer(Q ** (a + 1), Q, N))


def check_addition(a: int, N: int, qc: QContext):
    """sum_k c_k R_i(mu(k)) R_j(mu(k)) = (prefactor) R_i(mu(j)) for all i, j."""
    tally = Tally("addition", _params(a, N), qc)
    m = build_model(a, N, qc)
    n = N + 1
    for tag, Q in _bases(qc):
        R = [[racah_R_4phi3(i, k, a, N, Q) for k in range(n)] for i in range(n)]
        c = [addition_weight(k, a, N, Q) for k in range(n)]
        for i in range(n):
            for j in range(n):
                terms = [c[k] * R[i][k] * R[j][k] for k in range(n)]
                tally.compare(f"[{tag}] add({i},{j})", sum(terms),
                              addition_factor(i, j, a, N, Q) * R[i][j],
                              scale=max(abs(t) for t in terms))
    # matrix form the formula is read from: gamma_i gamma_j P_ij = m_q sum_k gamma_k^-1 P_ik P_kj
    g = m.gamma
    G = QMatrix([[g[i] * g[j] * m.P[i, j] for j in range(n)] for i in range(n)])
    tally.compare("S1 P S1 = m_q P S1^-1 P", G, (m.P @ inverse(m.S1) @ m.P) * m.m_q)
    return tally.done()


def qracah_from_recurrence(a: int, N: int, qc: QContext) -> QMatrix:
    """P = m_q^-1 S1 (sum_r gamma_r prod_(k != r) (X2 - chi_(a+k)) / (chi_(a+r) - chi_(a+k))) S1."""
    m = build_model(a, N, qc)
    inner, _ = braid_matrix(m.X2, m.eigenvalues, m.gamma)
    return (m.S1 @ inner @ m.S1) * (1 / m.m_q)


def palbraid(a: int, qc: QContext):
    """R_1(mu(1)) at N = 1 from the braid-group expression."""
    al = alpha_table(a, 1, qc)
    d = chi(a + 1, qc) - chi(a, qc)
    c = 1 + qc.qpow(2 * a + 2)
    return -c * al[(1, 0)] / al[(0, 1)] * (c / d * al[(1, 0)] + 1)


def palrec(a: int, qc: QContext):
    """R_1(mu(1)) at N = 1 from the three-term recurrence."""
    al = alpha_table(a, 1, qc)
    return (chi(a + 1, qc) - chi(a, qc)) / al[(0, 1)] + 1


def palij(i: int, j: int, a: int, qc: QContext):
    """Entry (i, j) of P at N = 1 written through the recurrence coefficients."""
    al = alpha_table(a, 1, qc)
    g1 = gamma(a, 1, qc)
    ca, ca1 = chi(a, qc), chi(a + 1, qc)
    delta = 1 if i == j else 0
    return (-(1 + qc.qpow(2 * a + 2)) * qc.qpow(-4 * (a + 1)) * gamma(a, i, qc) * gamma(a, j, qc)
            * ((g1 - 1) * al[(i, j)] + (ca1 - g1 * ca) * delta) / (ca1 - ca))


def check_recurrence_form(a: int, N: int, qc: QContext):
    tally = Tally("recurrence_form", _params(a, N), qc)
    m = build_model(a, N, qc)
    tally.compare("P from recurrence coefficients", qracah_from_recurrence(a, N, qc), m.P)
    if N == 1:
        tally.merge(check_n1_closed_forms(a, qc))
    return tally.done()


def check_n1_closed_forms(a: int, qc: QContext):
    """N = 1: the braid and recurrence expressions of R_1(mu(1)) and the explicit alphas."""
    tally = Tally("n1_closed_forms", {"a": a}, qc)
    Q = qc.q * qc.q
    direct = racah_R(1, 1, a, 1, Q)
    pb, pr = palbraid(a, qc), palrec(a, qc)
    tally.compare("braid form = recurrence form", pb, pr)
    tally.compare("recurrence form = 4phi3", pr, direct)
    closed = 1 - (_f(qc, 4 * (a + 1)) * (1 + qc.qpow(2 * (a + 1))) / _f(qc, 6 * (a + 1)))
    tally.compare("closed form of R_1(mu(1))", direct, closed)
    al = alpha_table(a, 1, qc)
    c = 1 + qc.qpow(2 * (a + 1))
    tally.compare("alpha_01", al[(0, 1)],
                  -qc.qpow(-2 * a - 3) * _f(qc, 2) * _f(qc, 6 * (a + 1)) / c)
    tally.compare("alpha_10", al[(1, 0)], -qc.qpow(-1) * _f(qc, 2) * _f(qc, 2 * (a + 1)) / c)
    tally.compare("chi_(a+1) - chi_a", chi(a + 1, qc) - chi(a, qc),
                  qc.qpow(-2 * a - 3) * _f(qc, 2) * _f(qc, 4 * (a + 1)))
    P = build_model(a, 1, qc).P
    for i in range(2):
        for j in range(2):
            tally.compare(f"P_{i}{j} via alphas", palij(i, j, a, qc), P[i, j])
    return tally.done()


def check_q_inversion(a: int, N: int, qc: QContext):
    """P(1/q) = P(q) and S_i(1/q) = S_i(q)^-1."""
    tally = Tally("q_inversion", _params(a, N), qc)
    m = build_model(a, N, qc)
    mi = build_model(a, N, qc.inverted())
    tally.compare("P(1/q) = P(q)", mi.P, m.P)
    tally.compare("S1(1/q) = S1^-1", mi.S1, inverse(m.S1))
    tally.compare("S2(1/q) = S2^-1", mi.S2, inverse(m.S2))
    tally.compare("gamma_r(1/q) = gamma_r^-1", list(mi.gamma), [1 / g for g in m.gamma])
    return tally.done()


def check_duality(a: int, N: int, qc: QContext):
    """R_i(mu(j)) = R_j(mu(i)), equivalently P_ij / beta_j^2 = P_ji / beta_i^2."""
    tally = Tally("duality", _params(a, N), qc)
    m = build_model(a, N, qc)
    n = N + 1
    for tag, Q in _bases(qc):
        for i in range(n):
            for j in range(i + 1, n):
                tally.compare(f"[{tag}] R_{i}({j}) = R_{j}({i})",
                              racah_R(i, j, a, N, Q), racah_R(j, i, a, N, Q))
    for i in range(n):
        for j in range(i + 1, n):
            tally.compare(f"P_{i}{j}/b_{j}^2 = P_{j}{i}/b_{i}^2",
                          m.P[i, j] / m.betasq[j], m.P[j, i] / m.betasq[i])
    # renormalized entries beta_j^2 R_i(mu(j)) are invariant under q -> 1/q
    mi = build_model(a, N, qc.inverted())
    tally.compare("beta^2(1/q) R(1/q) = beta^2 R", mi.P, m.P)
    return tally.done()


def describe(a: int, N: int) -> str:
    spins = ", ".join(f"(s={spin_str(s)}, l={spin_str(l)})" for s, l in spins_for_model(a, N))
    return f"(a={a}, N={N}) <- {spins}"
