"""Finite-dimensional representations of U_q(sl2) and their tensor products.

Weight basis convention for the spin-j irrep M_j (basis w_0 .. w_2j):

    q^H w_k = q^(j-k) w_k,   F w_k = w_(k+1),   E w_k = [k]_q [2j-k+1]_q w_(k-1)

so w_0 is the highest weight vector and F is a plain shift.  The
comultiplication is

    D(E) = E (x) K^-1 + K (x) E,   D(F) = F (x) K^-1 + K (x) F,   D(K) = K (x) K

with K standing for q^H.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactlinalg import QMatrix, commutator, kron, spectral_idempotents
from .qnumbers import QContext, chi, half, qfactorial, qnumber, spin_str
from .report import Tally

GENERATORS = ("E", "F", "K", "Kinv")


class CoassociativityError(AssertionError):
    pass


@dataclass(frozen=True)
class Rep:
    """Images of E, F, q^H and q^-H in some representation."""

    E: QMatrix
    F: QMatrix
    K: QMatrix
    Kinv: QMatrix
    qc: QContext

    @property
    def dim(self) -> int:
        return self.K.rows

    def gen(self, name: str) -> QMatrix:
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        return getattr(self, name)

    def identity(self) -> QMatrix:
        return QMatrix.identity(self.dim, one=self.qc.one)

    def tensor(self, other: "Rep") -> "Rep":
        """Image of the coproduct on self (x) other."""
        return Rep(
            E=kron(self.E, other.Kinv) + kron(self.K, other.E),
            F=kron(self.F, other.Kinv) + kron(self.K, other.F),
            K=kron(self.K, other.K),
            Kinv=kron(self.Kinv, other.Kinv),
            qc=self.qc,
        )

    def casimir(self) -> QMatrix:
        """(q - q^-1)^2 F E + q K^2 + q^-1 K^-2."""
        q = self.qc.q
        d = q - 1 / q
        return (self.F @ self.E) * (d * d) + (self.K @ self.K) * q + (self.Kinv @ self.Kinv) * (1 / q)


@dataclass(frozen=True)
class SpinRep(Rep):
    j: Fraction = Fraction(0)


@lru_cache(maxsize=None)
def spin_rep(j, qc: QContext) -> SpinRep:
    j = half(j)
    if j < 0:
        raise ValueError("spin must be nonnegative")
    n = int(2 * j) + 1
    zero, one = qc.zero, qc.one
    E = [[zero] * n for _ in range(n)]
    F = [[zero] * n for _ in range(n)]
    for k in range(1, n):
        E[k - 1][k] = qnumber(k, qc) * qnumber(2 * j - k + 1, qc)
        F[k][k - 1] = one
    K = QMatrix.diag([qc.qpow(j - k) for k in range(n)])
    Kinv = QMatrix.diag([qc.qpow(k - j) for k in range(n)])
    return SpinRep(E=QMatrix(E), F=QMatrix(F), K=K, Kinv=Kinv, qc=qc, j=j)


def casimir_rep(rep: Rep) -> QMatrix:
    return rep.casimir()


def coproduct_rep(repA: Rep, repB: Rep, generator: str) -> QMatrix:
    if repA.qc != repB.qc:
        raise ValueError("representations built at different q")
    return repA.tensor(repB).gen(generator)


def coproduct2_bracketings(rep: Rep, generator: str) -> tuple[QMatrix, QMatrix]:
    """(D (x) id) D(x) and (id (x) D) D(x) on rep^(x)3."""
    left = rep.tensor(rep).tensor(rep).gen(generator)
    right = rep.tensor(rep.tensor(rep)).gen(generator)
    return left, right


def coproduct2_rep(rep: Rep, generator: str) -> QMatrix:
    left, right = coproduct2_bracketings(rep, generator)
    if left != right:
        raise CoassociativityError(f"bracketings of D^(2)({generator}) differ")
    return left


@lru_cache(maxsize=None)
def triple_rep(s, qc: QContext) -> Rep:
    m = spin_rep(s, qc)
    return m.tensor(m).tensor(m)


@lru_cache(maxsize=None)
def double_rep(s, qc: QContext) -> Rep:
    m = spin_rep(s, qc)
    return m.tensor(m)


@dataclass(frozen=True)
class DecompositionTable:
    s: Fraction
    spins: tuple
    degeneracy: dict

    @property
    def total_dim(self) -> int:
        return sum(int(2 * j + 1) * d for j, d in self.degeneracy.items())


def degeneracy(s, j) -> int:
    s, j = half(s), half(j)
    return int(min(2 * s, s + j) - abs(s - j) + 1)


def decomposition_data(s) -> DecompositionTable:
    """Spins J_s occurring in M_s^(x)3 and their multiplicities d_j."""
    s = half(s)
    if s < 0:
        raise ValueError("spin must be nonnegative")
    jmin = Fraction(0) if s.denominator == 1 else Fraction(1, 2)
    spins = []
    j = jmin
    while j <= 3 * s:
        spins.append(j)
        j += 1
    d = {}
    for j in spins:
        dj = degeneracy(s, j)
        branch = int(2 * j + 1) if j <= s else int(3 * s - j + 1)
        if dj != branch:
            raise AssertionError(f"degeneracy formulas disagree at j={j}")
        d[j] = dj
    table = DecompositionTable(s, tuple(spins), d)
    if table.total_dim != int(2 * s + 1) ** 3:
        raise AssertionError("dimension count of the decomposition is off")
    return table


def _basis(n: int, k: int, qc: QContext) -> list:
    v = [qc.zero] * n
    v[k] = qc.one
    return v


def omega_plus(s, r: int, qc: QContext) -> list:
    """Highest weight vector of the spin-r summand of M_s (x) M_s.

    omega_r = sum_p rho_p F^p w+ (x) F^(2s-r-p) w+ with
    rho_p = (-1)^p q^(p(r+1)) [2s-p]! [r+p]! / ([2s-r-p]! [p]!).
    """
    s = half(s)
    two_s = int(2 * s)
    if not 0 <= r <= two_s:
        raise ValueError("need 0 <= r <= 2s")
    n = two_s + 1
    vec = [qc.zero] * (n * n)
    for p in range(two_s - r + 1):
        rho = ((-1) ** p * qc.qpow(p * (r + 1))
               * qfactorial(two_s - p, qc) * qfactorial(r + p, qc)
               / (qfactorial(two_s - r - p, qc) * qfactorial(p, qc)))
        vec[p * n + (two_s - r - p)] = rho
    return vec


def _vec_scale(vs):
    return max((abs(v) for v in vs), default=0)


def check_relations(rep: Rep, tally: Tally, tag: str = "") -> None:
    """K E = q E K, K F = q^-1 F K, [E, F] = [2H]_q, K K^-1 = 1."""
    q = rep.qc.q
    E, F, K, Ki = rep.E, rep.F, rep.K, rep.Kinv
    tally.compare(f"{tag}KE=qEK", K @ E, (E @ K) * q)
    tally.compare(f"{tag}KF=q^-1FK", K @ F, (F @ K) * (1 / q))
    tally.compare(f"{tag}[E,F]=[2H]", commutator(E, F), (K @ K - Ki @ Ki) * (1 / (q - 1 / q)))
    tally.compare(f"{tag}KK^-1=1", K @ Ki, rep.identity())


def check_representation(s, qc: QContext):
    """Defining relations, nilpotency and Casimir scalar of M_s; relations on M_s^(x)2."""
    s = half(s)
    tally = Tally("representation", {"s": spin_str(s)}, qc)
    m = spin_rep(s, qc)
    check_relations(m, tally)
    n = m.dim
    zero = QMatrix.zeros(n, zero=qc.zero)
    tally.compare("E^(2s+1)=0", m.E.power(n), zero)
    tally.compare("F^(2s+1)=0", m.F.power(n), zero)
    C = m.casimir()
    tally.compare("pi(C)=chi_s", C, m.identity() * chi(s, qc))
    for g in ("E", "F", "K"):
        tally.compare(f"[C,{g}]=0", C @ m.gen(g), m.gen(g) @ C)
    check_relations(double_rep(s, qc), tally, "D:")
    return tally.done()


def check_coassociativity(s, qc: QContext):
    s = half(s)
    tally = Tally("coassociativity", {"s": spin_str(s)}, qc)
    m = spin_rep(s, qc)
    for g in GENERATORS:
        left, right = coproduct2_bracketings(m, g)
        tally.compare(f"D2({g})", left, right)
    check_relations(triple_rep(s, qc), tally, "D2:")
    return tally.done()


def check_tensor_spectrum(s, qc: QContext):
    """Casimir of M_s^(x)2 has eigenvalues chi_r, r = 0..2s, multiplicity 2r+1."""
    s = half(s)
    tally = Tally("tensor_spectrum", {"s": spin_str(s)}, qc)
    C = double_rep(s, qc).casimir()
    projs = spectral_idempotents(C, [chi(r, qc) for r in range(int(2 * s) + 1)])
    for r, P in enumerate(projs):
        tally.compare(f"trace P(M_{r})", P.trace(), qc.num(2 * r + 1))
    return tally.done()


def check_omega_plus(s, qc: QContext):
    s = half(s)
    tally = Tally("omega_plus", {"s": spin_str(s)}, qc)
    rep = double_rep(s, qc)
    for r in range(int(2 * s) + 1):
        w = omega_plus(s, r, qc)
        sc = _vec_scale(w) * rep.E.max_abs()
        tally.compare(f"D(E)omega_{r}=0", rep.E @ w, [qc.zero] * len(w), scale=sc)
        tally.compare(f"D(K)omega_{r}=q^r omega", rep.K @ w, [v * qc.qpow(r) for v in w])
    return tally.done()


def check_EnFk(s, n: int, k: int, qc: QContext):
    """E^n F^k w+ = [k]! [2s-k+n]! / ([k-n]! [2s-k]!) F^(k-n) w+."""
    s = half(s)
    two_s = int(2 * s)
    if not 0 <= n <= k <= two_s:
        raise ValueError("need 0 <= n <= k <= 2s")
    tally = Tally("EnFk", {"s": spin_str(s), "n": n, "k": k}, qc)
    m = spin_rep(s, qc)
    dim = m.dim
    w = _basis(dim, 0, qc)
    lhs = m.E.power(n) @ (m.F.power(k) @ w)
    coeff = (qfactorial(k, qc) * qfactorial(two_s - k + n, qc)
             / (qfactorial(k - n, qc) * qfactorial(two_s - k, qc)))
    rhs = [v * coeff for v in m.F.power(k - n) @ w]
    tally.compare("EnFk", lhs, rhs)
    return tally.done()


def check_EnFk_all(s, qc: QContext):
    s = half(s)
    tally = Tally("EnFk", {"s": spin_str(s)}, qc)
    two_s = int(2 * s)
    for k in range(two_s + 1):
        for n in range(k + 1):
            tally.merge(check_EnFk(s, n, k, qc), f"n={n},k={k}: ")
    return tally.done()
