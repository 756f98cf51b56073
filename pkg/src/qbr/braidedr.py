"""The universal R-matrix on M_s (x) M_s, the braided R-matrix and its spectrum."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactlinalg import QMatrix, kron, spectral_idempotents, inverse
from .qnumbers import QContext, chi, half, qfactorial, spin_str
from .report import Tally
from .uqsl2rep import double_rep, omega_plus, spin_rep


def _weights(s: Fraction) -> list[Fraction]:
    return [s - k for k in range(int(2 * s) + 1)]


def _r_terms(s, qc: QContext, nmax: int) -> list[QMatrix]:
    """Summands n = 0..nmax of the R-matrix series, evaluated on M_s (x) M_s.

    term_n = (q - q^-1)^n / [n]! q^(-n(n+1)/2) (E (x) F)^n (q^(-nH) (x) q^(nH)) q^(2 H (x) H)
    """
    s = half(s)
    m = spin_rep(s, qc)
    h = _weights(s)
    q = qc.q
    d = q - 1 / q
    # q^(2 H(x)H) and the two Cartan factors are diagonal in the weight basis
    cartan2 = [qc.qpow(2 * a * b) for a in h for b in h]
    EF = kron(m.E, m.F)
    terms = []
    EFn = QMatrix.identity(len(cartan2), one=qc.one)
    for n in range(nmax + 1):
        diag = QMatrix.diag([qc.qpow(-n * a + n * b) * c
                             for (a, b), c in zip(((a, b) for a in h for b in h), cartan2)])
        coeff = d ** n / qfactorial(n, qc) * qc.qpow(Fraction(-n * (n + 1), 2))
        terms.append((EFn @ diag) * coeff)
        EFn = EFn @ EF
    return terms


@lru_cache(maxsize=None)
def universal_r_rep(s, qc: QContext) -> QMatrix:
    """pi_s (x) pi_s of the universal R-matrix.

    The series is cut at n = 2s because E^(2s+1) = 0; the n = 2s+1 summand is
    computed and asserted to vanish.
    """
    s = half(s)
    two_s = int(2 * s)
    terms = _r_terms(s, qc, two_s + 1)
    if not terms[-1].is_zero():
        raise AssertionError("R-matrix series does not truncate at n = 2s")
    out = terms[0]
    for t in terms[1:-1]:
        out = out + t
    return out


@lru_cache(maxsize=None)
def swap(s) -> QMatrix:
    """Flip v (x) w -> w (x) v on M_s (x) M_s."""
    n = int(2 * half(s)) + 1
    rows = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for k in range(n):
            rows[k * n + i][i * n + k] = 1
    return QMatrix(rows)


def xi(s, r: int, qc: QContext):
    """Eigenvalue of the braided R-matrix on the spin-r summand."""
    s = half(s)
    two_s = int(2 * s)
    return (-1) ** (two_s + r) * qc.qpow(-2 * s * (s + 1) + r * (r + 1))


@dataclass(frozen=True)
class BraidedR:
    s: Fraction
    R: QMatrix
    Rcheck: QMatrix
    sigma: QMatrix
    xi: tuple
    projectors: tuple


@lru_cache(maxsize=None)
def braided_r(s, qc: QContext) -> BraidedR:
    s = half(s)
    R = universal_r_rep(s, qc)
    sigma = swap(s)
    C = double_rep(s, qc).casimir()
    rs = range(int(2 * s) + 1)
    projs = spectral_idempotents(C, [chi(r, qc) for r in rs])
    return BraidedR(s=s, R=R, Rcheck=R @ sigma, sigma=sigma,
                    xi=tuple(xi(s, r, qc) for r in rs), projectors=tuple(projs))


def _leg_matrices(s, qc):
    """R_12, R_13, R_23 on M_s^(x)3; R_13 = (1 (x) sigma) R_12 (1 (x) sigma)."""
    n = int(2 * half(s)) + 1
    R = universal_r_rep(s, qc)
    I = QMatrix.identity(n, one=qc.one)
    flip23 = kron(I, swap(s))
    R12 = kron(R, I)
    R23 = kron(I, R)
    R13 = flip23 @ R12 @ flip23
    return R12, R13, R23


def check_intertwining(s, qc: QContext):
    """D(x) R = R D^op(x) for x in E, F, K, with D^op = sigma D sigma."""
    s = half(s)
    tally = Tally("intertwining", {"s": spin_str(s)}, qc)
    R = universal_r_rep(s, qc)
    sig = swap(s)
    rep = double_rep(s, qc)
    for g in ("E", "F", "K"):
        D = rep.gen(g)
        Dop = sig @ D @ sig
        tally.compare(f"D({g})R=RDop({g})", D @ R, R @ Dop)
    return tally.done()


def check_ybe(s, qc: QContext):
    s = half(s)
    tally = Tally("ybe", {"s": spin_str(s)}, qc)
    R12, R13, R23 = _leg_matrices(s, qc)
    tally.compare("R12R13R23=R23R13R12", R12 @ R13 @ R23, R23 @ R13 @ R12)
    n = int(2 * s) + 1
    I = QMatrix.identity(n, one=qc.one)
    Rc = braided_r(s, qc).Rcheck
    R1, R2 = kron(Rc, I), kron(I, Rc)
    tally.compare("R1R2R1=R2R1R2", R1 @ R2 @ R1, R2 @ R1 @ R2)
    return tally.done()


def check_spectral_decomposition(s, qc: QContext):
    s = half(s)
    tally = Tally("spectral_decomposition", {"s": spin_str(s)}, qc)
    br = braided_r(s, qc)
    n = br.Rcheck.rows
    I = QMatrix.identity(n, one=qc.one)
    total = br.projectors[0] * br.xi[0]
    for x, P in zip(br.xi[1:], br.projectors[1:]):
        total = total + P * x
    tally.compare("Rcheck=sum xi_r P(M_r)", br.Rcheck, total)

    minpoly = I
    size = 1.0
    for x in br.xi:
        f = br.Rcheck - I * x
        minpoly = minpoly @ f
        size *= float(f.max_abs())
    tally.compare("prod(Rcheck - xi_r)=0", minpoly, QMatrix.zeros(n, zero=qc.zero), scale=size)

    psum = br.projectors[0]
    for P in br.projectors[1:]:
        psum = psum + P
    tally.compare("sum P(M_r)=I", psum, I)
    for r, P in enumerate(br.projectors):
        tally.compare(f"P{r}^2=P{r}", P @ P, P)
    tally.compare("trace Rcheck", br.Rcheck.trace(),
                  sum(x * (2 * r + 1) for r, x in enumerate(br.xi)))

    inv = br.projectors[0] * (1 / br.xi[0])
    for x, P in zip(br.xi[1:], br.projectors[1:]):
        inv = inv + P * (1 / x)
    tally.compare("Rcheck^-1=sum xi^-1 P", inverse(br.Rcheck), inv)

    for r, x in enumerate(br.xi):
        w = omega_plus(s, r, qc)
        tally.compare(f"Rcheck omega_{r}=xi_{r} omega_{r}", br.Rcheck @ w, [v * x for v in w])

    rep = double_rep(s, qc)
    for g in ("E", "F", "K"):
        D = rep.gen(g)
        tally.compare(f"[Rcheck,D({g})]=0", br.Rcheck @ D, D @ br.Rcheck)
    return tally.done()
