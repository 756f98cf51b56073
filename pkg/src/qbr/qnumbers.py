"""Scalars in q^(1/2) and the basic hypergeometric layer.

Every quantity in the library is a Laurent polynomial (or ratio of them) in
u, where u*u = q.  Instead of carrying symbolic rational functions we evaluate
exactly at a rational sample point u, so a scalar is just a ``Fraction``
(exact mode) or a ``float`` (float mode).  The :class:`QContext` knows the
sample point and the mode and hands out powers of q at half-integer exponents.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"
MODES = (EXACT, FLOAT)

# denominators of the form 1 - q^k must stay away from zero up to this power
DEFAULT_GUARD = 4 * (3 * 3 + 6 + 2)


class AdmissibilityError(ValueError):
    """The sample point makes some 1 - q^k vanish (or u is zero)."""


class NonTerminatingSeriesError(ValueError):
    pass


def half(x) -> Fraction:
    """Parse a spin such as ``"1.5"``, ``"3/2"``, ``1`` into an exact half-integer."""
    if isinstance(x, str):
        x = x.strip()
        v = Fraction(x) if "/" in x else Fraction(x)
    else:
        v = Fraction(x)
    if (2 * v).denominator != 1:
        raise ValueError(f"{x!r} is not a half-integer")
    return v


def spin_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class QContext:
    """A rational sample point u with q = u**2, and an arithmetic mode.

    >>> qc = QContext(Fraction(3, 5))
    >>> qc.q
    Fraction(9, 25)
    >>> qc.qpow(Fraction(1, 2))
    Fraction(3, 5)
    """

    u: Fraction
    mode: str = EXACT
    guard: int = DEFAULT_GUARD

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        self.check_admissible(self.guard)

    @classmethod
    def parse(cls, text: str, mode: str = EXACT, guard: int = DEFAULT_GUARD) -> "QContext":
        return cls(Fraction(text), mode, guard)

    def check_admissible(self, bound: int) -> None:
        if self.u == 0:
            raise AdmissibilityError("u = 0 is not admissible")
        q = self.u * self.u
        qk = Fraction(1)
        for k in range(1, bound + 1):
            qk *= q
            if qk == 1:
                raise AdmissibilityError(
                    f"u = {self.u} is not admissible: 1 - q^{k} = 0")
        if self.mode == FLOAT:
            # the float tower must not overflow or underflow at the guard power
            lq = abs(math.log(float(q))) if q != 1 else 0.0
            if lq * bound > 700:
                raise AdmissibilityError(
                    f"u = {self.u} leaves binary64 range below q^{bound}")

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    @property
    def base(self) -> Scalar:
        """u in the arithmetic of this context."""
        return self.u if self.exact else float(self.u)

    @property
    def q(self) -> Scalar:
        b = self.base
        return b * b

    def num(self, x) -> Scalar:
        """Coerce an integer or rational into this context's arithmetic."""
        return Fraction(x) if self.exact else float(x)

    @property
    def one(self) -> Scalar:
        return self.num(1)

    @property
    def zero(self) -> Scalar:
        return self.num(0)

    def qpow(self, x) -> Scalar:
        """q**x for half-integer x, i.e. u**(2x)."""
        e = 2 * Fraction(x)
        if e.denominator != 1:
            raise ValueError(f"q-exponent {x} is not a half-integer")
        return self.base ** int(e)

    def inverted(self) -> "QContext":
        """The context with q replaced by 1/q."""
        return QContext(1 / self.u, self.mode, self.guard)

    def with_mode(self, mode: str) -> "QContext":
        return QContext(self.u, mode, self.guard)

    @property
    def label(self) -> str:
        return str(self.u)


def qpochhammer(z, q: Scalar, k: int) -> Scalar:
    """(z; q)_k.  A sequence ``z`` gives the product (z1, ..., zr; q)_k."""
    if k < 0:
        raise ValueError("negative Pochhammer length")
    if isinstance(z, (list, tuple)):
        out = 1
        for zi in z:
            out = out * qpochhammer(zi, q, k)
        return out
    out = 1
    qi = 1
    for _ in range(k):
        out = out * (1 - z * qi)
        qi = qi * q
    return out


def qnumber(x, qc: QContext) -> Scalar:
    """[x]_q = (q^x - q^-x) / (q - q^-1)."""
    q = qc.q
    if q * q == 1:
        raise ZeroDivisionError("[x]_q is undefined at q^2 = 1")
    return (qc.qpow(x) - qc.qpow(-Fraction(x))) / (q - 1 / q)


def qfactorial(n: int, qc: QContext) -> Scalar:
    out = qc.one
    for k in range(1, n + 1):
        out = out * qnumber(k, qc)
    return out


def chi(j, qc: QContext) -> Scalar:
    """Eigenvalue of the Casimir on the spin-j irrep, q^(2j+1) + q^-(2j+1)."""
    e = 2 * Fraction(j) + 1
    return qc.qpow(e) + qc.qpow(-e)


def _binom2(k: int) -> int:
    return k * (k - 1) // 2


def _is_one(x: Scalar) -> bool:
    if isinstance(x, float):
        return math.isclose(x, 1.0, rel_tol=1e-12)
    return x == 1


def terminating_length(upper: Sequence[Scalar], q: Scalar, limit: int = 256):
    """Smallest n with some upper parameter equal to q^-n, or None."""
    best = None
    for a in upper:
        if a == 0:
            continue
        t = a
        for n in range(limit + 1):
            if _is_one(t):
                if best is None or n < best:
                    best = n
                break
            t = t * q
    return best


def phi(upper: Sequence[Scalar], lower: Sequence[Scalar], q: Scalar, z: Scalar,
        terms: int | None = None) -> Scalar:
    """Terminating basic hypergeometric series r_phi_s.

    The k-th term is (a;q)_k / (b;q)_k * ((-1)^k q^C(k,2))^(1+s-r) z^k / (q;q)_k,
    summed for k = 0..n where one upper parameter equals q^-n.  ``terms``
    overrides the detected length.
    """
    r, s = len(upper), len(lower)
    n = terms if terms is not None else terminating_length(upper, q)
    if n is None:
        raise NonTerminatingSeriesError("no upper parameter of the form q^-n")
    power = 1 + s - r
    total = 0
    term = 1
    qk = q ** 0  # q^k, typed like q so int division never creeps in
    for k in range(n + 1):
        total = total + term
        if k == n:
            break
        num = 1
        for a in upper:
            num = num * (1 - a * qk)
        den = 1
        for b in lower:
            den = den * (1 - b * qk)
        den = den * (1 - q * qk)
        if den == 0:
            raise ZeroDivisionError(
                f"lower-parameter Pochhammer vanishes at k = {k + 1}")
        # ratio of consecutive (-1)^k q^C(k,2) factors is -q^k
        sign_factor = (-qk) ** power if power >= 0 else 1 / (-qk) ** (-power)
        term = term * num / den * sign_factor * z
        qk = qk * q
    return total


@dataclass(frozen=True)
class QRacahParams:
    """Arguments of R_n(mu(x); alpha, beta, gamma, delta | q).

    ``q`` is the base of the series (the caller decides whether that is q or
    q**2 of some context).
    """

    n: int
    x: int
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    delta: Scalar
    q: Scalar
    N: int

    def __post_init__(self):
        if not (0 <= self.n <= self.N and 0 <= self.x <= self.N):
            raise ValueError("need 0 <= n, x <= N")
        target = self.q ** (-self.N - 1)
        if not any(_close(c, target) for c in
                   (self.alpha, self.beta * self.delta, self.gamma)):
            raise ValueError("q-Racah truncation condition fails")

    def mu(self) -> Scalar:
        return self.q ** (-self.x) + self.gamma * self.delta * self.q ** (self.x + 1)


def _close(a: Scalar, b: Scalar) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(a, b, rel_tol=1e-10)
    return a == b


def qracah(p: QRacahParams) -> Scalar:
    q = p.q
    upper = (q ** (-p.n), p.alpha * p.beta * q ** (p.n + 1),
             q ** (-p.x), p.gamma * p.delta * q ** (p.x + 1))
    lower = (p.alpha * q, p.beta * p.delta * q, p.gamma * q)
    return phi(upper, lower, q, q, terms=min(p.n, p.x))


def six_phi_four_rhs(a1: Scalar, a2: Scalar, q: Scalar, n: int) -> Scalar:
    """Closed form of the terminating very-well-poised 6phi4 sum."""
    return qpochhammer(q * a1, q, n) / qpochhammer(q * a1 / a2, q, n) / a2 ** n


def six_phi_four_lhs(sqrt_a1: Scalar, a2: Scalar, q: Scalar, n: int) -> Scalar:
    a1 = sqrt_a1 * sqrt_a1
    upper = (q * sqrt_a1, -q * sqrt_a1, a1, a2, 0 * q, q ** (-n))
    lower = (sqrt_a1, -sqrt_a1, q * a1 / a2, a1 * q ** (n + 1))
    return phi(upper, lower, q, q ** n / a2, terms=n)


def q_binomial(n: int, k: int, q: Scalar) -> Scalar:
    return qpochhammer(q, q, n) / (qpochhammer(q, q, k) * qpochhammer(q, q, n - k))


def _draw(rng: random.Random, qc: QContext, avoid=()) -> Scalar:
    while True:
        v = Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 9))
        if v not in avoid and v * v != 1:
            return qc.num(v)


def check_qseries_identities(qc: QContext, n_max: int, seed: int = 0):
    """Pochhammer identities, the q-binomial theorem and the 6phi4 summation.

    The free arguments z (and a, b, a1, a2) are drawn from ``random.Random(seed)``
    so a run is reproducible.
    """
    from .report import Tally

    tally = Tally("qseries", {"n_max": n_max, "seed": seed}, qc)
    rng = random.Random(seed)
    q = qc.q
    for n in range(n_max + 1):
        z = _draw(rng, qc)
        c = _binom2(n)
        tally.compare(f"qfid2 n={n} z={z}", qpochhammer(z, 1 / q, n),
                      qpochhammer(1 / z, q, n) * (-z) ** n * q ** (-c))
        tally.compare(f"qfid3 n={n} z={z}", qpochhammer(q ** (1 - n) / z, q, n),
                      qpochhammer(z, q, n) * (-1 / z) ** n * q ** (-c))
        tally.compare(f"qfid4 n={n} z={z}", qpochhammer(z * z, q * q, n),
                      qpochhammer((z, -z), q, n))
        # z must keep (z,-z;q)_n nonzero, i.e. z^2 q^(2i) != 1
        while qpochhammer(z * z, q * q, n) == 0:
            z = _draw(rng, qc)
        lhs = qpochhammer((q * z, -q * z), q, n) / qpochhammer((z, -z), q, n)
        mid = qpochhammer(q * q * z * z, q * q, n) / qpochhammer(z * z, q * q, n)
        rhs = (1 - z * z * q ** (2 * n)) / (1 - z * z)
        tally.compare(f"qfid5a n={n} z={z}", lhs, mid)
        tally.compare(f"qfid5b n={n} z={z}", mid, rhs)

        a, b = _draw(rng, qc), _draw(rng, qc)
        tally.compare(
            f"q-binomial n={n} a={a} b={b}", qpochhammer(a * b, q, n),
            sum(q_binomial(n, k, q) * b ** k * qpochhammer(a, q, k)
                * qpochhammer(b, q, n - k) for k in range(n + 1)))
        # a = 0 is the specialization used for the braided R eigenvalues
        tally.compare(
            f"q-binomial a=0 n={n} b={b}", qc.one,
            sum(q_binomial(n, k, q) * b ** k * qpochhammer(b, q, n - k)
                for k in range(n + 1)))

        while True:
            w, a2 = _draw(rng, qc), _draw(rng, qc)
            try:
                lhs = six_phi_four_lhs(w, a2, q, n)
                rhs = six_phi_four_rhs(w * w, a2, q, n)
            except ZeroDivisionError:
                continue
            break
        tally.compare(f"6phi4 n={n} sqrt(a1)={w} a2={a2}", lhs, rhs)
    return tally.done()
