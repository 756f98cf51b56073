"""Dense matrices over Fraction (or float) with exact elimination.

Storage is a tuple of row tuples, so a QMatrix is immutable.  Products skip
zero entries: the operators built in this package are weight-preserving and
therefore very sparse even though they are stored densely.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .report import FLOAT_RTOL


class ShapeError(ValueError):
    pass


class SingularMatrixError(ZeroDivisionError):
    pass


class IdempotentHypothesisError(ValueError):
    """prod_k (A - lambda_k I) is not zero, so the given spectrum is wrong."""

    def __init__(self, residual: "QMatrix"):
        super().__init__(f"minimal polynomial residual has max |entry| {residual.max_abs()}")
        self.residual = residual


def _is_float(entries: Iterable) -> bool:
    return any(isinstance(v, float) for v in entries)


class QMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in data)
        if not rows or not rows[0]:
            raise ShapeError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        self.rows = len(rows)
        self.cols = width
        self.data = rows

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None, zero=0) -> "QMatrix":
        cols = rows if cols is None else cols
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int, one=1) -> "QMatrix":
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "QMatrix":
        values = list(values)
        zero = values[0] - values[0]
        n = len(values)
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "QMatrix":
        return cls(list(zip(*columns)))

    # access ------------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> list:
        return [row[j] for row in self.data]

    def entries(self) -> list:
        return [v for row in self.data for v in row]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        return QMatrix([[self.data[i][j] for j in cols] for i in rows])

    def __iter__(self):
        return iter(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return f"QMatrix({self.rows}x{self.cols}: {body})"

    # ring operations ---------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in r] for r in self.data])

    def __mul__(self, c) -> "QMatrix":
        if isinstance(c, QMatrix):
            raise TypeError("use @ for matrix products")
        return QMatrix([[a * c for a in r] for r in self.data])

    __rmul__ = __mul__

    def __truediv__(self, c) -> "QMatrix":
        return QMatrix([[a / c for a in r] for r in self.data])

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            zero = self.data[0][0] * other.data[0][0] * 0
            brows = other.data
            width = other.cols
            out = []
            for row in self.data:
                acc = [zero] * width
                for k, a in enumerate(row):
                    if a:
                        for j, b in enumerate(brows[k]):
                            if b:
                                acc[j] += a * b
                out.append(acc)
            return QMatrix(out)
        vec = list(other)
        if len(vec) != self.cols:
            raise ShapeError("vector length mismatch")
        zero = self.data[0][0] * 0
        out = []
        for row in self.data:
            acc = zero
            for a, b in zip(row, vec):
                if a and b:
                    acc += a * b
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    __hash__ = None

    @property
    def T(self) -> "QMatrix":
        return QMatrix(list(zip(*self.data)))

    def trace(self):
        return sum(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def is_zero(self) -> bool:
        return not any(v for row in self.data for v in row)

    def max_abs(self):
        return max(abs(v) for row in self.data for v in row)

    def power(self, n: int) -> "QMatrix":
        if self.rows != self.cols:
            raise ShapeError("power of a non-square matrix")
        out = QMatrix.identity(self.rows, one=self.data[0][0] ** 0)
        for _ in range(n):
            out = out @ self
        return out

    def kron(self, other: "QMatrix") -> "QMatrix":
        return kron(self, other)

    def inverse(self) -> "QMatrix":
        return inverse(self)

    # serialization -------------------------------------------------------
    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [format_entry(v) for v in self.entries()]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "QMatrix":
        rows, cols, ents = d["rows"], d["cols"], d["entries"]
        if len(ents) != rows * cols:
            raise ShapeError("entries length does not match rows*cols")
        vals = [parse_entry(e) for e in ents]
        return cls([vals[i * cols:(i + 1) * cols] for i in range(rows)])

    @classmethod
    def from_json(cls, text: str) -> "QMatrix":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in self.data:
            w.writerow([format_entry(v) for v in row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "QMatrix":
        rows = [r for r in csv.reader(io.StringIO(text)) if r]
        return cls([[parse_entry(e) for e in r] for r in rows])


def format_entry(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(Fraction(v))


def parse_entry(text: str):
    text = text.strip()
    if any(c in text for c in ".eEn"):
        return float(text)
    return Fraction(text)


def kron(*mats: QMatrix) -> QMatrix:
    """Kronecker product, left factor outermost."""
    out = mats[0]
    for B in mats[1:]:
        A = out
        zero = A.data[0][0] * B.data[0][0] * 0
        rows = []
        for arow in A.data:
            for brow in B.data:
                row = []
                for a in arow:
                    if a:
                        row.extend(a * b for b in brow)
                    else:
                        row.extend([zero] * B.cols)
                rows.append(row)
        out = QMatrix(rows)
    return out


def commutator(A: QMatrix, B: QMatrix) -> QMatrix:
    return A @ B - B @ A


def qcommutator(A: QMatrix, B: QMatrix, q) -> QMatrix:
    """[A, B]_q = q A B - q^-1 B A."""
    return (A @ B) * q - (B @ A) * (1 / q)


def _pivot(col_vals, floating: bool, tol):
    """Index of the pivot among (row, value) pairs, or None."""
    if floating:
        best = max(col_vals, key=lambda rv: abs(rv[1]), default=None)
        if best is None or abs(best[1]) <= tol:
            return None
        return best[0]
    for r, v in col_vals:
        if v != 0:
            return r
    return None


def _prepare(A: QMatrix):
    floating = _is_float(A.entries())
    conv = float if floating else Fraction
    rows = [[conv(v) for v in r] for r in A.data]
    scale = max((abs(v) for r in rows for v in r), default=0)
    tol = scale * FLOAT_RTOL * 1e-3 if floating else 0
    return rows, floating, tol


def inverse(A: QMatrix) -> QMatrix:
    """Gauss-Jordan inverse; exact pivots in exact mode, partial pivoting for floats."""
    if A.rows != A.cols:
        raise ShapeError("inverse of a non-square matrix")
    n = A.rows
    M, floating, _ = _prepare(A)
    tol = 0.0  # with partial pivoting only an exactly zero column is singular
    one = 1.0 if floating else Fraction(1)
    inv = [[one if i == j else one * 0 for j in range(n)] for i in range(n)]
    for c in range(n):
        p = _pivot([(r, M[r][c]) for r in range(c, n)], floating, tol)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        if p != c:
            M[c], M[p] = M[p], M[c]
            inv[c], inv[p] = inv[p], inv[c]
        piv = M[c][c]
        M[c] = [v / piv for v in M[c]]
        inv[c] = [v / piv for v in inv[c]]
        for r in range(n):
            f = M[r][c]
            if r != c and f:
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[c])]
    return QMatrix(inv)


def rref(A: QMatrix):
    """Reduced row echelon form and the pivot columns."""
    M, floating, tol = _prepare(A)
    pivots = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        p = _pivot([(i, M[i][c]) for i in range(r, A.rows)], floating, tol)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [v / piv for v in M[r]]
        for i in range(A.rows):
            f = M[i][c]
            if i != r and f:
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        if floating:
            for i in range(A.rows):
                M[i] = [0.0 if abs(v) <= tol else v for v in M[i]]
        pivots.append(c)
        r += 1
    return QMatrix(M), pivots


def rank(A: QMatrix) -> int:
    return len(rref(A)[1])


def nullspace(A: QMatrix) -> list[list]:
    """Basis of the right kernel; vector k has a 1 in the k-th free column."""
    return nullspace_with_free(A)[0]


def nullspace_with_free(A: QMatrix) -> tuple[list[list], list[int]]:
    """Kernel basis together with the free columns it is normalized on."""
    R, pivots = rref(A)
    floating = _is_float(R.entries())
    one = 1.0 if floating else Fraction(1)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [one * 0] * A.cols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -R.data[i][f]
        basis.append(v)
    return basis, free


def solve(A: QMatrix, B: QMatrix) -> QMatrix:
    return inverse(A) @ B


def restrict(op: QMatrix, basis: QMatrix, rows: Sequence[int] | None = None) -> QMatrix:
    """Matrix M of ``op`` on the invariant subspace spanned by the columns of ``basis``.

    Solves basis @ M = op @ basis on a set of rows where ``basis`` is invertible.
    Those rows are found by row reduction unless given.
    """
    if rows is None:
        rows = rref(basis.T)[1]
    cols = range(basis.cols)
    return inverse(basis.submatrix(rows, cols)) @ (op @ basis).submatrix(rows, cols)


def polynomial_product(A: QMatrix, roots: Sequence) -> QMatrix:
    """prod_k (A - r_k I)."""
    I = QMatrix.identity(A.rows)
    out = I
    for r in roots:
        out = out @ (A - I * r)
    return out


def spectral_idempotents(A: QMatrix, eigenvalues: Sequence, check: bool = True) -> list[QMatrix]:
    """Lagrange projectors E_r = prod_{k != r} (A - l_k I) / (l_r - l_k).

    The eigenvalues must be distinct and annihilate A; when ``check`` is set
    the product prod_k (A - l_k I) is formed and a nonzero result raises
    :class:`IdempotentHypothesisError`.
    """
    lam = list(eigenvalues)
    if len(set(lam)) != len(lam):
        raise ValueError("eigenvalues must be pairwise distinct")
    n = A.rows
    one = lam[0] ** 0
    I = QMatrix.identity(n, one=one)
    shifted = [A - I * l for l in lam]
    if check:
        res = I
        for S in shifted:
            res = res @ S
        if _is_float(res.entries()) or _is_float(lam):
            size = 1.0
            norm = float(A.max_abs())
            for l in lam:
                size *= norm + abs(float(l))
            if float(res.max_abs()) > FLOAT_RTOL * size:
                raise IdempotentHypothesisError(res)
        elif not res.is_zero():
            raise IdempotentHypothesisError(res)
    out = []
    for r, lr in enumerate(lam):
        E = I
        for k, lk in enumerate(lam):
            if k != r:
                E = (E @ shifted[k]) * (1 / (lr - lk))
        out.append(E)
    return out
