"""Small dense complex matrices over :class:`~logsplit.scalar.Scalar`.

Dimensions are capped at 8: local monodromies at desk scale.  All methods
are pure; a Matrix is immutable after construction.  Because the entries
are Scalars, exact polar data survives any operation that only needs
products, reciprocals and colinear sums (diagonal and triangular work in
particular), and degrades to floats elsewhere.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix
from .scalar import ONE, ZERO, Scalar

MAX_DIM = 8

#: Pivot magnitudes below ``tol * scale`` count as singular.
SINGULARITY_TOL = 1e-12


class Matrix:
    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(_entry(e) for e in row) for row in rows)
        n = len(grid)
        if not 1 <= n <= MAX_DIM:
            raise DimensionMismatch(f"matrix dimension must be 1..{MAX_DIM}, got {n}")
        if any(len(row) != n for row in grid):
            raise DimensionMismatch("matrix must be square")
        self._rows = grid

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    # -- access ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self._rows[i][j]

    def max_abs(self) -> float:
        return max(abs(e) for row in self._rows for e in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(repr(e) for e in row) for row in self._rows)
        return f"Matrix[{body}]"

    def close_to(self, other: "Matrix", tol: float) -> bool:
        if self.n != other.n:
            return False
        scale = 1.0 + max(self.max_abs(), other.max_abs())
        return all(
            abs(a.z - b.z) <= tol * scale
            for ra, rb in zip(self._rows, other._rows)
            for a, b in zip(ra, rb)
        )

    # -- algebra ----------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"cannot multiply {self.n}x{self.n} by {other.n}x{other.n}")
        n = self.n
        a, b = self._rows, other._rows
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = a[i][0] * b[0][j]
                for k in range(1, n):
                    acc = acc + a[i][k] * b[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def apply(self, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(v) != self.n:
            raise DimensionMismatch("vector length does not match matrix dimension")
        return tuple(
            self._sum(row[k] * v[k] for k in range(self.n)) for row in self._rows
        )

    @staticmethod
    def _sum(terms) -> Scalar:
        acc = None
        for t in terms:
            acc = t if acc is None else acc + t
        return acc if acc is not None else ZERO

    def trace(self) -> Scalar:
        acc = self._rows[0][0]
        for i in range(1, self.n):
            acc = acc + self._rows[i][i]
        return acc

    def det(self) -> Scalar:
        n = self.n
        r = self._rows
        if n == 1:
            return r[0][0]
        if n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return self._det_by_elimination()

    def _det_by_elimination(self) -> Scalar:
        n = self.n
        work = [list(row) for row in self._rows]
        det = ONE
        for col in range(n):
            pivot_row = max(range(col, n), key=lambda i: abs(work[i][col]))
            if abs(work[pivot_row][col]) == 0.0:
                return ZERO
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                det = -det
            pivot = work[col][col]
            det = det * pivot
            for i in range(col + 1, n):
                factor = work[i][col] / pivot
                if factor.is_exact_zero:
                    continue
                for j in range(col, n):
                    work[i][j] = work[i][j] - factor * work[col][j]
        return det

    def inverse(self, tol: float = SINGULARITY_TOL) -> "Matrix":
        """Matrix inverse; raises SingularMatrix when |det| is below
        ``tol * (1 + max entry)**n``."""
        n = self.n
        scale = (1.0 + self.max_abs()) ** n
        if n == 1:
            d = self._rows[0][0]
            if abs(d) <= tol * scale:
                raise SingularMatrix("1x1 matrix with entry too close to zero")
            return Matrix([[d.reciprocal()]])
        if n == 2:
            # Adjugate form: keeps exact entries exact (a single division).
            (a, b), (c, d) = self._rows
            det = a * d - b * c
            if abs(det) <= tol * scale:
                raise SingularMatrix(f"2x2 determinant {abs(det):.3e} below tolerance")
            return Matrix([[d / det, -b / det], [-c / det, a / det]])
        if abs(self.det()) <= tol * scale:
            raise SingularMatrix(f"{n}x{n} determinant below tolerance")
        return self._inverse_gauss_jordan(tol, scale)

    def _inverse_gauss_jordan(self, tol: float, scale: float) -> "Matrix":
        n = self.n
        work = [list(self._rows[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot_row = max(range(col, n), key=lambda i: abs(work[i][col]))
            if abs(work[pivot_row][col]) <= tol * (1.0 + self.max_abs()):
                raise SingularMatrix(f"pivot in column {col} below tolerance")
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
            pivot = work[col][col]
            inv_pivot = pivot.reciprocal()
            work[col] = [e * inv_pivot for e in work[col]]
            for i in range(n):
                if i == col:
                    continue
                factor = work[i][col]
                if factor.is_exact_zero:
                    continue
                work[i] = [work[i][j] - factor * work[col][j] for j in range(2 * n)]
        return Matrix([row[n:] for row in work])

    def char_poly(self) -> tuple[Scalar, ...]:
        """Monic characteristic polynomial det(xI - A), coefficients from
        the leading 1 down to the constant term (length n + 1).

        Dimensions 1 and 2 are written out directly (trace and
        determinant, which keeps exact entries exact).  Larger matrices
        are reduced to Hessenberg form by a stabilized Gaussian
        similarity and the determinant is expanded along the last column.
        Intermediates stay at the size of the coefficients themselves;
        trace-of-powers schemes carry errors of order eps * ||A||^n,
        which poisons the low coefficients whenever the spectrum is
        spread over a few orders of magnitude.
        """
        n = self.n
        if n == 1:
            return (ONE, -self._rows[0][0])
        if n == 2:
            (a, b), (c, d) = self._rows
            return (ONE, -(a + d), a * d - b * c)
        return _hessenberg_char_poly(self._hessenberg())

    def _hessenberg(self) -> list[list[Scalar]]:
        """Similarity reduction to upper Hessenberg form by pivoted
        Gaussian elimination; entries below the subdiagonal are dead
        after elimination and never read again."""
        n = self.n
        w = [list(row) for row in self._rows]
        for col in range(n - 2):
            pivot_row = max(range(col + 1, n), key=lambda i: abs(w[i][col]))
            if abs(w[pivot_row][col]) == 0.0:
                continue
            p = col + 1
            if pivot_row != p:
                w[p], w[pivot_row] = w[pivot_row], w[p]
                for i in range(n):
                    w[i][p], w[i][pivot_row] = w[i][pivot_row], w[i][p]
            pivot = w[p][col]
            for i in range(col + 2, n):
                factor = w[i][col] / pivot
                if factor.is_exact_zero:
                    continue
                for j in range(col, n):
                    w[i][j] = w[i][j] - factor * w[p][j]
                for k in range(n):
                    w[k][p] = w[k][p] + factor * w[k][i]
        return w

    # -- structure probes -------------------------------------------------

    def is_upper_triangular(self) -> bool:
        return all(
            self._rows[i][j].is_zero for i in range(self.n) for j in range(i)
        )

    def is_lower_triangular(self) -> bool:
        return all(
            self._rows[i][j].is_zero for i in range(self.n) for j in range(i + 1, self.n)
        )

    def diagonal(self) -> tuple[Scalar, ...]:
        return tuple(self._rows[i][i] for i in range(self.n))

    def scalar_value(self, tol: float) -> Scalar | None:
        """The scalar c when this matrix equals c * I, else None.

        Fully exact matrices are tested exactly; otherwise deviation from
        the mean diagonal entry is compared against ``tol * scale``.
        """
        n = self.n
        diag = self.diagonal()
        if all(e.is_exact for row in self._rows for e in row):
            off_ok = all(
                self._rows[i][j].is_exact_zero
                for i in range(n)
                for j in range(n)
                if i != j
            )
            if off_ok and all(d == diag[0] for d in diag):
                return diag[0]
            return None
        mean = sum((d.z for d in diag), 0j) / n
        scale = 1.0 + self.max_abs()
        dev = max(
            abs(self._rows[i][j].z - (mean if i == j else 0j))
            for i in range(n)
            for j in range(n)
        )
        if dev <= tol * scale:
            return Scalar.inexact(mean)
        return None


def _hessenberg_char_poly(h: list[list[Scalar]]) -> tuple[Scalar, ...]:
    """det(xI - H) for upper Hessenberg H, expanded along the last column.

    With p_k the characteristic polynomial of the leading k-block and
    s_j = h[j+1][j] the subdiagonal,

        p_k = (x - h[k][k]) p_(k-1) - sum_i h[i][k] (prod_j s_j) p_(i-1)

    the product running over the subdiagonal between i and k.  Zero
    subdiagonal entries cut the sums off, so triangular input reproduces
    prod (x - h[i][i]) exactly.
    """
    n = len(h)
    polys: list[list[Scalar]] = [[ONE]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        hkk = h[k - 1][k - 1]
        cur = list(prev) + [ZERO]
        for idx, c in enumerate(prev):
            cur[idx + 1] = cur[idx + 1] - hkk * c
        subdiag_product = ONE
        for i in range(k - 1, 0, -1):
            subdiag_product = subdiag_product * h[i][i - 1]
            if subdiag_product.is_exact_zero:
                break
            term = h[i - 1][k - 1] * subdiag_product
            if term.is_exact_zero:
                continue
            pi = polys[i - 1]
            offset = len(cur) - len(pi)
            for idx, c in enumerate(pi):
                cur[offset + idx] = cur[offset + idx] - term * c
        polys.append(cur)
    return tuple(polys[n])


def _entry(e) -> Scalar:
    if isinstance(e, Scalar):
        return e
    s = Scalar._coerce(e)
    if s is None:
        raise TypeError(f"matrix entries must be Scalars or numbers, got {type(e).__name__}")
    return s


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Product of two square matrices of equal dimension."""
    return a @ b


def mat_inverse(a: Matrix, tol: float = SINGULARITY_TOL) -> Matrix:
    """Inverse of a matrix with |det| above the singularity tolerance."""
    return a.inverse(tol)


def char_poly(a: Matrix) -> tuple[Scalar, ...]:
    """Monic characteristic polynomial coefficients of ``a``."""
    return a.char_poly()
