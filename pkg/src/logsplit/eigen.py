"""Eigenvalue multisets with branch-normalized arguments.

The classification never needs eigenvectors of anything larger than 2x2 or
a full Jordan form; the eigenvalue multiset with multiplicities and the
normalized argument q in [0, 1) of each value is the whole story.  Exactly
specified inputs travel an exact route (triangular read-off, and for 2x2 a
rational quadratic solve with recognition of the rational-cosine angles
0, 1/6, 1/4, 1/3, 1/2, ...); everything else goes through simultaneous
Aberth-Ehrlich root iteration on the characteristic polynomial.
"""

from __future__ import annotations

import cmath
import math
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import RootFindingDivergence, ZeroArgument, ZeroEigenvalue
from .matrix import Matrix
from .scalar import Scalar

#: Default multiplicity-clustering tolerance (mixed absolute-relative).
DEFAULT_CLUSTER_TOL = 1e-7

_EPS = sys.float_info.epsilon
_TWO_PI = 2.0 * math.pi
_HALF = Fraction(1, 2)

BRANCH_BOUNDARY = "BranchBoundary"
EIGENVALUE_UNCERTAIN = "EigenvalueUncertain"


def normalized_arg(z: Scalar | complex | float | int, tol: float) -> Fraction | float:
    """Normalized argument q in [0, 1) of a nonzero scalar, so that
    z = |z| * exp(2*pi*i*q).

    Exact polar inputs return their stored rational q verbatim.  Floating
    inputs within ``tol`` of the branch cut (near 0 or near 1) snap to
    exactly 0; the branch is half-open.
    """
    s = Scalar._coerce(z)
    if s is None:
        raise TypeError(f"cannot take the argument of {type(z).__name__}")
    if s.is_zero:
        raise ZeroArgument("the zero scalar has no argument")
    if s.q is not None:
        return s.q
    q, _ = _float_arg(s.z, tol)
    return q


def _float_arg(z: complex, tol: float) -> tuple[float, bool]:
    """(q, near_boundary) for a floating nonzero complex value.

    ``near_boundary`` is True when q lies within 10*tol of the branch cut,
    including values that snapped to 0 — floating data that close to the
    positive real axis cannot certify its branch.
    """
    q = math.atan2(z.imag, z.real) / _TWO_PI
    if q < 0.0:
        q += 1.0
    boundary = q <= 10.0 * tol or q >= 1.0 - 10.0 * tol
    if q <= tol or q >= 1.0 - tol:
        q = 0.0
    return q, boundary


@dataclass(frozen=True)
class EigenPair:
    value: Scalar
    multiplicity: int
    q: Fraction | float
    ln_r: float


@dataclass(frozen=True)
class EigenData:
    """Eigenvalue multiset of one local monodromy."""

    pairs: tuple[EigenPair, ...]
    warnings: tuple[str, ...] = field(default=())

    @property
    def dim(self) -> int:
        return sum(p.multiplicity for p in self.pairs)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(p.q, Fraction) for p in self.pairs)

    def q_sum(self) -> Fraction | float:
        total: Fraction | float = Fraction(0)
        for p in self.pairs:
            total = total + p.multiplicity * p.q
        return total

    def ln_r_sum(self) -> float:
        return sum(p.multiplicity * p.ln_r for p in self.pairs)


def eigenvalues(a: Matrix, tol: float = DEFAULT_CLUSTER_TOL) -> EigenData:
    """Eigenvalues of ``a`` clustered into multiplicity groups.

    Raises ZeroEigenvalue when a root is (numerically) zero and
    RootFindingDivergence when the iteration exhausts its budget without
    reaching the residual noise floor.
    """
    n = a.n
    if n == 1:
        return _from_values([a[0, 0]], tol)
    if a.is_upper_triangular() or a.is_lower_triangular():
        return _from_values(list(a.diagonal()), tol)
    coeffs = a.char_poly()
    if n == 2:
        exact = _exact_quadratic(coeffs[1], coeffs[2])
        if exact is not None:
            return _from_clusters(exact, tol)
    roots = _aberth_roots([c.z for c in coeffs])
    return _from_float_roots(coeffs, roots, tol)


# ---------------------------------------------------------------------------
# assembling EigenData


def _from_values(values: list[Scalar], tol: float) -> EigenData:
    clusters: list[list[Scalar]] = []
    for v in values:
        for group in clusters:
            if v.same_value(group[0], tol):
                group.append(v)
                break
        else:
            clusters.append([v])
    return _from_clusters([(g[0], len(g)) for g in clusters], tol)


def _from_clusters(clusters: list[tuple[Scalar, int]], tol: float) -> EigenData:
    pairs = []
    warnings: list[str] = []
    for value, mult in clusters:
        if value.is_exact:
            if value.is_exact_zero:
                raise ZeroEigenvalue("exact zero eigenvalue; monodromy not invertible")
            q: Fraction | float = value.q
        else:
            if abs(value) < tol:
                raise ZeroEigenvalue(
                    f"eigenvalue of modulus {abs(value):.3e} below tolerance {tol:.3e}"
                )
            q, boundary = _float_arg(value.z, tol)
            if boundary:
                warnings.append(BRANCH_BOUNDARY)
        pairs.append(EigenPair(value, mult, q, math.log(abs(value))))
    pairs.sort(key=lambda p: (float(p.q), abs(p.value)))
    return EigenData(tuple(pairs), tuple(dict.fromkeys(warnings)))


def _from_float_roots(coeffs, roots: list[complex], tol: float) -> EigenData:
    max_abs = max(abs(r) for r in roots)
    thresh = tol * (1.0 + max_abs)
    clusters = _cluster_roots(roots, thresh)
    coeffs_c = [c.z for c in coeffs]
    scalars: list[tuple[Scalar, int]] = []
    uncertain = False
    for members in clusters:
        centroid = sum(members, 0j) / len(members)
        # Newton-residual inclusion radius: honest uncertainty for smeared
        # (nearly multiple) roots that the fixed tolerance cannot merge.
        p, dp, _ = _poly_eval(coeffs_c, centroid)
        radius = len(coeffs_c) * abs(p) / max(abs(dp), 1e-300)
        if radius > 10.0 * thresh:
            uncertain = True
        scalars.append((Scalar.inexact(centroid), len(members)))
    data = _from_clusters(scalars, tol)
    if uncertain:
        warnings = tuple(dict.fromkeys(data.warnings + (EIGENVALUE_UNCERTAIN,)))
        data = EigenData(data.pairs, warnings)
    return data


def _cluster_roots(roots: list[complex], thresh: float) -> list[list[complex]]:
    n = len(roots)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) < thresh:
                parent[find(i)] = find(j)
    groups: dict[int, list[complex]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(roots[i])
    return list(groups.values())


# ---------------------------------------------------------------------------
# exact quadratic route


def _real_fraction(s: Scalar) -> Fraction | None:
    """Exact rational value of a Scalar lying on the real axis, else None."""
    if not s.is_exact:
        return None
    if s.is_exact_zero:
        return Fraction(0)
    if s.q == 0:
        return Fraction(abs(s))
    if s.q == _HALF:
        return -Fraction(abs(s))
    return None


def _fraction_sqrt(f: Fraction) -> Fraction | None:
    num, den = f.numerator, f.denominator
    a, b = isqrt(num), isqrt(den)
    if a * a == num and b * b == den:
        return Fraction(a, b)
    return None


def _exact_quadratic(b_s: Scalar, c_s: Scalar) -> list[tuple[Scalar, int]] | None:
    """Roots of x^2 + b x + c for exact real-rational b, c.

    Real roots always carry an exact argument (0 or 1/2: the sign is
    decided by rational comparisons, never by the float square root).
    Complex pairs get an exact q only for the rational-cosine angles
    (Niven: cos(2*pi*q) rational forces cos in {0, +-1/2, +-1}); other
    angles are irrational and fall back to floats.
    """
    b = _real_fraction(b_s)
    c = _real_fraction(c_s)
    if b is None or c is None:
        return None
    if c == 0:
        raise ZeroEigenvalue("exact zero eigenvalue; monodromy not invertible")
    disc = b * b - 4 * c
    if disc == 0:
        return [(_rational_scalar(-b / 2), 2)]
    if disc > 0:
        root = _fraction_sqrt(disc)
        if root is not None:
            return [(_rational_scalar((-b + root) / 2), 1), (_rational_scalar((-b - root) / 2), 1)]
        # Irrational real pair: exact signs, float magnitudes.
        s_f = math.sqrt(float(disc))
        t = (-float(b) - s_f) / 2 if b >= 0 else (-float(b) + s_f) / 2
        other = float(c) / t
        hi, lo = max(t, other), min(t, other)
        sign_hi = 1 if (b <= 0 or c < 0) else -1  # sign of (-b + sqrt(disc))/2
        sign_lo = 1 if (b < 0 and c > 0) else -1
        return [
            (Scalar.polar(abs(hi), 0 if sign_hi > 0 else _HALF), 1),
            (Scalar.polar(abs(lo), 0 if sign_lo > 0 else _HALF), 1),
        ]
    # Conjugate pair x +- iy with x rational, y > 0, and |root|^2 = c.
    x = -b / 2
    y = math.sqrt(float(-disc)) / 2
    if x == 0:
        r = math.sqrt(float(c))
        return [(Scalar.polar(r, Fraction(1, 4)), 1), (Scalar.polar(r, Fraction(3, 4)), 1)]
    r_frac = _fraction_sqrt(c)
    if r_frac is not None:
        ratio = x / r_frac
        table = {Fraction(1, 2): Fraction(1, 6), Fraction(-1, 2): Fraction(1, 3)}
        if ratio in table:
            q = table[ratio]
            r = float(r_frac)
            return [(Scalar.polar(r, q), 1), (Scalar.polar(r, 1 - q), 1)]
    return [
        (Scalar.inexact(complex(float(x), y)), 1),
        (Scalar.inexact(complex(float(x), -y)), 1),
    ]


def _rational_scalar(v: Fraction) -> Scalar:
    if v == 0:
        raise ZeroEigenvalue("exact zero eigenvalue; monodromy not invertible")
    return Scalar.polar(abs(float(v)), 0 if v > 0 else _HALF)


# ---------------------------------------------------------------------------
# Aberth-Ehrlich iteration


def _poly_eval(coeffs: list[complex], x: complex) -> tuple[complex, complex, float]:
    """Horner evaluation of p and p' with a running roundoff bound on p."""
    b = coeffs[0]
    d = 0j
    err = abs(b)
    ax = abs(x)
    for c in coeffs[1:]:
        d = d * x + b
        b = b * x + c
        err = abs(b) + ax * err
    return b, d, err * _EPS


def _aberth_roots(coeffs: list[complex], budget: int = 200) -> list[complex]:
    """All roots of a monic polynomial by simultaneous Aberth iteration.

    Deterministic: initial points on the Cauchy-bound circle with a fixed
    angular offset, and a seeded jitter on stagnation.
    """
    n = len(coeffs) - 1
    if n == 1:
        return [-coeffs[1]]
    radius = 1.0 + max(abs(c) for c in coeffs[1:])
    z = [radius * cmath.exp(1j * (_TWO_PI * k / n + 0.4)) for k in range(n)]
    done = [False] * n
    rng = random.Random(0x5EEDED)
    best_resid = math.inf
    stall = 0
    for _ in range(budget):
        moved = 0.0
        resid = 0.0
        for i in range(n):
            p, dp, noise = _poly_eval(coeffs, z[i])
            resid += abs(p)
            if abs(p) <= noise:
                done[i] = True
                continue
            done[i] = False
            if dp == 0:
                z[i] += (1.0 + abs(z[i])) * 1e-6 * (1 + 1j)
                moved = math.inf
                continue
            newton = p / dp
            repulse = 0j
            collided = False
            for j in range(n):
                if j == i:
                    continue
                dz = z[i] - z[j]
                if dz == 0:
                    collided = True
                    break
                repulse += 1.0 / dz
            if collided:
                z[i] += (1.0 + abs(z[i])) * 1e-6 * (1 - 1j)
                moved = math.inf
                continue
            denom = 1.0 - newton * repulse
            w = newton if denom == 0 else newton / denom
            z[i] -= w
            moved = max(moved, abs(w) / (1.0 + abs(z[i])))
        if all(done) or moved < 64.0 * _EPS:
            return z
        if resid < 0.5 * best_resid:
            best_resid = resid
            stall = 0
        else:
            stall += 1
            if stall >= 30:
                for i in range(n):
                    if not done[i]:
                        angle = rng.random() * _TWO_PI
                        z[i] += 0.05 * (1.0 + abs(z[i])) * cmath.exp(1j * angle)
                stall = 0
                best_resid = math.inf
    for i in range(n):
        p, _, noise = _poly_eval(coeffs, z[i])
        if abs(p) > 1e3 * noise:
            raise RootFindingDivergence(
                f"root iteration exhausted {budget} iterations with residual {abs(p):.3e}"
            )
    return z
