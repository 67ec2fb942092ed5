"""Splitting type of the extended bundle: the classification theorems.

Two punctures: the bundle splits as O(-1) once per eigenvalue of the
generator with nonzero branch argument, O(0) for the rest, in any
dimension.  Three punctures: characters split by the region of
(q0, q1); two-dimensional representations split by reducibility — an
irreducible pair balances around c1/2, a decomposable pair is the direct
sum of its character summands, and a uniquely-reducible pair splits as
its sub/quotient line bundles except in the documented (-2, 0) case,
which is reported with both possible answers rather than resolved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction

from .chern import DEFAULT_INTEGRALITY_TOL, ChernResult, ohtsuki_c1
from .eigen import DEFAULT_CLUSTER_TOL, eigenvalues, normalized_arg
from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    OutOfBranch,
    UnsupportedCase,
)
from .matrix import Matrix
from .representation import PuncturedRepresentation, Representation, build
from .scalar import Scalar


@unique
class ClassificationKind(Enum):
    CHARACTER = "Character"
    TWO_PUNCTURE_GENERAL = "TwoPunctureGeneral"
    THREE_CHARACTER = "ThreeCharacter"
    THREE_DIM2_DECOMPOSABLE = "ThreeDim2Decomposable"
    THREE_DIM2_REDUCIBLE_SPLIT = "ThreeDim2ReducibleSplit"
    THREE_DIM2_REDUCIBLE_AMBIGUOUS = "ThreeDim2ReducibleAmbiguous"
    THREE_DIM2_IRREDUCIBLE = "ThreeDim2Irreducible"


@dataclass(frozen=True)
class SplittingType:
    """Twisting parameters of the splitting, sorted descending."""

    roots: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(int(r) for r in self.roots))
        if list(self.roots) != sorted(self.roots, reverse=True):
            raise InternalInconsistency("splitting roots must be sorted descending")

    @property
    def dim(self) -> int:
        return len(self.roots)

    @property
    def degree(self) -> int:
        return sum(self.roots)


@dataclass(frozen=True)
class InvariantLine:
    direction: tuple[Scalar, Scalar]
    sub_eigen_pair: tuple[Scalar, Scalar]
    quotient_eigen_pair: tuple[Scalar, Scalar]


@dataclass(frozen=True)
class InvariantLineReport:
    lines: tuple[InvariantLine, ...]
    decomposable: bool


@dataclass(frozen=True)
class ClassificationReport:
    kind: ClassificationKind
    c1: int
    candidates: tuple[SplittingType, ...]
    warnings: tuple[str, ...]
    chern: ChernResult

    def __post_init__(self):
        ambiguous = self.kind is ClassificationKind.THREE_DIM2_REDUCIBLE_AMBIGUOUS
        if (len(self.candidates) == 2) != ambiguous:
            raise InternalInconsistency(
                "exactly two candidates are allowed iff the report is ambiguous"
            )
        for cand in self.candidates:
            if cand.degree != self.c1:
                raise InternalInconsistency(
                    f"candidate {cand.roots} sums to {cand.degree}, expected c1 = {self.c1}"
                )

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) == 2


def character_root(q0: Fraction | float | int, q1: Fraction | float | int) -> int:
    """Root of a three-puncture character with branch data (q0, q1).

    0 at the origin, -1 on the closed region q0 + q1 <= 1 minus the
    origin, -2 above the diagonal q0 + q1 = 1.
    """
    for q in (q0, q1):
        if not 0 <= q < 1:
            raise OutOfBranch(f"branch datum {q!r} outside [0, 1)")
    if q0 == 0 and q1 == 0:
        return 0
    if q0 + q1 <= 1:
        return -1
    return -2


# ---------------------------------------------------------------------------
# invariant lines of a 2x2 pair


def invariant_lines(m0: Matrix, m1: Matrix, tol: float = DEFAULT_CLUSTER_TOL) -> InvariantLineReport:
    """Common eigendirections of an invertible 2x2 pair.

    An empty line list means the pair is irreducible; two independent
    lines mean it decomposes into characters.  Each line reports the pair
    of eigenvalues acting on it and the complementary (quotient) pair.
    Exact inputs are decided exactly; float inputs use a scale-invariant
    cross-product test.
    """
    if m0.n != 2 or m1.n != 2:
        raise DimensionMismatch("invariant-line analysis requires 2x2 matrices")
    s0 = m0.scalar_value(tol)
    s1 = m1.scalar_value(tol)
    det0, det1 = m0.det(), m1.det()

    if s0 is not None and s1 is not None:
        e1 = (Scalar.exact(1), Scalar.exact(0))
        e2 = (Scalar.exact(0), Scalar.exact(1))
        lines = tuple(
            InvariantLine(direction, (s0, s1), (s0, s1)) for direction in (e1, e2)
        )
        return InvariantLineReport(lines, True)

    if s0 is not None:
        # Every direction is m0-invariant; the candidates are m1's.
        lines = []
        for lam1, v in _eigendirections(m1, tol):
            lines.append(InvariantLine(v, (s0, lam1), (s0, det1 / lam1)))
        return InvariantLineReport(tuple(lines), len(lines) >= 2)

    lines = []
    for lam0, v in _eigendirections(m0, tol):
        w = m1.apply(v)
        if not _parallel(v, w, tol):
            continue
        lam1 = _action_ratio(v, w)
        lines.append(InvariantLine(v, (lam0, lam1), (det0 / lam0, det1 / lam1)))
    return InvariantLineReport(tuple(lines), len(lines) >= 2)


def _eigendirections(m: Matrix, tol: float) -> list[tuple[Scalar, tuple[Scalar, Scalar]]]:
    """Distinct eigenvalues of a non-scalar 2x2 with one direction each."""
    (a, b), (c, d) = m.rows
    out = []
    for pair in eigenvalues(m, tol).pairs:
        lam = pair.value
        # Kernel of (m - lam I): orthogonal complements of its two rows.
        u1 = (b, lam - a)
        u2 = (lam - d, c)
        v = u1 if max(abs(u1[0]), abs(u1[1])) >= max(abs(u2[0]), abs(u2[1])) else u2
        if max(abs(v[0]), abs(v[1])) == 0.0:
            continue  # scalar matrix; handled by the caller
        out.append((lam, _normalize_direction(v)))
    return out


def _normalize_direction(v: tuple[Scalar, Scalar]) -> tuple[Scalar, Scalar]:
    # Directions are projective: the leading slot becomes a literal exact 1
    # (not v_i / v_i, which would inherit the scale factor's inexactness).
    one = Scalar.exact(1)
    if abs(v[0]) >= abs(v[1]):
        return (one, v[1] / v[0])
    return (v[0] / v[1], one)


def _parallel(v: tuple[Scalar, Scalar], w: tuple[Scalar, Scalar], tol: float) -> bool:
    cross = v[0] * w[1] - v[1] * w[0]
    if cross.is_exact:
        return cross.is_exact_zero
    norm_v = math.hypot(abs(v[0]), abs(v[1]))
    norm_w = math.hypot(abs(w[0]), abs(w[1]))
    return abs(cross.z) < tol * norm_v * norm_w


def _action_ratio(v: tuple[Scalar, Scalar], w: tuple[Scalar, Scalar]) -> Scalar:
    i = 0 if abs(v[0]) >= abs(v[1]) else 1
    return w[i] / v[i]


# ---------------------------------------------------------------------------
# classification operations


def split_two_punctures(
    prep: PuncturedRepresentation,
    tol: float = DEFAULT_CLUSTER_TOL,
    integrality_tol: float = DEFAULT_INTEGRALITY_TOL,
) -> ClassificationReport:
    """Splitting on two punctures, any dimension: one O(-1) per
    eigenvalue of the generator off the positive real axis."""
    if prep.punctures != 2:
        raise DimensionMismatch("two-puncture splitting requires 2 punctures")
    chern = ohtsuki_c1(prep, integrality_tol)
    gen_eigen = prep.local_eigen[0]
    k = sum(p.multiplicity for p in gen_eigen.pairs if p.q != 0)
    if k != -chern.c1:
        raise InternalInconsistency(
            f"eigenvalue count with q != 0 is {k} but -c1 = {-chern.c1}"
        )
    n = prep.dim
    roots = SplittingType((0,) * (n - k) + (-1,) * k)
    kind = (
        ClassificationKind.CHARACTER if n == 1 else ClassificationKind.TWO_PUNCTURE_GENERAL
    )
    return ClassificationReport(kind, chern.c1, (roots,), prep.warnings(), chern)


def classify_dim2(
    prep: PuncturedRepresentation,
    tol: float = DEFAULT_CLUSTER_TOL,
    integrality_tol: float = DEFAULT_INTEGRALITY_TOL,
) -> ClassificationReport:
    """Three punctures, dimension 2: the full reducibility case split."""
    if prep.punctures != 3 or prep.dim != 2:
        raise DimensionMismatch("classify_dim2 requires 3 punctures and dimension 2")
    chern = ohtsuki_c1(prep, integrality_tol)
    zeta = chern.c1
    warnings = prep.warnings()
    m0, m1 = prep.rep.generators
    report = invariant_lines(m0, m1, tol)

    if not report.lines:
        if zeta % 2 == 0:
            roots = SplittingType((zeta // 2, zeta // 2))
        else:
            roots = SplittingType(((zeta + 1) // 2, (zeta - 1) // 2))
        return ClassificationReport(
            ClassificationKind.THREE_DIM2_IRREDUCIBLE, zeta, (roots,), warnings, chern
        )

    if report.decomposable:
        summand_roots = []
        for line in report.lines[:2]:
            q0 = normalized_arg(line.sub_eigen_pair[0], tol)
            q1 = normalized_arg(line.sub_eigen_pair[1], tol)
            summand_roots.append(character_root(q0, q1))
        roots = SplittingType(tuple(sorted(summand_roots, reverse=True)))
        _check_degree(roots, zeta)
        return ClassificationReport(
            ClassificationKind.THREE_DIM2_DECOMPOSABLE, zeta, (roots,), warnings, chern
        )

    line = report.lines[0]
    xi_sub = character_root(
        normalized_arg(line.sub_eigen_pair[0], tol),
        normalized_arg(line.sub_eigen_pair[1], tol),
    )
    xi_quot = character_root(
        normalized_arg(line.quotient_eigen_pair[0], tol),
        normalized_arg(line.quotient_eigen_pair[1], tol),
    )
    if (xi_sub, xi_quot) == (-2, 0):
        if zeta != -2:
            raise InternalInconsistency(
                f"flag pair (-2, 0) forces c1 = -2, computed {zeta}"
            )
        candidates = (SplittingType((-1, -1)), SplittingType((0, -2)))
        return ClassificationReport(
            ClassificationKind.THREE_DIM2_REDUCIBLE_AMBIGUOUS,
            zeta,
            candidates,
            warnings,
            chern,
        )
    roots = SplittingType(tuple(sorted((xi_sub, xi_quot), reverse=True)))
    _check_degree(roots, zeta)
    return ClassificationReport(
        ClassificationKind.THREE_DIM2_REDUCIBLE_SPLIT, zeta, (roots,), warnings, chern
    )


def _classify_three_character(
    prep: PuncturedRepresentation,
    tol: float,
    integrality_tol: float,
) -> ClassificationReport:
    chern = ohtsuki_c1(prep, integrality_tol)
    q0 = prep.local_eigen[0].pairs[0].q
    q1 = prep.local_eigen[1].pairs[0].q
    root = character_root(q0, q1)
    if root != chern.c1:
        raise InternalInconsistency(
            f"character root {root} disagrees with c1 = {chern.c1}"
        )
    return ClassificationReport(
        ClassificationKind.THREE_CHARACTER,
        chern.c1,
        (SplittingType((root,)),),
        prep.warnings(),
        chern,
    )


def classify(
    rep: Representation,
    tol: float = DEFAULT_CLUSTER_TOL,
    integrality_tol: float = DEFAULT_INTEGRALITY_TOL,
) -> ClassificationReport:
    """Full pipeline: build the representation, compute c1, and dispatch
    on punctures and dimension."""
    prep = build(rep, tol)
    if prep.punctures == 2:
        return split_two_punctures(prep, tol, integrality_tol)
    if prep.dim == 1:
        return _classify_three_character(prep, tol, integrality_tol)
    if prep.dim == 2:
        return classify_dim2(prep, tol, integrality_tol)
    raise UnsupportedCase(
        f"three punctures with dimension {prep.dim} >= 3 is outside the "
        "implemented classification"
    )


def _check_degree(roots: SplittingType, zeta: int) -> None:
    if roots.degree != zeta:
        raise InternalInconsistency(
            f"splitting {roots.roots} sums to {roots.degree}, expected c1 = {zeta}"
        )
