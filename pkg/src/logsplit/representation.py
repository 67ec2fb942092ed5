"""Monodromy representations of the 2- and 3-punctured projective line.

A representation is stored through the images of the free-group generators;
the loop around infinity carries the inverse of their ordered product, so
the local monodromies at all punctures multiply to the identity.  Building
a representation extracts the eigenvalue data at every puncture and checks
that closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eigen import DEFAULT_CLUSTER_TOL, EigenData, eigenvalues
from .errors import DimensionMismatch, ProductNotIdentity, SingularMatrix
from .matrix import SINGULARITY_TOL, Matrix

#: Entrywise closure tolerance for the product of all local monodromies.
CLOSURE_TOL = 1e-8

SUPPORTED_PUNCTURES = (2, 3)


@dataclass(frozen=True)
class Representation:
    """Images of the fundamental-group generators, one per finite puncture."""

    punctures: int
    generators: tuple[Matrix, ...]

    def __post_init__(self):
        if self.punctures not in SUPPORTED_PUNCTURES:
            raise DimensionMismatch(
                f"punctures must be one of {SUPPORTED_PUNCTURES}, got {self.punctures}"
            )
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if len(gens) != self.punctures - 1:
            raise DimensionMismatch(
                f"{self.punctures} punctures require {self.punctures - 1} generators, "
                f"got {len(gens)}"
            )
        dim = gens[0].n
        if any(g.n != dim for g in gens):
            raise DimensionMismatch("all generators must share one dimension")
        for idx, g in enumerate(gens):
            if abs(g.det()) <= SINGULARITY_TOL * (1.0 + g.max_abs()) ** dim:
                raise SingularMatrix(f"generator {idx} is singular")

    @property
    def dim(self) -> int:
        return self.generators[0].n


@dataclass(frozen=True)
class PuncturedRepresentation:
    """A representation together with its puncture-by-puncture residue data.

    ``local_eigen`` is ordered like the punctures: 0, [1,] infinity.
    """

    rep: Representation
    infinity_monodromy: Matrix
    local_eigen: tuple[EigenData, ...]

    @property
    def punctures(self) -> int:
        return self.rep.punctures

    @property
    def dim(self) -> int:
        return self.rep.dim

    def local_monodromies(self) -> tuple[Matrix, ...]:
        return self.rep.generators + (self.infinity_monodromy,)

    def warnings(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for e in self.local_eigen:
            for w in e.warnings:
                seen.setdefault(w)
        return tuple(seen)


def monodromy_at_infinity(generators: tuple[Matrix, ...] | list[Matrix]) -> Matrix:
    """Inverse of the left-to-right product of the generator images."""
    gens = list(generators)
    product = gens[0]
    for g in gens[1:]:
        product = product @ g
    return product.inverse()


def build(rep: Representation, tol: float = DEFAULT_CLUSTER_TOL) -> PuncturedRepresentation:
    """Complete a representation with its infinity monodromy and local
    eigenvalue data, asserting that the local monodromies close up.
    """
    m_inf = monodromy_at_infinity(rep.generators)
    locals_ = rep.generators + (m_inf,)

    product = locals_[0]
    for m in locals_[1:]:
        product = product @ m
    if not product.close_to(Matrix.identity(rep.dim), CLOSURE_TOL):
        raise ProductNotIdentity("local monodromies do not multiply to the identity")

    eigen = tuple(eigenvalues(m, tol) for m in locals_)

    ln_sum = sum(e.ln_r_sum() for e in eigen)
    ln_scale = 1.0 + sum(abs(p.ln_r) * p.multiplicity for e in eigen for p in e.pairs)
    if abs(ln_sum) > CLOSURE_TOL * ln_scale:
        raise ProductNotIdentity(
            f"determinant moduli do not close up: sum of ln|lambda| = {ln_sum:.3e}"
        )
    return PuncturedRepresentation(rep, m_inf, eigen)


def conjugate(rep: Representation, s: Matrix) -> Representation:
    """Replace every generator image M by s M s^-1."""
    if s.n != rep.dim:
        raise DimensionMismatch("conjugating matrix dimension does not match")
    s_inv = s.inverse()
    return Representation(rep.punctures, tuple(s @ g @ s_inv for g in rep.generators))
