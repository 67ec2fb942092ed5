import random
from fractions import Fraction

import pytest

from logsplit import (
    DimensionMismatch,
    Matrix,
    Representation,
    Scalar,
    SingularMatrix,
    build,
    conjugate,
    monodromy_at_infinity,
)
from conftest import rand_invertible, rand_well_conditioned

F = Fraction


class TestInfinityMonodromy:
    def test_scalar_self_inverse(self):
        assert monodromy_at_infinity([Matrix([[-1]])]) == Matrix([[-1]])

    def test_golden_pair(self, golden_pair):
        expected = Matrix([[F(-1, 2), -1], [F(3, 4), F(-1, 2)]])
        assert monodromy_at_infinity(list(golden_pair)) == expected

    def test_product_collapses(self):
        rng = random.Random(3)
        a = rand_invertible(rng, 3)
        m = monodromy_at_infinity([a, a.inverse()])
        assert m.close_to(Matrix.identity(3), 1e-9)


class TestBuild:
    def test_trivial_two_puncture_character(self):
        prep = build(Representation(2, (Matrix([[1]]),)))
        assert [p.q for e in prep.local_eigen for p in e.pairs] == [F(0), F(0)]

    def test_golden_branch_multisets(self, golden_rep):
        prep = build(golden_rep)
        multisets = [sorted(p.q for p in e.pairs) for e in prep.local_eigen]
        assert multisets == [
            [F(0), F(1, 2)],
            [F(0), F(1, 2)],
            [F(1, 3), F(2, 3)],
        ]

    def test_minus_one_character_pair(self):
        prep = build(Representation(3, (Matrix([[-1]]), Matrix([[-1]]))))
        assert prep.infinity_monodromy == Matrix([[1]])
        qs = [[p.q for p in e.pairs] for e in prep.local_eigen]
        assert qs == [[F(1, 2)], [F(1, 2)], [F(0)]]

    def test_local_product_closes_up(self):
        rng = random.Random(13)
        for punctures in (2, 3):
            gens = tuple(rand_invertible(rng, 3) for _ in range(punctures - 1))
            prep = build(Representation(punctures, gens))
            product = prep.local_monodromies()[0]
            for m in prep.local_monodromies()[1:]:
                product = product @ m
            assert product.close_to(Matrix.identity(3), 1e-8)
            assert abs(sum(e.ln_r_sum() for e in prep.local_eigen)) < 1e-8

    def test_eigen_order_matches_punctures(self, golden_rep):
        prep = build(golden_rep)
        assert len(prep.local_eigen) == 3
        assert prep.punctures == 3
        assert prep.dim == 2


class TestConjugate:
    def test_identity_conjugation(self, golden_rep):
        assert conjugate(golden_rep, Matrix.identity(2)) == golden_rep

    def test_permutation_swaps_diagonal(self):
        rep = Representation(2, (Matrix([[2, 0], [0, 3]]),))
        swap = Matrix([[0, 1], [1, 0]])
        assert conjugate(rep, swap).generators[0] == Matrix([[3, 0], [0, 2]])

    def test_branch_multisets_are_invariant(self):
        rng = random.Random(17)
        gens = (rand_invertible(rng, 2), rand_invertible(rng, 2))
        rep = Representation(3, gens)
        s = rand_well_conditioned(rng, 2)
        original = build(rep)
        conjugated = build(conjugate(rep, s))
        for ea, eb in zip(original.local_eigen, conjugated.local_eigen):
            qa = sorted(float(p.q) for p in ea.pairs for _ in range(p.multiplicity))
            qb = sorted(float(p.q) for p in eb.pairs for _ in range(p.multiplicity))
            assert all(abs(x - y) < 1e-7 for x, y in zip(qa, qb))

    def test_dimension_check(self, golden_rep):
        with pytest.raises(DimensionMismatch):
            conjugate(golden_rep, Matrix.identity(3))


class TestValidation:
    def test_wrong_generator_count(self):
        with pytest.raises(DimensionMismatch):
            Representation(3, (Matrix([[1]]),))

    def test_mismatched_dimensions(self):
        with pytest.raises(DimensionMismatch):
            Representation(3, (Matrix([[1]]), Matrix.identity(2)))

    def test_unsupported_puncture_count(self):
        with pytest.raises(DimensionMismatch):
            Representation(4, (Matrix([[1]]), Matrix([[1]]), Matrix([[1]])))

    def test_singular_generator(self):
        with pytest.raises(SingularMatrix):
            Representation(2, (Matrix([[1, 1], [1, 1]]),))

    def test_near_singular_float_generator(self):
        m = Matrix([[Scalar.inexact(1 + 0j), Scalar.inexact(1 + 0j)],
                    [Scalar.inexact(1 + 0j), Scalar.inexact(1 + 1e-15j)]])
        with pytest.raises(SingularMatrix):
            Representation(2, (m,))
