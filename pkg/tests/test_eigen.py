import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logsplit import (
    BRANCH_BOUNDARY,
    Matrix,
    Scalar,
    ZeroArgument,
    ZeroEigenvalue,
    eigenvalues,
    normalized_arg,
)
from logsplit.eigen import _aberth_roots, _cluster_roots, _poly_eval
from conftest import rand_invertible, rand_well_conditioned

F = Fraction


class TestNormalizedArg:
    def test_positive_real_axis(self):
        assert normalized_arg(Scalar.exact(5), 1e-9) == 0

    def test_negative_real_axis(self):
        assert normalized_arg(Scalar.exact(-1), 1e-9) == F(1, 2)

    def test_polar_input_returns_stored_q_verbatim(self):
        assert normalized_arg(Scalar.polar(1, F(2, 3)), 1e-9) == F(2, 3)

    def test_float_input_approximates(self):
        z = Scalar.inexact(cmath.exp(2j * math.pi * (2 / 3)))
        q = normalized_arg(z, 1e-9)
        assert isinstance(q, float)
        assert abs(q - 2 / 3) < 1e-12

    def test_snap_to_branch_cut(self):
        assert normalized_arg(Scalar.inexact(1 + 1e-12j), 1e-9) == 0.0
        assert normalized_arg(Scalar.inexact(1 - 1e-12j), 1e-9) == 0.0
        assert normalized_arg(Scalar.inexact(1 + 1e-6j), 1e-9) > 0.0

    def test_zero_raises(self):
        with pytest.raises(ZeroArgument):
            normalized_arg(Scalar.exact(0), 1e-9)
        with pytest.raises(ZeroArgument):
            normalized_arg(Scalar.inexact(0j), 1e-9)


finite_complex = st.complex_numbers(
    min_magnitude=1e-6, max_magnitude=1e6, allow_nan=False, allow_infinity=False
)


@given(finite_complex)
def test_argument_complement_is_exact_after_snapping(z):
    # Snapped q(z) + q(conj z) lands on exactly 0 or exactly 1.
    tol = 1e-9
    q1 = normalized_arg(Scalar.inexact(z), tol)
    q2 = normalized_arg(Scalar.inexact(z.conjugate()), tol)
    assert q1 + q2 in (0.0, 1.0)


class TestEigenvaluesExact:
    def test_golden_generator(self, golden_pair):
        _, gen_s = golden_pair
        e = eigenvalues(gen_s)
        assert [(p.q, p.multiplicity) for p in e.pairs] == [(F(0), 1), (F(1, 2), 1)]
        assert e.is_exact

    def test_jordan_block_triangular_read(self):
        e = eigenvalues(Matrix([[5, 1, 0], [0, 5, 1], [0, 0, 5]]))
        assert len(e.pairs) == 1
        assert e.pairs[0].multiplicity == 3
        assert e.pairs[0].q == 0
        assert e.pairs[0].value.z == 5 + 0j

    def test_golden_infinity_monodromy_angles(self, golden_pair):
        gen_t, gen_s = golden_pair
        m = (gen_t @ gen_s).inverse()
        e = eigenvalues(m)
        assert [p.q for p in e.pairs] == [F(1, 3), F(2, 3)]
        assert all(abs(p.value) == 1.0 for p in e.pairs)

    def test_rotation_matrix_quarter_turns(self):
        e = eigenvalues(Matrix([[0, -1], [1, 0]]))
        assert [p.q for p in e.pairs] == [F(1, 4), F(3, 4)]

    def test_sixth_root_angles(self):
        # Companion of x^2 - x + 1, roots exp(+-i pi/3).
        e = eigenvalues(Matrix([[1, -1], [1, 0]]))
        assert [p.q for p in e.pairs] == [F(1, 6), F(5, 6)]

    def test_irrational_real_pair_keeps_exact_signs(self):
        # x^2 - x - 1: golden ratio and its negative-reciprocal partner.
        e = eigenvalues(Matrix([[1, 1], [1, 0]]))
        assert [p.q for p in e.pairs] == [F(0), F(1, 2)]
        phi = (1 + math.sqrt(5)) / 2
        assert abs(abs(e.pairs[0].value) - phi) < 1e-12
        assert abs(abs(e.pairs[1].value) - (phi - 1)) < 1e-12

    def test_pure_imaginary_pair_with_irrational_modulus(self):
        # x^2 + 6: roots +-i sqrt(6); q exact despite irrational modulus.
        e = eigenvalues(Matrix([[0, 2], [-3, 0]]))
        assert [p.q for p in e.pairs] == [F(1, 4), F(3, 4)]
        assert abs(abs(e.pairs[0].value) - math.sqrt(6)) < 1e-12

    def test_rational_double_root(self):
        e = eigenvalues(Matrix([[2, 1], [-F(1, 4), 3]]))
        # char poly x^2 - 5x + 25/4 = (x - 5/2)^2
        assert [(p.q, p.multiplicity) for p in e.pairs] == [(F(0), 2)]
        assert abs(e.pairs[0].value) == 2.5

    def test_exact_zero_eigenvalue_raises(self):
        with pytest.raises(ZeroEigenvalue):
            eigenvalues(Matrix([[0]]))
        with pytest.raises(ZeroEigenvalue):
            eigenvalues(Matrix([[1, 1], [1, 1]]))


class TestEigenvaluesFloat:
    def test_near_zero_root_raises(self):
        with pytest.raises(ZeroEigenvalue):
            eigenvalues(Matrix([[Scalar.inexact(1e-12 + 0j), Scalar.inexact(0j)],
                                [Scalar.inexact(0j), Scalar.inexact(1 + 0j)]]), 1e-7)

    def test_boundary_warning_near_positive_axis(self):
        m = Matrix([[Scalar.inexact(1 + 1e-11j), Scalar.inexact(0.5 + 0j)],
                    [Scalar.inexact(0j), Scalar.inexact(-1 + 0j)]])
        e = eigenvalues(m, 1e-9)
        assert BRANCH_BOUNDARY in e.warnings

    def test_ln_r_sum_matches_determinant(self):
        rng = random.Random(31)
        for n in (2, 3, 4, 6):
            a = rand_invertible(rng, n)
            e = eigenvalues(a, 1e-7)
            expected = math.log(abs(a.det()))
            assert abs(e.ln_r_sum() - expected) < 1e-9 * (1 + abs(expected))

    def test_similarity_invariance_of_the_multiset(self):
        rng = random.Random(47)
        for n in (2, 4, 5):
            a = rand_invertible(rng, n)
            s = rand_well_conditioned(rng, n)
            original = eigenvalues(a, 1e-7)
            conjugated = eigenvalues(s @ a @ s.inverse(), 1e-7)
            va = sorted((p.value.z for p in original.pairs for _ in range(p.multiplicity)),
                        key=lambda z: (z.real, z.imag))
            vb = sorted((p.value.z for p in conjugated.pairs for _ in range(p.multiplicity)),
                        key=lambda z: (z.real, z.imag))
            assert all(abs(x - y) < 1e-7 * (1 + abs(x)) for x, y in zip(va, vb))

    def test_char_poly_residual_at_reported_eigenvalues(self):
        rng = random.Random(53)
        for n in (3, 5, 6):
            a = rand_invertible(rng, n)
            coeffs = [c.z for c in a.char_poly()]
            bound = 1e-8 * (1 + max(abs(c) for c in coeffs))
            for p in eigenvalues(a, 1e-7).pairs:
                value, _, _ = _poly_eval(coeffs, p.value.z)
                assert abs(value) < bound

    def test_multiplicity_total_is_dimension(self):
        rng = random.Random(61)
        for n in (2, 3, 7):
            a = rand_invertible(rng, n)
            assert eigenvalues(a, 1e-7).dim == n

    def test_exact_complex_coefficients_fall_back_to_floats(self):
        # char poly x^2 - 2i x + (i^2 - 1) has non-real coefficients; the
        # rational route does not apply, but the values must still be right.
        i = Scalar.exact(0, 1)
        m = Matrix([[i, 1], [1, i]])
        e = eigenvalues(m, 1e-7)
        values = sorted((p.value.z for p in e.pairs), key=lambda z: z.real)
        assert abs(values[0] - (-1 + 1j)) < 1e-12
        assert abs(values[1] - (1 + 1j)) < 1e-12
        assert not e.is_exact


class TestAberth:
    def test_known_integer_roots(self):
        # (x-1)(x-2)...(x-6) expanded.
        coeffs = [1.0]
        for r in range(1, 7):
            coeffs = [a - r * b for a, b in zip(coeffs + [0.0], [0.0] + coeffs)]
        coeffs = [complex(c) for c in coeffs]
        roots = sorted(_aberth_roots(coeffs), key=lambda z: z.real)
        for found, expected in zip(roots, range(1, 7)):
            assert abs(found - expected) < 1e-8

    def test_multiple_root_cluster(self):
        # (x - 2)^3 (x + 1): the triple root comes back as a tight cluster.
        coeffs = [1.0, -5.0, 6.0, 4.0, -8.0]
        roots = _aberth_roots([complex(c) for c in coeffs])
        clusters = _cluster_roots(roots, 1e-4 * 3)
        sizes = sorted(len(c) for c in clusters)
        assert sizes == [1, 3]
        triple = max(clusters, key=len)
        centroid = sum(triple, 0j) / 3
        # A triple root is only conditioned to ~eps^(1/3); the centroid
        # recovers a few extra digits but no more.
        assert abs(centroid - 2.0) < 1e-4

    def test_smeared_multiple_root_is_flagged(self):
        from logsplit import EIGENVALUE_UNCERTAIN

        # Companion matrix of (x - 2)^3 (x + 1): the triple root smears
        # wider than the clustering tolerance, which must be reported.
        companion = Matrix(
            [[5, -6, -4, 8], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
        )
        e = eigenvalues(companion, 1e-7)
        assert EIGENVALUE_UNCERTAIN in e.warnings

    def test_deterministic(self):
        coeffs = [complex(1), complex(0.3, -1), complex(-2, 0.1), complex(0, 1.7)]
        assert _aberth_roots(coeffs) == _aberth_roots(coeffs)

    def test_exhausted_budget_raises(self):
        from logsplit import RootFindingDivergence

        coeffs = [complex(1), complex(0.3, -1), complex(-2, 0.1), complex(0, 1.7)]
        with pytest.raises(RootFindingDivergence):
            _aberth_roots(coeffs, budget=1)


class TestClusteringKnob:
    def test_tolerance_controls_multiplicity_grouping(self):
        near = Matrix([[Scalar.inexact(1 + 0j), Scalar.inexact(0j)],
                       [Scalar.inexact(0j), Scalar.inexact(1 + 5e-7 + 0j)]])
        tight = eigenvalues(near, 1e-9)
        assert [p.multiplicity for p in tight.pairs] == [1, 1]
        loose = eigenvalues(near, 1e-5)
        assert [p.multiplicity for p in loose.pairs] == [2]
