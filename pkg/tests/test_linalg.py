"""Exact linear algebra kernel: row reduction, spectra, restricted powers."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import triadtet as tt
from triadtet import RMatrix, Subspace

rationals = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
)


def square_matrices(max_dim: int = 4):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda n: st.lists(
            st.lists(rationals, min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        ).map(RMatrix)
    )


def test_rref_identity():
    m = RMatrix.identity(3)
    reduced, rank = tt.rref(m)
    assert reduced == m
    assert rank == 3


def test_rref_zero():
    m = RMatrix.zero(2, 3)
    reduced, rank = tt.rref(m)
    assert reduced == m
    assert rank == 0


def test_rref_rank_deficient():
    reduced, rank = tt.rref(RMatrix([[1, 2], [2, 4]]))
    assert reduced == RMatrix([[1, 2], [0, 0]])
    assert rank == 1


@given(square_matrices())
def test_rref_idempotent(m):
    reduced, rank = tt.rref(m)
    again, rank2 = tt.rref(reduced)
    assert again == reduced
    assert rank2 == rank


def test_kernel_identity():
    assert tt.kernel_basis(RMatrix.identity(4)) == Subspace.zero(4)


def test_kernel_rank_one():
    ker = tt.kernel_basis(RMatrix([[1, 2], [2, 4]]))
    assert ker == Subspace.from_vectors(2, [(-2, 1)])
    assert ker.dim == 1


def test_kernel_zero_matrix():
    assert tt.kernel_basis(RMatrix.zero(2)) == Subspace.full(2)


@given(square_matrices())
def test_kernel_members_and_dimension(m):
    ker = tt.kernel_basis(m)
    for v in ker.basis:
        assert m.apply(v) == (Fraction(0),) * m.rows
    _, rank = tt.rref(m)
    assert ker.dim == m.cols - rank


@given(
    st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=1, max_size=3),
    st.permutations(range(3)),
    rationals.filter(bool),
)
def test_subspace_canonical_under_presentation(vectors, perm, scale):
    direct = Subspace.from_vectors(3, vectors)
    mangled = [vectors[i] for i in perm if i < len(vectors)]
    mangled = [tuple(scale * x for x in v) for v in mangled] + vectors
    assert Subspace.from_vectors(3, mangled) == direct


def test_subspace_coordinates_and_containment():
    s = Subspace.from_vectors(3, [(1, 0, 1), (0, 2, 0)])
    assert s.contains((2, 2, 2))
    assert s.coordinates((2, 2, 2)) is not None
    assert not s.contains((1, 0, 0))
    assert s.coordinates((1, 0, 0)) is None
    assert s.contains_subspace(Subspace.from_vectors(3, [(3, -2, 3)]))


def test_char_poly_diagonal():
    assert tt.char_poly(RMatrix.diagonal([1, 2])) == (1, -3, 2)


def test_char_poly_nilpotent():
    assert tt.char_poly(RMatrix([[0, 1], [0, 0]])) == (1, 0, 0)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def test_char_poly_counterexample_third_matrix(counterexample):
    doc, _ = counterexample
    # (x+3)(x+1)^2(x-1)^2(x-3), multiplied out independently
    expected = (Fraction(1),)
    for root in (-3, -1, -1, 1, 1, 3):
        expected = _poly_mul(expected, (Fraction(1), Fraction(-root)))
    assert tt.char_poly(doc.a_dprime) == expected
    assert expected == (1, 0, -11, 0, 19, 0, -9)


def test_char_poly_rejects_non_square():
    with pytest.raises(ValueError):
        tt.char_poly(RMatrix.zero(2, 3))


@given(square_matrices())
def test_cayley_hamilton(m):
    coeffs = tt.char_poly(m)
    acc = RMatrix.zero(m.rows)
    power = RMatrix.identity(m.rows)
    for c in reversed(coeffs):
        acc = acc + c * power
        power = power * m
    assert acc.is_zero()


def test_rational_roots_with_multiplicity():
    poly = (Fraction(1),)
    for root in (Fraction(-3), Fraction(-3), Fraction(1, 2)):
        poly = _poly_mul(poly, (Fraction(1), -root))
    roots, leftover = tt.rational_roots(poly)
    assert roots == [(Fraction(-3), 2), (Fraction(1, 2), 1)]
    assert leftover == 0


def test_rational_roots_irreducible_quadratic():
    roots, leftover = tt.rational_roots((Fraction(1), Fraction(0), Fraction(-2)))
    assert roots == []
    assert leftover == 2


def test_rational_roots_zero_root():
    roots, leftover = tt.rational_roots((Fraction(1), Fraction(0), Fraction(0)))
    assert roots == [(Fraction(0), 2)]
    assert leftover == 0


def test_eigen_decompose_diagonal():
    decomp = tt.eigen_decompose(RMatrix.diagonal([-1, 1]))
    assert decomp.diagonalizable
    assert decomp.eigenvalues == (-1, 1)
    assert all(p.algebraic_multiplicity == 1 for p in decomp.pairs)


def test_eigen_decompose_jordan_block():
    decomp = tt.eigen_decompose(RMatrix([[0, 1], [0, 0]]))
    assert not decomp.diagonalizable
    (pair,) = decomp.pairs
    assert pair.value == 0
    assert pair.algebraic_multiplicity == 2
    assert pair.geometric_multiplicity == 1


def test_eigen_decompose_counterexample_first_matrix(counterexample):
    doc, _ = counterexample
    decomp = tt.eigen_decompose(doc.a)
    assert decomp.diagonalizable
    assert decomp.eigenvalues == (-3, -1, 1, 3)
    assert [p.algebraic_multiplicity for p in decomp.pairs] == [1, 2, 2, 1]


def test_eigen_decompose_irrational_spectrum():
    with pytest.raises(tt.IrrationalSpectrum):
        tt.eigen_decompose(RMatrix([[0, 1], [2, 0]]))


def test_commutator_self_vanishes():
    m = RMatrix([[1, 2], [3, 4]])
    assert tt.commutator(m, m).is_zero()


def test_commutator_sl2_relation():
    action = tt.make_vd(1)
    assert tt.commutator(action.h, action.f) == Fraction(-2) * action.f


def test_commutator_rejects_mismatched_sizes():
    with pytest.raises(ValueError):
        tt.commutator(RMatrix.zero(2), RMatrix.zero(3))


@given(square_matrices(3), square_matrices(3))
def test_commutator_antisymmetric(x, y):
    if x.rows != y.rows:
        return
    assert tt.commutator(x, y) == -tt.commutator(y, x)


@given(square_matrices(3), square_matrices(3), square_matrices(3), rationals, rationals)
def test_commutator_bilinear(x, y, z, c1, c2):
    if not (x.rows == y.rows == z.rows):
        return
    left = tt.commutator(x, c1 * y + c2 * z)
    assert left == c1 * tt.commutator(x, y) + c2 * tt.commutator(x, z)


def test_restricted_power_k_zero_identity():
    dom = Subspace.from_vectors(2, [(1, 0)])
    ok, witness = tt.restricted_power_bijective(RMatrix.zero(2), 0, dom, dom)
    assert ok
    assert witness == RMatrix.identity(1)


def test_restricted_power_worked_value():
    x = RMatrix([[0, 0], [-2, 0]])
    dom = Subspace.from_vectors(2, [(2, -1)])
    cod = Subspace.from_vectors(2, [(0, 1)])
    ok, witness = tt.restricted_power_bijective(x, 1, dom, cod)
    assert ok
    assert witness == RMatrix([[-4]])


def test_restricted_power_nilpotent_not_bijective():
    x = RMatrix([[0, 1], [0, 0]])
    ok, _ = tt.restricted_power_bijective(x, 2, Subspace.full(2), Subspace.full(2))
    assert not ok


def test_restricted_power_image_escapes():
    dom = Subspace.from_vectors(2, [(1, 0)])
    cod = Subspace.from_vectors(2, [(0, 1)])
    with pytest.raises(tt.ImageNotContained):
        tt.restricted_power_bijective(RMatrix.identity(2), 1, dom, cod)


def test_solve_system_direct_assignment():
    c = RMatrix([[1, 2], [3, 4]])
    particular, homogeneous = tt.solve_linear_matrix_system(
        2, [(lambda b: b, c)]
    )
    assert particular == c
    assert homogeneous == []


def test_solve_system_one_parameter_family():
    diag = RMatrix.diagonal([-1, 1])
    op = lambda b: tt.commutator(diag, b) + 2 * b
    particular, homogeneous = tt.solve_linear_matrix_system(2, [(op, 2 * diag)])
    assert len(homogeneous) == 1
    # every solution is [[-1, t], [0, 1]]
    for t in (Fraction(0), Fraction(3), Fraction(-1, 2)):
        known = particular + t * homogeneous[0]
        assert op(known) == 2 * diag
    assert particular[0][0] == -1
    assert particular[1][0] == 0
    assert particular[1][1] == 1
    assert homogeneous[0][0][0] == 0
    assert homogeneous[0][1][0] == 0
    assert homogeneous[0][1][1] == 0
    assert homogeneous[0][0][1] != 0


def test_solve_system_inconsistent():
    with pytest.raises(tt.InconsistentSystem):
        tt.solve_linear_matrix_system(
            2,
            [
                (lambda b: b, RMatrix.zero(2)),
                (lambda b: b, RMatrix.identity(2)),
            ],
        )


def test_generated_algebra_identity_only():
    assert tt.generated_algebra_dimension(2, [RMatrix.identity(2)]) == 1


def test_generated_algebra_full():
    action = tt.make_vd(1)
    dims = tt.generated_algebra_dimension(2, [action.h, action.e, action.f])
    assert dims == 4
