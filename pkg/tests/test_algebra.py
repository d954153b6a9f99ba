"""Quotient-algebra structure: multiplication, filtration, ideals, socle."""

import itertools
import random

import pytest

from artinv.algebra import DIM_CAP, ArtinianAlgebra, irredundant_generators, is_complete_intersection
from artinv.errors import (
    AlgebraMismatchError,
    CapExceededError,
    NotArtinianError,
    NotLocalError,
)
from artinv.fields import QQ, PrimeField
from artinv.linalg import Subspace, matvec, rank
from artinv.poly import RingContext, mono_degree, parse_polynomial


def unit_vector(A, i):
    return tuple(A.field.one if j == i else A.field.zero for j in range(A.dim))


def random_element(A, rnd, span=4):
    return tuple(A.field.canon(rnd.randint(-span, span)) for _ in range(A.dim))


# -- construction ----------------------------------------------------------------

def test_lengths_and_hilbert_functions(cube_f2, six_quadrics, apolar12, ten_quadrics,
                                       tail13311, chain4):
    expected = [
        (cube_f2, 8, (1, 3, 3, 1)),
        (six_quadrics, 9, (1, 4, 4)),
        (apolar12, 12, (1, 5, 5, 1)),
        (ten_quadrics, 12, (1, 5, 5, 1)),
        (tail13311, 9, (1, 3, 3, 1, 1)),
        (chain4, 4, (1, 1, 1, 1)),
    ]
    for A, length, hf in expected:
        assert A.dim == length
        assert A.length == length
        assert A.hilbert_function().values == hf
        assert A.is_local()


def test_filtration_dimensions(cube_f2, six_quadrics, apolar12, tail13311):
    assert [s.dim for s in cube_f2.filtration()] == [8, 7, 4, 1, 0]
    assert [s.dim for s in six_quadrics.filtration()] == [9, 8, 4, 0]
    assert [s.dim for s in apolar12.filtration()] == [12, 11, 6, 1, 0]
    assert [s.dim for s in tail13311.filtration()] == [9, 8, 5, 2, 1, 0]


def test_filtration_is_a_descending_chain_of_ideals(tail13311):
    filt = tail13311.filtration()
    for big, small in zip(filt, filt[1:]):
        assert big.contains(small)
        assert big.dim > small.dim
        assert tail13311.is_ideal_subspace(big)
    assert filt[0].dim == tail13311.dim
    assert filt[-1].dim == 0


def test_mpow_indexes_the_filtration(cube_f2):
    assert cube_f2.mpow(0).dim == 8
    assert cube_f2.mpow(1).dim == 7
    assert cube_f2.mpow(2).dim == 4
    assert cube_f2.mpow(3).dim == 1
    assert cube_f2.mpow(9).dim == 0
    assert cube_f2.maximal_ideal().space.rows == cube_f2.mpow(1).rows


def test_homogeneity_flags(cube_f2, six_quadrics, apolar12, ten_quadrics, tail13311):
    assert cube_f2.homogeneous
    assert six_quadrics.homogeneous
    assert apolar12.homogeneous
    assert ten_quadrics.homogeneous
    assert not tail13311.homogeneous


def test_degree_blocks_match_hilbert_function_when_homogeneous(apolar12):
    blocks = apolar12.degree_blocks()
    sizes = tuple(len(blocks[d]) for d in sorted(blocks))
    assert sizes == apolar12.hilbert_function().values
    for d, idxs in blocks.items():
        assert all(mono_degree(apolar12.basis.monomials[i]) == d for i in idxs)


def test_non_artinian_presentation_rejected():
    with pytest.raises(NotArtinianError) as exc:
        ArtinianAlgebra.from_strings(QQ, ("x", "y"), ("x^2",))
    assert exc.value.variable == "y"


def test_dimension_cap_enforced():
    assert DIM_CAP == 4096
    with pytest.raises(CapExceededError):
        ArtinianAlgebra.from_strings(QQ, ("x",), ("x^4097",))


def test_unit_ideal_gives_the_zero_ring():
    A = ArtinianAlgebra.from_strings(QQ, ("x",), ("1",))
    assert A.dim == 0
    assert not A.is_local()


def test_nonlocal_quotient_detected():
    A = ArtinianAlgebra.from_strings(QQ, ("x",), ("x^2 - x",))
    assert not A.is_local()
    with pytest.raises(NotLocalError):
        A.hilbert_function()
    with pytest.raises(NotLocalError):
        A.socle()


# -- multiplication --------------------------------------------------------------

def test_structure_constants_commute(cube_f2, six_quadrics, apolar12):
    for A in (cube_f2, six_quadrics, apolar12):
        for i in range(A.dim):
            for j in range(i, A.dim):
                assert A.basis_product(i, j) == A.basis_product(j, i)


def test_multiplication_is_associative_on_the_whole_basis(cube_f2, chain4):
    for A in (cube_f2, chain4):
        basis = [unit_vector(A, i) for i in range(A.dim)]
        for a, b, c in itertools.product(basis, repeat=3):
            assert A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c))


def test_multiplication_is_associative_on_random_elements(six_quadrics, apolar12, tail13311):
    rnd = random.Random(5)
    for A in (six_quadrics, apolar12, tail13311):
        for _ in range(40):
            a, b, c = (random_element(A, rnd) for _ in range(3))
            assert A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c))
            assert A.multiply(a, b) == A.multiply(b, a)


def test_one_is_the_multiplicative_identity(six_quadrics):
    A = six_quadrics
    rnd = random.Random(6)
    one = A.one_vector()
    for _ in range(10):
        a = random_element(A, rnd)
        assert A.multiply(one, a) == a
    assert A.multiply(A.zero_vector(), one) == A.zero_vector()


def test_multiplication_matrix_columns_are_basis_images(tail13311):
    A = tail13311
    rnd = random.Random(7)
    for _ in range(10):
        a = random_element(A, rnd)
        M = A.multiplication_matrix(a)
        for j in range(A.dim):
            col = tuple(M[i][j] for i in range(A.dim))
            assert col == A.multiply(a, unit_vector(A, j))
        b = random_element(A, rnd)
        assert tuple(matvec(M, b, A.field)) == A.multiply(a, b)


def test_variable_images_agree_with_multiplication(cube_f2):
    A = cube_f2
    rnd = random.Random(8)
    for v in range(3):
        xv = A.variable_vectors[v]
        for _ in range(5):
            a = random_element(A, rnd, span=1)
            assert tuple(A.var_image(v, a)) == A.multiply(xv, a)


def test_element_parsing_reduces_to_normal_form(cube_f2, apolar12):
    assert cube_f2.parse_element("x^2 + x") == cube_f2.parse_element("x")
    assert cube_f2.parse_element("x*y*z") != cube_f2.zero_vector()
    assert cube_f2.parse_element("x^2*y") == cube_f2.zero_vector()
    for g in apolar12.presentation_generators:
        assert apolar12.element_from_polynomial(g) == apolar12.zero_vector()


def test_element_polynomial_roundtrip(tail13311):
    A = tail13311
    rnd = random.Random(9)
    for _ in range(15):
        v = random_element(A, rnd)
        assert A.element_from_polynomial(A.polynomial_from_element(v)) == v


def test_elements_from_foreign_rings_are_rejected(cube_f2):
    other = RingContext(QQ, ("a", "b"))
    with pytest.raises(AlgebraMismatchError):
        cube_f2.element_from_polynomial(parse_polynomial("a", other))


# -- ideals and subspaces ---------------------------------------------------------

def test_ideal_closure_is_extensive_monotone_idempotent(six_quadrics, tail13311):
    rnd = random.Random(10)
    for A in (six_quadrics, tail13311):
        for _ in range(12):
            vecs = [random_element(A, rnd) for _ in range(rnd.randint(1, 3))]
            ideal = A.ideal_from_vectors(vecs)
            for v in vecs:
                assert ideal.contains_vector(v)
            assert A.is_ideal_subspace(ideal.space)
            again = A.ideal_from_vectors(ideal.space.rows)
            assert again.space.rows == ideal.space.rows
            bigger = A.ideal_from_vectors(vecs + [random_element(A, rnd)])
            assert bigger.space.contains(ideal.space)


def test_ideal_edge_cases(cube_f2):
    A = cube_f2
    assert A.ideal_from_vectors([]).dim == 0
    assert A.ideal_from_vectors([A.one_vector()]).dim == A.dim
    assert A.maximal_ideal().dim == A.dim - 1
    assert A.quotient_length([]) == A.dim


def test_ideal_from_strings_matches_vector_route(six_quadrics):
    A = six_quadrics
    via_str = A.ideal_from_strings(("x + y", "z"))
    via_vec = A.ideal_from_vectors([A.parse_element("x + y"), A.parse_element("z")])
    assert via_str.space.rows == via_vec.space.rows
    assert {str(p) for p in via_str.basis_polynomials()} == {
        str(A.polynomial_from_element(r)) for r in via_str.space.rows}


def test_m_times_agrees_with_module_product_on_ideals(six_quadrics, tail13311):
    rnd = random.Random(11)
    for A in (six_quadrics, tail13311):
        m = A.maximal_ideal().space
        for _ in range(8):
            ideal = A.ideal_from_vectors([random_element(A, rnd) for _ in range(2)])
            fast = A.m_times(ideal.space)
            general = A.module_product(m, ideal.space)
            assert fast.rows == general.rows
        assert A.m_times(m).rows == A.mpow(2).rows
        assert A.module_product(m, m).rows == A.mpow(2).rows


def test_m_times_undercounts_on_a_non_ideal_subspace():
    # on general subspaces only module_product computes the true product
    A = ArtinianAlgebra.from_strings(QQ, ("x",), ("x^4",))
    span_x = Subspace.from_vectors(QQ, 4, [A.parse_element("x")])
    assert not A.is_ideal_subspace(span_x)
    fast = A.m_times(span_x)
    true_product = A.module_product(A.maximal_ideal().space, span_x)
    assert fast.dim == 1
    assert true_product.dim == 2
    assert true_product.contains(fast)


def test_subspace_intersection_dimension_formula(six_quadrics, cube_f2):
    rnd = random.Random(12)
    for A in (six_quadrics, cube_f2):
        for _ in range(15):
            U = Subspace.from_vectors(
                A.field, A.dim, [random_element(A, rnd, 2) for _ in range(rnd.randint(1, 4))])
            V = Subspace.from_vectors(
                A.field, A.dim, [random_element(A, rnd, 2) for _ in range(rnd.randint(1, 4))])
            meet, join = U.intersect(V), U.add(V)
            assert meet.dim + join.dim == U.dim + V.dim
            assert U.contains(meet) and V.contains(meet)
            assert join.contains(U) and join.contains(V)
            assert meet.rows == V.intersect(U).rows


def test_subspace_trivial_intersections(cube_f2):
    m2 = cube_f2.mpow(2)
    full = Subspace.full(cube_f2.field, cube_f2.dim)
    zero = Subspace.zero(cube_f2.field, cube_f2.dim)
    assert m2.intersect(full).rows == m2.rows
    assert m2.intersect(zero).dim == 0
    assert m2.intersect(m2).rows == m2.rows


# -- socle and annihilators -------------------------------------------------------

def test_socle_dimensions_and_gorenstein(cube_f2, six_quadrics, tail13311, chain4):
    assert cube_f2.socle().dim == 1
    assert cube_f2.is_gorenstein()
    assert cube_f2.socle().contains_vector(cube_f2.parse_element("x*y*z"))
    assert six_quadrics.socle().dim == 4
    assert not six_quadrics.is_gorenstein()
    assert tail13311.socle().dim == 1
    assert tail13311.is_gorenstein()
    assert chain4.socle().contains_vector(chain4.parse_element("t^3"))


def test_socle_is_killed_by_the_maximal_ideal(six_quadrics):
    A = six_quadrics
    for row in A.socle().space.rows:
        for v in range(4):
            assert tuple(A.var_image(v, row)) == A.zero_vector()


def test_socle_of_monomial_quotients_by_brute_force():
    rnd = random.Random(13)
    for _ in range(6):
        nvars = rnd.choice((2, 3))
        names = ("x", "y", "z")[:nvars]
        gens = [f"{n}^{rnd.randint(1, 3)}" for n in names]
        for _ in range(rnd.randint(0, 3)):
            gens.append("*".join(f"{n}^{rnd.randint(0, 2)}" for n in names))
        try:
            A = ArtinianAlgebra.from_strings(QQ, names, gens)
        except CapExceededError:
            continue
        if A.dim == 0:
            continue
        std = set(A.basis.monomials)
        expected = set()
        for i, m in enumerate(A.basis.monomials):
            bumps = [tuple(e + (1 if k == v else 0) for k, e in enumerate(m))
                     for v in range(nvars)]
            if all(b not in std for b in bumps):
                expected.add(unit_vector(A, i))
        assert set(A.socle().space.rows) == expected


def test_annihilator_satisfies_rank_nullity(six_quadrics):
    A = six_quadrics
    rnd = random.Random(14)
    for _ in range(12):
        a = random_element(A, rnd)
        ann = A.annihilator(a)
        assert ann.dim == A.dim - rank(A.multiplication_matrix(a), A.field)
        assert A.is_ideal_subspace(ann.space)
        for row in ann.space.rows:
            assert A.multiply(a, row) == A.zero_vector()


def test_annihilator_extremes(cube_f2):
    assert cube_f2.annihilator(cube_f2.zero_vector()).dim == cube_f2.dim
    assert cube_f2.annihilator(cube_f2.one_vector()).dim == 0


def test_annihilator_of_a_socle_element_is_everything_proper(chain4):
    ann = chain4.annihilator(chain4.parse_element("t^3"))
    assert ann.dim == 3
    assert ann.space.rows == chain4.maximal_ideal().space.rows


# -- derived invariants -----------------------------------------------------------

def test_quotient_lengths(cube_f2, apolar12):
    assert cube_f2.quotient_length([cube_f2.parse_element("x")]) == 4
    assert apolar12.quotient_length([apolar12.parse_element("u")]) == 6
    B = ArtinianAlgebra.from_strings(QQ, ("x", "y"), ("x^2", "x*y", "y^3"))
    assert B.dim == 4
    assert B.quotient_length([B.parse_element("y")]) == 2


def test_small_model_lengths():
    models = [
        (("x^2", "x*y", "y"), 2),
        (("x^3", "x^2*y", "x*y^2", "y"), 3),
        (("x^2", "x*y", "y^3"), 4),
    ]
    for gens, length in models:
        assert ArtinianAlgebra.from_strings(QQ, ("x", "y"), gens).dim == length


def test_registered_ideal_data(apolar12):
    A = apolar12
    a = A.ideal_from_strings(("x", "y", "z", "u*v", "u^2", "v^2"))
    assert a.dim == 9
    ma = A.m_times(a.space)
    assert ma.dim == 3
    u_image = a.space.image_under(A.multiplication_matrix(A.parse_element("u")))
    assert u_image.rows == ma.rows
    ann_u = A.annihilator(A.parse_element("u"))
    assert ann_u.dim == 6
    assert a.space.contains(ann_u.space)


def test_complete_intersection_detection(cube_f2, six_quadrics, ten_quadrics, chain4):
    assert is_complete_intersection(cube_f2)
    assert is_complete_intersection(chain4)
    assert not is_complete_intersection(six_quadrics)
    assert not is_complete_intersection(ten_quadrics)


def test_redundant_generators_are_pruned():
    ctx = RingContext(QQ, ("x", "y"))
    gens = [parse_polynomial(s, ctx) for s in ("x^2", "x^2 + y^2", "y^2")]
    kept = irredundant_generators(gens, ctx)
    assert len(kept) == 2
    A = ArtinianAlgebra.from_strings(QQ, ("x", "y"), ("x^2", "x^2 + y^2", "y^2"))
    assert is_complete_intersection(A)


def test_monomial_ideal_flag(cube_f2, tail13311):
    assert cube_f2.is_monomial_ideal()
    assert not tail13311.is_monomial_ideal()
