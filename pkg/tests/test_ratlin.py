from __future__ import annotations

import random
from fractions import Fraction

import pytest

from oracles import gauss_rank, laplace_det, meet_dim, rank_by_minors
from sfindex import corpus
from sfindex.errors import ContainmentError, DimensionMismatch
from sfindex.ratlin import (
    Mat,
    Subspace,
    charpoly,
    essential_inclusion_witness,
    image_basis,
    kernel_basis,
    nullspace_vectors,
    quotient_dim,
    rat_str,
    rref,
    subspace_intersect,
    subspace_sum,
    to_rat,
)


def _rand_mat(rng: random.Random, r: int, c: int) -> Mat:
    return Mat.from_rows([[corpus.sparse_entry(rng, 0.45) for _ in range(c)] for _ in range(r)], c)


def test_to_rat_accepts_exact_forms_and_refuses_floats():
    assert to_rat("3/6") == Fraction(1, 2)
    assert to_rat(" -4 ") == -4
    assert to_rat(7) == 7
    with pytest.raises(TypeError):
        to_rat(0.5)
    with pytest.raises(ValueError):
        to_rat("0.5")
    with pytest.raises(TypeError):
        to_rat(True)
    assert rat_str(Fraction(-6, 4)) == "-3/2"
    assert rat_str(Fraction(8, 4)) == "2"


def test_rank_matches_minor_expansion():
    rng = random.Random(1)
    for _ in range(60):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = _rand_mat(rng, r, c)
        assert m.rank() == rank_by_minors([list(x) for x in m.entries])


def test_det_matches_laplace():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = _rand_mat(rng, n, n)
        assert m.det() == laplace_det([list(x) for x in m.entries])


def test_inverse_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        m = corpus.invertible_matrix(rng, rng.randint(1, 5)).mat
        assert m @ m.inverse() == Mat.identity(m.rows)
    with pytest.raises(ZeroDivisionError):
        Mat.zeros(2).inverse()


def test_rref_is_reduced_and_row_equivalent():
    rng = random.Random(4)
    for _ in range(40):
        m = _rand_mat(rng, rng.randint(1, 5), rng.randint(1, 6))
        red, rk = rref(m)
        assert rk == gauss_rank([list(x) for x in m.entries])
        # same row space: stacking adds nothing
        both = [list(x) for x in m.entries] + [list(x) for x in red.entries]
        assert gauss_rank(both) == rk
        for k in range(rk):
            lead = next(j for j, x in enumerate(red.row(k)) if x)
            assert red[k, lead] == 1
            assert all(red[i, lead] == 0 for i in range(m.rows) if i != k)


def test_nullspace_vectors_are_killed_and_count_is_nullity():
    rng = random.Random(5)
    for _ in range(40):
        m = _rand_mat(rng, rng.randint(1, 5), rng.randint(1, 6))
        ns = nullspace_vectors(m)
        assert len(ns) == m.cols - m.rank()
        for v in ns:
            assert all(x == 0 for x in m.apply(v))


def test_sum_and_meet_obey_dimension_formula():
    rng = random.Random(6)
    for _ in range(50):
        n = rng.randint(1, 6)
        e = [[corpus.sparse_entry(rng, 0.5) for _ in range(n)] for _ in range(rng.randint(0, n))]
        f = [[corpus.sparse_entry(rng, 0.5) for _ in range(n)] for _ in range(rng.randint(0, n))]
        se, sf = Subspace.span(e, n), Subspace.span(f, n)
        meet = subspace_intersect(se, sf)
        assert meet.dim == meet_dim(e, f)
        assert se.contains(meet) and sf.contains(meet)
        assert subspace_sum(se, sf).dim == se.dim + sf.dim - meet.dim


def test_subspace_canonical_form_makes_equal_spans_equal():
    a = Subspace.span([[1, 2, 0], [0, 1, 1]], 3)
    b = Subspace.span([[1, 3, 1], [2, 5, 1]], 3)
    assert a == b


def test_quotient_dim_requires_containment():
    e = Subspace.full(3)
    f = Subspace.span([[1, 0, 0]], 3)
    assert quotient_dim(e, f) == 2
    with pytest.raises(ContainmentError):
        quotient_dim(f, e)
    with pytest.raises(DimensionMismatch):
        subspace_sum(e, Subspace.zero(2))


def test_essential_inclusion_witness_covers():
    e = Subspace.span([[1, 1, 0]], 3)
    f = Subspace.span([[0, 0, 1]], 3)
    g = essential_inclusion_witness(e, f)
    assert subspace_sum(f, g).contains(e)


def test_kernel_and_image_are_complementary_in_dimension():
    rng = random.Random(7)
    for _ in range(30):
        m = _rand_mat(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert kernel_basis(m).dim + image_basis(m).dim == m.cols


def test_charpoly_agrees_with_determinant_at_sample_points():
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = _rand_mat(rng, n, n)
        cp = charpoly(m)
        for x in (Fraction(-2), Fraction(1, 3), Fraction(5)):
            shifted = [[(x if i == j else 0) - m[i, j] for j in range(n)] for i in range(n)]
            assert sum(c * x**k for k, c in enumerate(cp)) == laplace_det(shifted)
