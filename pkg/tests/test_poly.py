from __future__ import annotations

import random
from fractions import Fraction

import pytest

from sfindex import corpus
from sfindex.errors import NotCoprime
from sfindex.poly import Poly, bezout_coefficients, poly_gcdex
from sfindex.ratlin import Mat


def test_arithmetic_and_evaluation():
    p = Poly.of(1, 0, -2)  # 1 - 2x^2
    q = Poly.x() - Poly.of(3)
    assert p.degree == 2
    assert (p * q)(Fraction(1, 2)) == p(Fraction(1, 2)) * q(Fraction(1, 2))
    assert (p - p).is_zero()
    assert Poly.from_roots([1, -1]) == Poly.of(-1, 0, 1)


def test_divmod_reconstructs():
    rng = random.Random(0)
    for _ in range(40):
        a, b = corpus.poly(rng, 0, 4), corpus.poly(rng, 1, 3)
        quo, rem = a.divmod(b)
        assert quo * b + rem == a
        assert rem.is_zero() or rem.degree < b.degree


def test_gcdex_identity():
    rng = random.Random(1)
    for _ in range(40):
        p, q = corpus.poly(rng), corpus.poly(rng)
        g, u, v = poly_gcdex(p, q)
        assert u * p + v * q == g
        assert g.lead() == 1
        assert p.divmod(g)[1].is_zero() and q.divmod(g)[1].is_zero()


def test_bezout_on_coprime_and_refusal_on_common_factor():
    p, q = Poly.from_roots([0, 1]), Poly.from_roots([2])
    u, v = bezout_coefficients(p, q)
    assert u * p + v * q == Poly.of(1)
    with pytest.raises(NotCoprime):
        bezout_coefficients(Poly.from_roots([1, 2]), Poly.from_roots([2]))


def test_eval_matrix_is_a_ring_map():
    rng = random.Random(2)
    m = corpus.window(rng, 3, 0.3)
    p, q = corpus.poly(rng), corpus.poly(rng)
    assert (p * q).eval_matrix(m) == p.eval_matrix(m) @ q.eval_matrix(m)
    assert (p + q).eval_matrix(m) == p.eval_matrix(m) + q.eval_matrix(m)
    assert Poly.of(2).eval_matrix(m) == Mat.identity(3).scale(2)
