from __future__ import annotations

import random
from fractions import Fraction

from oracles import (
    c_prime,
    first_stable_rank,
    gauss_rank,
    k0_by_annihilators,
    nullspace,
    raw_shift_dense,
    transpose,
    uniform_descent,
)
from sfindex import corpus
from sfindex.chains import (
    ascent,
    c_n,
    c_prime_n,
    default_bound,
    descent,
    essential_ascent,
    essential_descent,
    has_tud,
    hyperkernel,
    hyperrange,
    k_n,
    uniform_descent_from,
)
from sfindex.opmodel import (
    POS_INF,
    DirectSum,
    FinVec,
    MatrixOp,
    OmegaShift,
    ShiftBand,
    alpha,
    apply,
    jordan_block,
    power,
    s_minus,
    s_plus,
    window_op,
)
from sfindex.ratlin import Mat, Subspace
from sfindex.results import ChainResult


def _dense(t: MatrixOp):
    return [list(r) for r in t.mat.entries]


def test_jordan_goldens():
    for k in range(1, 6):
        j = jordan_block(k)
        assert ascent(j) == ChainResult.finite(k)
        assert descent(j) == ChainResult.finite(k)
    j3 = jordan_block(3)
    assert [c_prime_n(j3, n) for n in range(5)] == [1, 1, 1, 0, 0]
    assert [k_n(j3, n) for n in range(6)] == [0, 0, 1, 0, 0, 0]
    assert uniform_descent_from(j3) == ChainResult.finite(3)
    assert has_tud(j3).is_yes


def test_identity_and_invertible():
    i3 = MatrixOp(Mat.identity(3))
    assert all(c_n(i3, n) == 0 and k_n(i3, n) == 0 for n in range(4))
    assert ascent(i3) == ChainResult.finite(0)
    assert uniform_descent_from(i3) == ChainResult.finite(0)


def test_shift_goldens():
    assert [c_prime_n(s_minus(), n) for n in range(9)] == [1] * 9
    assert ascent(s_minus(), 10) == ChainResult.exceeds(10)
    assert descent(s_minus(), 10) == ChainResult.finite(0)
    assert descent(s_minus()) == ChainResult.finite(0)
    assert ascent(s_plus()) == ChainResult.finite(0)
    assert essential_descent(s_plus()) == ChainResult.finite(0)
    assert uniform_descent_from(s_plus()) == ChainResult.finite(0)
    for n in range(1, 5):
        assert alpha(power(s_minus(), n)) == n


def test_omega_and_window_only_chains():
    assert essential_ascent(OmegaShift("bwd")) == ChainResult.infinite()
    assert c_prime_n(OmegaShift("bwd"), 3) == POS_INF
    f = window_op([[0, 1], [0, 0]])
    assert c_prime_n(f, 0) == POS_INF
    assert essential_ascent(f) == ChainResult.finite(1)
    both = DirectSum((jordan_block(2), s_plus()))
    assert ascent(both) == ChainResult.finite(2)


def test_c_prime_matches_dimension_formula_on_matrices():
    rng = random.Random(0)
    for _ in range(40):
        t = corpus.matrix_op(rng, rng.randint(1, 5))
        d = _dense(t)
        for n in range(t.n + 2):
            assert c_prime_n(t, n) == c_prime(d, n)
            assert c_n(t, n) == c_prime([list(r) for r in zip(*d)], n)


def test_k0_matches_annihilator_oracle():
    rng = random.Random(1)
    for _ in range(40):
        t = corpus.matrix_op(rng, 4)
        assert k_n(t, 0) == k0_by_annihilators(_dense(t))


def test_k0_on_shifts_matches_annihilator_oracle():
    rng = random.Random(2)
    for _ in range(25):
        t = ShiftBand(0, rng.randint(0, 2), corpus.window(rng, rng.randint(0, 3)))
        a, b = t.fwd, t.bwd
        n = t.W + a + b + 3
        ker = nullspace(raw_shift_dense(a, b, t.window, n + a + b, n))
        coker = nullspace(transpose(raw_shift_dense(a, b, t.window, n, n + a + b)))
        pairing = [[sum((y[i] * k[i] for i in range(n)), Fraction(0)) for k in ker] for y in coker]
        assert k_n(t, 0) == (gauss_rank(pairing) if ker and coker else 0)


def test_ascent_descent_match_rank_oracle():
    rng = random.Random(3)
    for _ in range(30):
        t = corpus.matrix_op(rng, rng.randint(1, 5))
        d = _dense(t)
        want = first_stable_rank(d)
        assert ascent(t) == ChainResult.finite(want) == descent(t)


def test_uniform_descent_matches_oracle():
    rng = random.Random(4)
    for _ in range(30):
        t = corpus.matrix_op(rng, rng.randint(1, 5))
        assert uniform_descent_from(t) == ChainResult.finite(uniform_descent(_dense(t)))


def test_hyperrange_is_invariant_and_mapped_onto_itself():
    rng = random.Random(5)
    for _ in range(20):
        t = corpus.matrix_op(rng, rng.randint(1, 5))
        r = hyperrange(t)
        images = [apply(t, FinVec(v)).dense(t.n) for v in r.vectors()]
        assert Subspace.span(images, t.n) == r
    assert hyperrange(jordan_block(2)).dim == 0 and hyperkernel(jordan_block(2)).dim == 2


def test_default_bound():
    assert default_bound(s_plus()) == 8
    assert default_bound(ShiftBand(0, 3, corpus.window(random.Random(0), 4))) == 14
    assert default_bound(MatrixOp(Mat.identity(11))) == 11
