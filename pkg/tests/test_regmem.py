from __future__ import annotations

import random
from fractions import Fraction

import pytest

from oracles import gauss_rank
from sfindex import corpus
from sfindex.errors import PreconditionError
from sfindex.family import OpFamily, ParamSpace
from sfindex.opmodel import DirectSum, MatrixOp, OmegaShift, ShiftBand, jordan_block, s_minus, s_plus, window_op
from sfindex.poly import Poly
from sfindex.ratlin import Mat
from sfindex.regmem import (
    ALL_REGS,
    ALL_SEMIREGS,
    RatSpectrumMatrix,
    Reg,
    Semireg,
    axiom_suite,
    bezout_quadruple,
    block_quadruple,
    factor_implications,
    factorization_witness,
    fredholm_spectrum,
    inclusion_chain_suite,
    lemma_suite,
    mem,
    mem_family,
    parse_predicate,
    quadruple_identity_holds,
    r_spectrum,
    smt_check,
    smt_oneway_check,
    spectrum_soundness,
    usr4_intersection_check,
    verdict_table,
)
from sfindex.results import Verdict


def _rs(rows, eig) -> RatSpectrumMatrix:
    return RatSpectrumMatrix(Mat.from_rows(rows), tuple(Fraction(x) for x in eig))


def test_parse_predicate():
    assert parse_predicate("r12") is Reg.R12
    assert parse_predicate("USR3") is Semireg.USR3
    with pytest.raises(ValueError):
        parse_predicate("R17")


def test_membership_goldens():
    inv = corpus.invertible_matrix(random.Random(0), 3)
    assert mem(inv, Reg.R1).is_yes and mem(jordan_block(2), Reg.R1).is_no
    assert mem(s_plus(), Reg.R6).is_yes and mem(s_minus(), Reg.R6).is_no
    assert mem(s_minus(), Reg.R7, 10) == Verdict.unknown(10, mem(s_minus(), Reg.R7, 10).reason)
    assert mem(s_minus(), Reg.R1).is_yes and mem(s_minus(), Reg.R2).is_yes
    assert mem(s_plus(), Reg.R7).is_yes


def test_membership_on_omega_and_window_only():
    fwd, bwd = OmegaShift("fwd"), OmegaShift("bwd")
    assert mem(fwd, Reg.R9).is_yes and mem(fwd, Reg.R4).is_no
    assert mem(bwd, Reg.R4).is_yes and mem(bwd, Reg.R9).is_no
    assert mem(bwd, Reg.R12).is_yes  # onto, so the hyperrange is everything
    f = window_op([[1, 0], [0, 0]])
    assert mem(f, Reg.R12).is_no and mem(f, Reg.R14).is_no and mem(f, Reg.R13).is_yes


def test_matrix_membership_matches_rank_oracle():
    rng = random.Random(1)
    for _ in range(40):
        t = corpus.matrix_op(rng, rng.randint(1, 5))
        full = gauss_rank([list(r) for r in t.mat.entries]) == t.n
        for r in (Reg.R1, Reg.R6):
            assert mem(t, r).is_yes == full
        for r in (Reg.R3, Reg.R4, Reg.R5, Reg.R8, Reg.R9, Reg.R10, Reg.R12, Reg.R16):
            assert mem(t, r).is_yes


def test_semiregularities():
    t = DirectSum((s_plus(), s_minus()))
    assert mem(t, Semireg.USR4).is_yes
    assert mem(s_plus(), Semireg.USR5).is_yes and mem(s_plus(), Semireg.USR6).is_no
    assert mem(s_minus(2), Semireg.LSR1, m=1).is_no and mem(s_minus(2), Semireg.LSR1, m=2).is_yes
    assert mem(ShiftBand(0, 2), Semireg.USR3, m=2).is_yes and mem(ShiftBand(0, 3), Semireg.USR3, m=2).is_no
    assert mem(ShiftBand(0, 3), Semireg.USR3, m=0).is_no and mem(ShiftBand(), Semireg.USR3, m=0).is_yes


def test_mem_family_is_a_conjunction():
    space = ParamSpace.path(3)
    assert mem_family(OpFamily.constant(space, MatrixOp(Mat.identity(2))), Reg.R1).is_yes
    fam = OpFamily.constant(space, s_plus())
    assert mem_family(fam, Reg.R9).is_yes and mem_family(fam, Semireg.USR5).is_yes
    mixed = OpFamily(ParamSpace(("a", "b")), {"a": s_plus(), "b": s_minus()})
    assert mem_family(mixed, Reg.R6).is_no
    assert mem_family(OpFamily.constant(space, DirectSum((s_plus(), s_minus()))), Semireg.USR4).is_yes


def test_certified_spectrum_is_checked():
    with pytest.raises(PreconditionError):
        _rs([[1, 0], [0, 2]], [1, 1])
    rng = random.Random(2)
    for _ in range(10):
        t = corpus.rat_spectrum_matrix(rng, rng.randint(1, 6))
        assert len(t.eigenvalues) == t.n


def test_r_spectrum_goldens():
    d = _rs([[1, 0, 0], [0, 2, 0], [0, 0, 2]], [1, 2, 2])
    assert r_spectrum(d, Reg.R1) == {1, 2}
    assert r_spectrum(_rs([[0, 1], [0, 0]], [0, 0]), Reg.R11) == {0}
    # at 3 the kernel of the zero block misses the hyperrange as well
    j = _rs([[0, 1, 0], [0, 0, 0], [0, 0, 3]], [0, 0, 3])
    assert r_spectrum(j, Reg.R11) == {0, 3}
    assert r_spectrum(j, Reg.R16) == frozenset()
    assert fredholm_spectrum(j) == frozenset()


def test_r1_spectrum_is_eigenvalues_by_rank_oracle():
    rng = random.Random(3)
    for _ in range(15):
        t = corpus.rat_spectrum_matrix(rng, rng.randint(1, 5))
        want = {lam for lam in t.spectrum
                if gauss_rank([list(r) for r in t.shifted(lam).mat.entries]) < t.n}
        assert r_spectrum(t, Reg.R1) == want == t.spectrum


def test_smt_examples():
    d = _rs([[1, 0], [0, -1]], [1, -1])
    sq = Poly.of(0, 0, 1)
    assert smt_check(d, sq, Reg.R1).ok
    assert r_spectrum(d.apply_poly(sq), Reg.R1) == {1}
    j = _rs([[0, 1, 0], [0, 0, 0], [0, 0, 3]], [0, 0, 3])
    assert smt_check(j, sq, Reg.R11).ok
    with pytest.raises(PreconditionError):
        smt_check(d, Poly.of(2), Reg.R1)
    assert smt_oneway_check(_rs([[0, 1], [0, 0]], [0, 0]), sq, Semireg.LSR1, 0).ok
    assert smt_oneway_check(_rs([[2, 0], [0, 3]], [2, 3]), Poly.of(1, 1, 1), Semireg.USR4).ok


def test_smt_all_regularities_small_corpus():
    rng = random.Random(4)
    for _ in range(4):
        t = corpus.rat_spectrum_matrix(rng, rng.randint(1, 5))
        p = corpus.poly(rng)
        for r in ALL_REGS:
            assert smt_check(t, p, r).ok
        for s in ALL_SEMIREGS:
            assert smt_oneway_check(t, p, s, 1).ok
        assert spectrum_soundness(t, ALL_REGS, rng, 3).ok


def test_quadruples():
    rng = random.Random(5)
    for _ in range(10):
        t = corpus.matrix_op(rng, 3)
        p, q = corpus.coprime_pair(rng)
        assert quadruple_identity_holds(*bezout_quadruple(t, p, q))
    assert quadruple_identity_holds(*block_quadruple(s_plus(), s_minus()))
    assert quadruple_identity_holds(*block_quadruple(jordan_block(2), MatrixOp(Mat.identity(2))))


def test_axiom_suite_smoke_and_vacuous():
    rep = axiom_suite(Reg.R1, trials=0)
    assert rep.ok and rep.passes == 0 and rep.exit_code == 0
    for r in (Reg.R6, Reg.R12, Reg.R14):
        rep = axiom_suite(r, trials=12, seed=1)
        assert rep.ok, rep.failures[:3]
        assert rep.details["axioms"]


def test_lemma_suite_smoke():
    for s in (Semireg.LSR1, Semireg.USR3):
        assert lemma_suite(s, trials=10, seed=2, m=1).ok


def test_factor_and_witness():
    space = ParamSpace.path(3)
    minus, plus = OpFamily.constant(space, s_minus()), OpFamily.constant(space, s_plus())
    assert factor_implications(minus, plus).ok and factor_implications(plus, minus).ok
    assert factorization_witness(ShiftBand(2, 0, Mat.from_rows([[1, 2], [0, 1]]))).ok


def test_inclusion_chains_and_usr4():
    rng = random.Random(6)
    ops = [jordan_block(3), s_plus(), s_minus(), OmegaShift("fwd"), window_op([[0, 1], [0, 0]])]
    ops += [corpus.matrix_op(rng, 3) for _ in range(5)]
    assert not inclusion_chain_suite(ops).failures
    assert usr4_intersection_check(ops).ok


def test_verdict_table_covers_every_predicate():
    table = verdict_table(jordan_block(2))
    assert set(table) >= {str(r) for r in ALL_REGS} | {str(s) for s in ALL_SEMIREGS}
