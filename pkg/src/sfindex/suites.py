"""Seeded end-to-end suites, shared by the CLI and the acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from . import corpus
from .chains import ascent, c_prime_n, descent, k_n
from .errors import AdmissibilityError, MixedTypeError, SFIndexError
from .family import (
    Homotopy,
    OpFamily,
    ParamSpace,
    compose_families,
    family_index,
    homotopy_check,
    index_json,
    perturb,
)
from .opmodel import (
    FinVec,
    MatrixOp,
    OmegaShift,
    Operator,
    ShiftBand,
    add,
    alpha,
    apply,
    beta,
    is_finite_rank,
    jordan_block,
    s_minus,
    s_plus,
)
from .opmodel import shift as make_shift
from .opmodel import weyl_decompose
from .regmem import (
    ALL_REGS,
    ALL_SEMIREGS,
    STABLE_UNDER_FINITE_RANK,
    axiom_suite,
    factor_implications,
    factorization_witness,
    finite_rank_stability,
    fredholm_spectrum,
    inclusion_chain_suite,
    lemma_suite,
    mem_family,
    smt_check,
    smt_oneway_check,
    usr4_intersection_check,
)
from .results import Report


def index_suite(trials: int = 200, seed: int = 0) -> Report:
    """``alpha - beta == b - a`` for ``S+^a S-^b + F`` with ``a + b <= 4``, ``W <= 6``."""
    rng = random.Random(seed)
    rep = Report("index", trials=trials)
    for i in range(trials):
        t, a, b = corpus.shift_op(rng)
        got = alpha(t) - beta(t)
        rep.check(f"shift {i} a={a} b={b} W={t.W}", got == b - a, b - a, got.to_json())
    return rep


def _mixed_families(rng: random.Random, kinds=("shift", "matrix", "omega", "sum")) -> OpFamily:
    return corpus.family(rng, kinds=kinds)


def perturbation_suite(trials: int = 50, seed: int = 0) -> Report:
    rng = random.Random(seed)
    rep = Report("perturbation", trials=trials)
    saw_neg_inf = False
    for i in range(trials):
        if i == 0:
            space = corpus.graph(rng)
            f = OpFamily(space, {v: OmegaShift("fwd") for v in space.vertices})
        else:
            f = _mixed_families(rng)
        k = corpus.finite_rank_family(rng, f)
        before = index_json(family_index(f))
        after = index_json(family_index(perturb(f, k)))
        saw_neg_inf |= "-inf" in before.values()
        rep.check(f"family {i}", before == after, before, after)
    rep.check("an omega-shift family with index -inf was exercised", saw_neg_inf)
    return rep


def _composable_pair(rng: random.Random) -> tuple[OpFamily, OpFamily]:
    space = corpus.graph(rng)
    lanes = corpus.family_lanes(rng, space, ("shift", "matrix", "omega", "sum"))
    s = corpus.family(rng, space, lanes=lanes)
    # redraw shift monomials for the second factor; omega directions stay put
    lanes2 = {}
    for rep, lane in lanes.items():
        lanes2[rep] = _redraw(rng, lane)
    return s, corpus.family(rng, space, lanes=lanes2)


def _redraw(rng: random.Random, lane: dict) -> dict:
    if lane["kind"] == "shift":
        return corpus.lane(rng, "shift")
    if lane["kind"] == "sum":
        return {"kind": "sum", "parts": [_redraw(rng, p) for p in lane["parts"]]}
    return lane


def composition_suite(trials: int = 50, seed: int = 0) -> Report:
    rng = random.Random(seed)
    rep = Report("composition", trials=trials)
    for i in range(trials):
        s, t = _composable_pair(rng)
        st = compose_families(s, t)
        i_s, i_t, i_st = family_index(s), family_index(t), family_index(st)
        want = {c: (i_s[c] + i_t[c]).to_json() for c in i_s}
        rep.check(f"pair {i}", index_json(i_st) == want, want, index_json(i_st))
    space = ParamSpace(("x",))
    try:
        compose_families(OpFamily(space, {"x": OmegaShift("fwd")}), OpFamily(space, {"x": OmegaShift("bwd")}))
        rep.check("mixed-type vertex rejected", False, "MixedTypeError", "accepted")
    except MixedTypeError:
        rep.check("mixed-type vertex rejected", True)
    return rep


def planted_jump_steps() -> tuple[ParamSpace, list[OpFamily]]:
    """Three steps over an edge; the middle one swaps S+ for S- at both vertices."""
    space = ParamSpace(("p", "q"), (("p", "q"),))
    good = OpFamily(space, {"p": s_plus(), "q": make_shift(1, 0, [[1]])})
    bad = OpFamily(space, {"p": s_minus(), "q": s_minus()})
    return space, [good, bad, good]


def homotopy_suite(trials: int = 20, seed: int = 0, steps: int = 5) -> Report:
    rng = random.Random(seed)
    rep = Report("homotopy", trials=trials)
    for i in range(trials):
        h = corpus.homotopy(rng, steps=steps)
        r = homotopy_check(h)
        rep.check(f"homotopy {i} ({len(h.steps)} steps)", r.ok and len(h.steps) >= 5, True, r.summary())
    space, steps = planted_jump_steps()
    try:
        Homotopy(space, tuple(steps))
        rep.check("monomial jump detected", False, "AdmissibilityError", "accepted")
    except AdmissibilityError:
        rep.check("monomial jump detected", True)
    return rep


def golden_chain_suite() -> Report:
    rep = Report("golden-chains", trials=14)
    for k in range(1, 6):
        j = jordan_block(k)
        rep.check(f"ascent(J{k}(0))", str(ascent(j)) == f"Finite({k})", k, str(ascent(j)))
        rep.check(f"descent(J{k}(0))", str(descent(j)) == f"Finite({k})", k, str(descent(j)))
    ks = [k_n(jordan_block(3), n).value for n in range(6)]
    rep.check("k_n(J3(0))", ks == [0, 0, 1, 0, 0, 0], [0, 0, 1, 0, 0, 0], ks)
    cs = [c_prime_n(s_minus(), n).value for n in range(9)]
    rep.check("c'_n(S-) for n <= 8", cs == [1] * 9, [1] * 9, cs)
    rep.check("descent(S-)", str(descent(s_minus())) == "Finite(0)", 0, str(descent(s_minus())))
    rep.check("ascent(S+)", str(ascent(s_plus())) == "Finite(0)", 0, str(ascent(s_plus())))
    return rep


def regularity_axioms_suite(trials: int = 200, seed: int = 0) -> Report:
    rep = Report("regularity-axioms", trials=trials * len(ALL_REGS))
    rates = {}
    for r in ALL_REGS:
        sub = axiom_suite(r, "regularity", trials, seed)
        rep.merge(sub, f"{r} ")
        total = sub.passes + len(sub.failures) + len(sub.unknowns)
        rates[str(r)] = {"unknown_rate": round(len(sub.unknowns) / total, 4) if total else 0.0,
                         "axioms": sub.details["axioms"]}
    rep.details = {"per_regularity": rates}
    return rep


def smt_suite(matrices: int = 30, polys: int = 5, seed: int = 0) -> Report:
    rng = random.Random(seed)
    rep = Report("smt", trials=matrices * polys)
    for i in range(matrices):
        t = corpus.rat_spectrum_matrix(rng, rng.randint(1, 6))
        for j in range(polys):
            p = corpus.poly(rng, 1, 3)
            for r in ALL_REGS:
                rep.merge(smt_check(t, p, r), f"matrix {i} poly {j} ")
    return rep


def operator_corpus(rng: random.Random, size: int = 120) -> list[Operator]:
    ops: list[Operator] = [jordan_block(3), s_plus(), s_minus(), MatrixOp(corpus.Mat.identity(3)),
                           OmegaShift("fwd"), OmegaShift("bwd"),
                           corpus.DirectSum((OmegaShift("fwd"), OmegaShift("bwd"))),
                           ShiftBand(window=corpus.window(rng, 3, 0.3), monomial=False)]
    while len(ops) < size:
        k = len(ops) % 4
        if k == 0:
            ops.append(corpus.matrix_op(rng, rng.randint(1, 5)))
        elif k == 1:
            ops.append(corpus.axiom_shift(rng))
        elif k == 2:
            ops.append(corpus.shift_op(rng, 3, 4)[0])
        else:
            ops.append(corpus.DirectSum((corpus.axiom_shift(rng), corpus.matrix_op(rng, 2))))
    return ops


def inclusion_suite(size: int = 120, seed: int = 0) -> Report:
    return inclusion_chain_suite(operator_corpus(random.Random(seed), size))


def stability_suite(pairs: int = 100, seed: int = 0) -> Report:
    rng = random.Random(seed)
    rep = Report("finite-rank-stability", trials=pairs)
    checked = {str(r): 0 for r in sorted(STABLE_UNDER_FINITE_RANK, key=lambda r: r.value)}
    for i in range(pairs):
        f = _mixed_families(rng)
        k = corpus.finite_rank_family(rng, f)
        for r in sorted(STABLE_UNDER_FINITE_RANK, key=lambda r: r.value):
            if not mem_family(f, r).is_yes:
                continue
            checked[str(r)] += 1
            rep.merge(finite_rank_stability(f, k, r), f"pair {i} ")
    rep.details = {"checked_per_regularity": checked}
    return rep


def factor_suite(pairs: int = 50, seed: int = 0) -> Report:
    rng = random.Random(seed)
    rep = Report("factor-implications", trials=pairs + 2)
    space = ParamSpace.path(3)
    minus, plus = OpFamily.constant(space, s_minus()), OpFamily.constant(space, s_plus())
    rep.merge(factor_implications(minus, plus), "S-.S+ ")
    rep.merge(factor_implications(plus, minus), "S+.S- ")
    for i in range(pairs):
        s, t = _composable_pair(rng)
        rep.merge(factor_implications(s, t), f"pair {i} ")
    return rep


def quasi_inverse_suite(trials: int = 50, seed: int = 0) -> Report:
    rng = random.Random(seed)
    rep = Report("quasi-inverse", trials=trials)
    for i in range(trials):
        t = corpus.shift_op(rng)[0]
        rep.merge(factorization_witness(t), f"shift {i} ")
    return rep


def lower_upper_suite(trials: int = 30, seed: int = 0, m: int = 1) -> Report:
    """Lemma items, one-way spectral mapping and ``USR4 = USR1 n USR2``."""
    rng = random.Random(seed)
    rep = Report("semiregularities", trials=trials)
    for s in ALL_SEMIREGS:
        rep.merge(lemma_suite(s, trials, seed, m), f"lemma {s} ")
    for i in range(trials):
        t = corpus.rat_spectrum_matrix(rng, rng.randint(1, 6))
        for j in range(3):
            p = corpus.poly(rng, 1, 3)
            for s in ALL_SEMIREGS:
                rep.merge(smt_oneway_check(t, p, s, m), f"matrix {i} poly {j} ")
        fs = fredholm_spectrum(t)
        rep.check(f"matrix {i} Fredholm spectrum empty", not fs)
    rep.merge(usr4_intersection_check(operator_corpus(rng, 80)), "usr4 ")
    return rep


def balanced_shift(rng: random.Random) -> ShiftBand:
    """Index-zero shift-band operator: ``S+^k S-^k + F`` normalises to ``I + window``."""
    k = rng.randint(0, 2)
    w = rng.randint(1, 4)
    if rng.random() < 0.5:
        return ShiftBand(k, k, corpus.window(rng, w, 0.4))
    # window M - I with M singular, so the operator acts as M on the window
    m = corpus.matrix_op(rng, w).mat
    while m.is_invertible():
        m = corpus.matrix_op(rng, w).mat
    return ShiftBand(k, k, m - corpus.Mat.identity(w))


def weyl_suite(trials: int = 30, seed: int = 0, extra: int = 4) -> Report:
    rng = random.Random(seed)
    rep = Report("weyl-decomposition", trials=trials)
    for i in range(trials):
        t = balanced_shift(rng)
        try:
            v, f = weyl_decompose(t)
        except SFIndexError as exc:
            rep.record(f"shift {i}", "fail", "decomposition", f"{type(exc).__name__}: {exc}")
            continue
        ok = alpha(v) == 0 and beta(v) == 0 and is_finite_rank(f)
        for j in range(t.W + extra + 1):
            e = FinVec.e(j)
            ok &= apply(add(v, f), e) == apply(t, e) == apply(v, e) + apply(f, e)
        rep.check(f"shift {i} (alpha={alpha(t)})", ok)
    return rep


def all_criteria(seed: int = 0, scale: Fraction = Fraction(1)) -> dict[str, Report]:
    def n(x: int) -> int:
        return max(1, int(x * scale))

    return {
        "1 index": index_suite(n(200), seed),
        "2 perturbation": perturbation_suite(n(50), seed),
        "3 composition": composition_suite(n(50), seed),
        "4 homotopy": homotopy_suite(n(20), seed),
        "5 golden chains": golden_chain_suite(),
        "6 regularity axioms": regularity_axioms_suite(n(200), seed),
        "7 smt": smt_suite(n(30), 5, seed),
        "8 inclusion": inclusion_suite(n(120), seed),
        "8 stability": stability_suite(n(100), seed),
        "9 factorization": factor_suite(n(50), seed),
        "9 quasi-inverse": quasi_inverse_suite(n(50), seed),
        "10 semiregularities": lower_upper_suite(n(30), seed),
        "11 weyl": weyl_suite(n(30), seed),
    }
