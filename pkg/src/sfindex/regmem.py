"""Regularity and semiregularity membership, R-spectra and the theorem suites.

Membership of a single operator is three-valued. Range closedness is never
computed: every model operator has closed range (finite-dimensional,
Fredholm-plus-finite-rank, or a pure omega-shift), so only the nullity,
defect and chain conditions are evaluated. Family membership is the
conjunction over vertices.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import chains
from .errors import PreconditionError, UnsupportedOperator
from .family import FiniteRankFamily, OpFamily, perturb
from .opmodel import (
    DirectSum,
    FinVec,
    MatrixOp,
    OmegaShift,
    Operator,
    ShiftBand,
    add,
    alpha,
    apply,
    beta,
    compose,
    identity_like,
    index,
    is_finite_rank,
    left_quasi_inverse,
    power,
    quasi_inverse,
    sub,
)
from .poly import Poly, bezout_coefficients
from .ratlin import Mat, charpoly, rat_str
from .results import NO, YES, Report, Verdict, all_of, any_of


class Reg(enum.Enum):
    R1 = 1
    R2 = 2
    R3 = 3
    R4 = 4
    R5 = 5
    R6 = 6
    R7 = 7
    R8 = 8
    R9 = 9
    R10 = 10
    R11 = 11
    R12 = 12
    R13 = 13
    R14 = 14
    R15 = 15
    R16 = 16

    def __str__(self) -> str:
        return self.name


class Semireg(enum.Enum):
    LSR1 = "LSR1"
    LSR2 = "LSR2"
    LSR3 = "LSR3"
    USR1 = "USR1"
    USR2 = "USR2"
    USR3 = "USR3"
    USR4 = "USR4"
    USR5 = "USR5"
    USR6 = "USR6"

    @property
    def lower(self) -> bool:
        return self.value.startswith("LSR")

    def __str__(self) -> str:
        return self.name


Predicate = Reg | Semireg

STABLE_UNDER_FINITE_RANK = frozenset(Reg(i) for i in (4, 5, 9, 10, 12, 13, 14, 15))

# Why the hypothesis "T in R and invertible implies T^{-1} in R" holds for each
# upper semiregularity: an invertible operator is Fredholm of index 0.
INVERSE_CLOSURE = {
    Semireg.USR1: "T invertible => T^-1 invertible, Fredholm with index 0 >= 0",
    Semireg.USR2: "T invertible => T^-1 invertible, Fredholm with index 0 <= 0",
    Semireg.USR3: "T invertible => T^-1 Fredholm with index 0, and 0 lies in mZ",
    Semireg.USR4: "T invertible => T^-1 Fredholm with index 0",
    Semireg.USR5: "T invertible => T^-1 injective with closed range and index 0 <= 0",
    Semireg.USR6: "T invertible => T^-1 onto and index 0 >= 0",
}


def parse_predicate(name: str) -> Predicate:
    name = name.strip().upper()
    if name in Semireg.__members__:
        return Semireg[name]
    if name in Reg.__members__:
        return Reg[name]
    raise ValueError(f"unknown regularity or semiregularity {name!r}")


# --- pointwise membership ----------------------------------------------------------------

def _r11(t: Operator, n_max: int | None) -> Verdict:
    """``N(t)`` inside the hyperrange."""
    match t:
        case MatrixOp():
            return Verdict.of(chains.kernel_in_hyperrange(t))
        case OmegaShift():
            # forward: trivial kernel; backward and identity: onto
            return YES
        case ShiftBand() if not t.monomial:
            # infinite-dimensional kernel, finite-dimensional range
            return NO
        case ShiftBand():
            a = alpha(t).value
            if a == 0 or beta(t) == 0:
                return YES
            # c'_n = dim(N(t) n R(t^n)); the kernel sits in every R(t^n) iff c'_n = a
            floor = max(index(t).value, 0)
            bound = chains.default_bound(t) if n_max is None else n_max
            for n in range(bound + 1):
                c = chains.c_prime_n(t, n).value
                if c < a:
                    return NO
                if c == floor:
                    return YES
            desc = chains.descent(t, bound)
            if desc.is_finite:
                return Verdict.of(chains.c_prime_n(t, desc.n) == a)
            return Verdict.unknown(bound, "kernel-in-hyperrange undecided within the chain bound")
    raise UnsupportedOperator(type(t).__name__)


def _r12(t: Operator) -> Verdict:
    """``N(t)`` essentially inside the hyperrange."""
    if alpha(t).is_finite:
        return YES  # G = N(t) is a finite-dimensional witness
    if beta(t) == 0:
        return YES  # onto: the hyperrange is the whole space
    if isinstance(t, ShiftBand) and not t.monomial:
        return NO
    raise UnsupportedOperator(f"essential inclusion undecided for {type(t).__name__}")


def _quasi_fredholm_like(t: Operator, r: Reg) -> Verdict:
    """R13 to R16 on a single (non-sum) operator."""
    match t:
        case MatrixOp():
            return chains.uniform_descent_from(t).verdict()
        case ShiftBand() if not t.monomial:
            if r == Reg.R14:
                return NO  # k_0 is infinite
            return YES
        case ShiftBand() | OmegaShift():
            # semi-Fredholm: c' (or c) is a non-increasing sequence of finite
            # numbers, so k_n vanishes eventually and every k_n is finite
            return YES
    raise UnsupportedOperator(type(t).__name__)


def _mem_reg(t: Operator, r: Reg, n_max: int | None) -> Verdict:
    if isinstance(t, DirectSum):
        return all_of(_mem_reg(p, r, n_max) for p in t.parts)
    a, b = alpha(t), beta(t)
    match r.value:
        case 1:
            return Verdict.of(b == 0)
        case 2:
            return Verdict.of(b.is_finite) & chains.descent(t, n_max).verdict()
        case 3:
            return chains.descent(t, n_max).verdict()
        case 4:
            return Verdict.of(b.is_finite)
        case 5:
            return chains.essential_descent(t, n_max).verdict()
        case 6:
            return Verdict.of(a == 0)
        case 7:
            return Verdict.of(a.is_finite) & chains.ascent(t, n_max).verdict()
        case 8:
            return chains.ascent(t, n_max).verdict()
        case 9:
            return Verdict.of(a.is_finite)
        case 10:
            return chains.essential_ascent(t, n_max).verdict()
        case 11:
            return _r11(t, n_max)
        case 12:
            return _r12(t)
    return _quasi_fredholm_like(t, r)


def _mem_semireg(t: Operator, s: Semireg, m: int) -> Verdict:
    a, b = alpha(t), beta(t)
    name = s.value
    if name in ("LSR1", "LSR3"):
        return Verdict.of(a <= m)
    if name == "LSR2":
        return Verdict.of(b <= m)
    upper, lower = a.is_finite, b.is_finite
    if name == "USR5":
        return Verdict.of(upper and index(t) <= 0)
    if name == "USR6":
        return Verdict.of(lower and index(t) >= 0)
    if not (upper and lower):
        return NO
    ind = index(t).value
    return Verdict.of({
        "USR1": ind >= 0,
        "USR2": ind <= 0,
        "USR3": ind == 0 if m == 0 else ind % m == 0,
        "USR4": ind == 0,
    }[name])


def mem(t: Operator, r: Predicate, n_max: int | None = None, m: int = 0) -> Verdict:
    """Membership of a single operator; ``m`` parametrises LSR1-3 and USR3."""
    if isinstance(r, Reg):
        return _mem_reg(t, r, n_max)
    return _mem_semireg(t, r, m)


def mem_family(f: OpFamily, r: Predicate, m: int | Mapping[str, int] = 0,
               n_max: int | None = None) -> Verdict:
    def m_at(v: str) -> int:
        return m[v] if isinstance(m, Mapping) else m
    return all_of(mem(f[v], r, n_max, m_at(v)) for v in f.space.vertices)


# --- rational-spectrum matrices and R-spectra -----------------------------------------------------

@dataclass(frozen=True)
class RatSpectrumMatrix:
    """A matrix with its full list of rational eigenvalues, certified by the characteristic polynomial."""

    mat: Mat
    eigenvalues: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        eig = tuple(sorted(Fraction(x) for x in self.eigenvalues))
        object.__setattr__(self, "eigenvalues", eig)
        if not self.mat.is_square() or len(eig) != self.mat.rows:
            raise PreconditionError("eigenvalue list must match the matrix size")
        if charpoly(self.mat) != Poly.from_roots(eig).coeffs:
            raise PreconditionError("characteristic polynomial does not split over the listed eigenvalues")

    @property
    def op(self) -> MatrixOp:
        return MatrixOp(self.mat)

    @property
    def spectrum(self) -> frozenset[Fraction]:
        return frozenset(self.eigenvalues)

    @property
    def n(self) -> int:
        return self.mat.rows

    def shifted(self, lam: Fraction) -> MatrixOp:
        """``t - lam I``."""
        return MatrixOp(self.mat - Mat.identity(self.n).scale(lam))

    def apply_poly(self, p: Poly) -> RatSpectrumMatrix:
        return RatSpectrumMatrix(p.eval_matrix(self.mat), tuple(p(x) for x in self.eigenvalues))

    def translate(self, lam: Fraction) -> RatSpectrumMatrix:
        return RatSpectrumMatrix(self.mat + Mat.identity(self.n).scale(lam),
                                 tuple(x + lam for x in self.eigenvalues))

    def to_json(self) -> dict:
        return {"type": "ratspectrum", "matrix": self.mat.to_json(),
                "eigenvalues": [rat_str(x) for x in self.eigenvalues]}


def r_spectrum(t: RatSpectrumMatrix, r: Predicate, m: int = 0) -> frozenset[Fraction]:
    """``{lam : t - lam I not in R}``; only eigenvalues can qualify since invertibles lie in R."""
    out = set()
    for lam in t.spectrum:
        v = mem(t.shifted(lam), r, m=m)
        if v.is_unknown:
            raise PreconditionError(f"membership undecided at eigenvalue {lam}")
        if v.is_no:
            out.add(lam)
    return frozenset(out)


def fmt_set(s: Iterable[Fraction]) -> list[str]:
    return [rat_str(x) for x in sorted(s)]


def fredholm_spectrum(t: RatSpectrumMatrix) -> frozenset[Fraction]:
    """Union of the R4 and R9 spectra, checked against the direct Fredholm test."""
    union = r_spectrum(t, Reg.R4) | r_spectrum(t, Reg.R9)
    direct = frozenset(lam for lam in t.spectrum
                       if not (alpha(t.shifted(lam)).is_finite and beta(t.shifted(lam)).is_finite))
    if union != direct:
        raise AssertionError(f"Fredholm spectrum mismatch: {fmt_set(union)} vs {fmt_set(direct)}")
    return union


def _need_degree(p: Poly) -> None:
    if p.degree < 1:
        raise PreconditionError("spectral mapping checks need a polynomial of degree at least 1")


def smt_check(t: RatSpectrumMatrix, p: Poly, r: Reg, m: int = 0) -> Report:
    """Two-way check: ``p(sigma_R(t)) == sigma_R(p(t))``."""
    _need_degree(p)
    rep = Report(f"smt:{r}", trials=1)
    lhs = frozenset(p(x) for x in r_spectrum(t, r, m))
    rhs = r_spectrum(t.apply_poly(p), r, m)
    rep.check(f"{r} p={p.to_json()}", lhs == rhs, fmt_set(lhs), fmt_set(rhs))
    return rep


def smt_oneway_check(t: RatSpectrumMatrix, p: Poly, s: Predicate, m: int = 0) -> Report:
    """One-way inclusion: lower ids need ``p(sigma) <= sigma(p(t))``, upper ids the reverse."""
    _need_degree(p)
    rep = Report(f"smt-oneway:{s}", trials=1)
    image = frozenset(p(x) for x in r_spectrum(t, s, m))
    of_image = r_spectrum(t.apply_poly(p), s, m)
    lower = isinstance(s, Reg) or s.lower
    if lower:
        rep.check(f"{s} p(sigma) in sigma(p(t))", image <= of_image, fmt_set(image), fmt_set(of_image))
        rep.details = {"reverse_inclusion": of_image <= image}
    else:
        inv_ok = inverse_closure_holds(t, s, m)
        rep.check(f"{s} inverse closure", inv_ok, True, inv_ok)
        rep.check(f"{s} sigma(p(t)) in p(sigma)", of_image <= image, fmt_set(image), fmt_set(of_image))
        rep.details = {"reverse_inclusion": image <= of_image, "inverse_closure": INVERSE_CLOSURE[s]}
    return rep


def inverse_closure_holds(t: RatSpectrumMatrix, s: Semireg, m: int = 0, probes: int = 3) -> bool:
    """Spot check: for invertible members ``t - mu I``, the inverse is a member too."""
    mus = [Fraction(k, 3) for k in range(-6, 7)]
    checked = 0
    for mu in mus:
        if mu in t.spectrum:
            continue
        a = t.shifted(mu)
        if mem(a, s, m=m).is_yes and not mem(MatrixOp(a.mat.inverse()), s, m=m).is_yes:
            return False
        checked += 1
        if checked >= probes:
            break
    return True


def spectrum_soundness(t: RatSpectrumMatrix, preds: Sequence[Predicate], rng: random.Random,
                       probes: int = 5, m: int = 0) -> Report:
    """Off the eigenvalues, ``t - mu I`` is invertible and belongs to every predicate."""
    rep = Report("spectrum-soundness")
    found = 0
    while found < probes:
        mu = Fraction(rng.randint(-40, 40), rng.randint(1, 7))
        if mu in t.spectrum:
            continue
        found += 1
        a = t.shifted(mu)
        rep.trials += 1
        rep.check(f"mu={rat_str(mu)} invertible", a.mat.is_invertible())
        for r in preds:
            rep.check(f"mu={rat_str(mu)} in {r}", mem(a, r, m=m).is_yes)
    return rep


# --- Bezout quadruples -------------------------------------------------------------------------

def bezout_quadruple(t: Operator, p: Poly, q: Poly) -> tuple[MatrixOp, MatrixOp, MatrixOp, MatrixOp]:
    """Commuting ``(p(t), q(t), u(t), v(t))`` with ``u p + v q = 1``."""
    if not isinstance(t, MatrixOp):
        raise UnsupportedOperator("polynomial Bezout quadruples need a matrix operator")
    u, v = bezout_coefficients(p, q)
    return tuple(MatrixOp(f.eval_matrix(t.mat)) for f in (p, q, u, v))  # type: ignore[return-value]


def block_quadruple(t: Operator, u: Operator) -> tuple[DirectSum, DirectSum, DirectSum, DirectSum]:
    """``a = t (+) I``, ``b = I (+) u``, ``c = 0 (+) I``, ``d = I (+) 0``: commuting, ``ac + bd = I``."""
    it, iu = identity_like(t), identity_like(u)
    zero_t = sub(t, t) if isinstance(t, MatrixOp) else ShiftBand(monomial=False)
    zero_u = sub(u, u) if isinstance(u, MatrixOp) else ShiftBand(monomial=False)
    return (DirectSum((t, iu)), DirectSum((it, u)), DirectSum((zero_t, iu)), DirectSum((it, zero_u)))


def quadruple_identity_holds(a: Operator, b: Operator, c: Operator, d: Operator) -> bool:
    """``ac + bd = I`` and pairwise commutation, compared in normal form."""
    ops = (a, b, c, d)
    if add(compose(a, c), compose(b, d)) != identity_like(a):
        return False
    return all(compose(x, y) == compose(y, x) for x in ops for y in ops)


# --- suites ---------------------------------------------------------------------------------------

def _tally(details: dict, axiom: str, outcome: str) -> None:
    row = details.setdefault(axiom, {"pass": 0, "fail": 0, "unknown": 0})
    row[outcome] += 1


def _record(rep: Report, axiom: str, case: str, outcome: str, expected=None, got=None) -> None:
    rep.record(f"{axiom}: {case}", outcome, expected, got)
    _tally(rep.details.setdefault("axioms", {}), axiom, outcome)


def _implication(premise: Verdict, conclusion: Verdict) -> str:
    if not premise.is_yes:
        return "pass" if not premise.is_unknown else "unknown"
    if conclusion.is_yes:
        return "pass"
    return "fail" if conclusion.is_no else "unknown"


def _equivalence(x: Verdict, y: Verdict) -> str:
    if x.is_unknown or y.is_unknown:
        return "unknown"
    return "pass" if x.kind == y.kind else "fail"


def _default_kind(r: Predicate) -> str:
    if isinstance(r, Reg):
        return "regularity"
    return "lower" if r.lower else "upper"


def axiom_suite(r: Predicate, kind: str | None = None, trials: int = 200, seed: int = 0,
                m: int = 0, n_max: int | None = None) -> Report:
    """Seeded check of the power axiom, the Bezout axiom and (upper kind) the unit neighbourhood."""
    from . import corpus

    kind = kind or _default_kind(r)
    if kind not in ("regularity", "lower", "upper"):
        raise ValueError(f"unknown axiom kind {kind!r}")
    rng = random.Random(seed)
    rep = Report(f"axioms:{r}:{kind}", trials=trials)
    rep.details["axioms"] = {}

    def member(t: Operator) -> Verdict:
        return mem(t, r, n_max, m)

    def judge(axiom: str, case: str, premise: Verdict, concl: Verdict, both: tuple[Verdict, Verdict]) -> None:
        if kind == "regularity":
            outcome = _equivalence(*both)
        else:
            outcome = _implication(premise, concl)
        _record(rep, axiom, case, outcome, str(both[0]), str(both[1]))

    for i in range(trials):
        use_shift = i % 2 == 1
        t = corpus.axiom_shift(rng) if use_shift else corpus.matrix_op(rng, rng.randint(1, 4))
        case = f"trial {i}"

        n = rng.choice((2, 3))
        va, vn = member(t), member(power(t, n))
        if kind == "upper":
            judge("power", case, va, vn, (va, vn))
        else:
            judge("power", case, vn, va, (va, vn))

        if use_shift:
            u = corpus.axiom_shift(rng)
            a, b, c, d = block_quadruple(t, u)
        else:
            p, q = corpus.coprime_pair(rng, t)
            a, b, c, d = bezout_quadruple(t, p, q)
        if not quadruple_identity_holds(a, b, c, d):
            _record(rep, "bezout-identity", case, "fail", "ac+bd=I, commuting", "violated")
            continue
        va, vb, vab = member(a), member(b), member(compose(a, b))
        both_factors = va & vb
        if kind == "upper":
            judge("bezout", case, both_factors, vab, (both_factors, vab))
        else:
            judge("bezout", case, vab, both_factors, (vab, both_factors))

        if kind == "upper":
            e = corpus.near_identity(rng, rng.randint(1, 4))
            if e.mat.inf_norm() - 1 >= Fraction(1, 2):
                raise AssertionError("near-identity generator left the norm ball")
            _record(rep, "unit-neighbourhood", case, "pass" if member(e).is_yes else "fail", "yes",
                    str(member(e)))
    return rep


def lemma_suite(s: Predicate, trials: int = 50, seed: int = 0, m: int = 0) -> Report:
    """The five listed consequences of the semiregularity axioms, on rational-spectrum matrices."""
    from . import corpus

    rng = random.Random(seed)
    rep = Report(f"lemma:{s}", trials=trials)
    rep.details["axioms"] = {}
    for i in range(trials):
        case = f"trial {i}"
        t = corpus.rat_spectrum_matrix(rng, rng.randint(1, 5))
        n = t.n
        ident = MatrixOp(Mat.identity(n))
        _record(rep, "unit", case, "pass" if mem(ident, s, m=m).is_yes else "fail")

        inv = corpus.invertible_matrix(rng, n)
        _record(rep, "invertibles", case, "pass" if mem(inv, s, m=m).is_yes else "fail")

        mu = corpus.off_spectrum(rng, t)
        b = t.shifted(mu)  # invertible, commutes with t
        va = mem(t.op, s, m=m)
        vab = mem(compose(t.op, b), s, m=m)
        _record(rep, "invertible-factor", case, _implication(va, vab), str(va), str(vab))

        probe = spectrum_soundness(t, [s], rng, probes=2, m=m)
        _record(rep, "spectrum-inclusion", case, "pass" if probe.ok else "fail", "subset", probe.failures)

        lam = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        lhs = r_spectrum(t.translate(lam), s, m)
        rhs = frozenset(x + lam for x in r_spectrum(t, s, m))
        _record(rep, "translation", case, "pass" if lhs == rhs else "fail", fmt_set(rhs), fmt_set(lhs))
    return rep


def finite_rank_stability(t: OpFamily, f: FiniteRankFamily, r: Reg, n_max: int | None = None) -> Report:
    if r not in STABLE_UNDER_FINITE_RANK:
        raise PreconditionError(f"{r} is not among the regularities stable under finite-rank perturbation")
    before = mem_family(t, r, n_max=n_max)
    if before.is_no:
        raise PreconditionError(f"family is not in {r}")
    rep = Report(f"finite-rank-stability:{r}", trials=1)
    if before.is_unknown:
        rep.record(str(r), "unknown", "yes", str(before))
        return rep
    after = mem_family(perturb(t, f), r, n_max=n_max)
    outcome = "pass" if after.is_yes else ("fail" if after.is_no else "unknown")
    rep.record(str(r), outcome, "yes", str(after))
    return rep


def factor_implications(t1: OpFamily, t2: OpFamily, n_max: int | None = None) -> Report:
    """If ``T1 T2`` is in R9 then ``T2`` is; in R4 then ``T1`` is; Fredholm gives both."""
    rep = Report("factor-implications", trials=len(t1.space.vertices))
    prod = OpFamily(t1.space, {v: compose(t1[v], t2[v]) for v in t1.space.vertices})
    p9, p4 = mem_family(prod, Reg.R9), mem_family(prod, Reg.R4)
    t2_9, t1_4 = mem_family(t2, Reg.R9), mem_family(t1, Reg.R4)
    rep.record("product in R9 => T2 in R9", _implication(p9, t2_9), "yes", str(t2_9))
    rep.record("product in R4 => T1 in R4", _implication(p4, t1_4), "yes", str(t1_4))
    rep.record("product Fredholm => T1 in R4 and T2 in R9", _implication(p9 & p4, t1_4 & t2_9),
               "yes", str(t1_4 & t2_9))
    rep.details = {"product": {"R4": str(p4), "R9": str(p9)}}
    return rep


def factorization_witness(t: Operator, extra: int = 4) -> Report:
    """``t u - I`` is finite rank: compare columns ``e_0 .. e_{W+extra}`` against ``k``."""
    rep = Report("factorization-witness", trials=1)
    u, k, _ = quasi_inverse(t)
    rep.check("k has finite rank", is_finite_rank(k))
    span = (t.W + t.fwd + t.bwd if isinstance(t, ShiftBand) else t.n - 1) + extra
    for j in range(span + 1):
        if isinstance(t, MatrixOp) and j >= t.n:
            break
        e = FinVec.e(j)
        lhs = apply(t, apply(u, e)) - e
        rep.check(f"column {j}", lhs == apply(k, e), apply(k, e).coords, lhs.coords)
    _, kl = left_quasi_inverse(t)
    rep.check("left quasi-inverse remainder has finite rank", is_finite_rank(kl))
    return rep


_CHAINS: tuple[tuple[Sequence[Reg], ...], ...] = (
    ((Reg.R1,), (Reg.R2,), (Reg.R3,), (Reg.R3, Reg.R4), (Reg.R5,), (Reg.R13,)),
    ((Reg.R6,), (Reg.R7,), (Reg.R8,), (Reg.R8, Reg.R9), (Reg.R10,), (Reg.R13,)),
    ((Reg.R11,), (Reg.R12,), (Reg.R13,), (Reg.R13, Reg.R14), (Reg.R15,), (Reg.R16,)),
)


def inclusion_chain_suite(ops: Iterable[Operator], n_max: int | None = None) -> Report:
    """Along every listed chain ``A < B``: Yes for A forbids No for B."""
    ops = list(ops)
    rep = Report("inclusion-chains", trials=len(ops))
    for i, t in enumerate(ops):
        cache: dict[Reg, Verdict] = {}

        def verdict(group: Sequence[Reg]) -> Verdict:
            for r in group:
                if r not in cache:
                    cache[r] = mem(t, r, n_max)
            return any_of(cache[r] for r in group)

        for chain in _CHAINS:
            for lo, hi in zip(chain, chain[1:]):
                a, b = verdict(lo), verdict(hi)
                name = f"op {i}: {'u'.join(map(str, lo))} < {'u'.join(map(str, hi))}"
                rep.record(name, _implication(a, b), str(a), str(b))
    return rep


def usr4_intersection_check(ops: Iterable[Operator]) -> Report:
    ops = list(ops)
    rep = Report("usr4-intersection", trials=len(ops))
    for i, t in enumerate(ops):
        w = mem(t, Semireg.USR4)
        both = mem(t, Semireg.USR1) & mem(t, Semireg.USR2)
        rep.record(f"op {i}", _equivalence(w, both), str(both), str(w))
    return rep


ALL_REGS = tuple(Reg)
ALL_SEMIREGS = tuple(Semireg)


def verdict_table(t: Operator, n_max: int | None = None, m: int = 0) -> dict[str, object]:
    out = {str(r): mem(t, r, n_max).to_json() for r in ALL_REGS}
    out.update({str(s): mem(t, s, m=m).to_json() for s in ALL_SEMIREGS})
    return out
