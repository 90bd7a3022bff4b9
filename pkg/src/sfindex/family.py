"""Operator families over a finite parameter graph.

A finite graph stands in for the compact parameter space; its connected
components play the role of the component quotient. Continuity of a family is
replaced by an admissibility contract: the operators at the two ends of an
edge share their variant layout and shift monomials, so they differ by a
finite-rank operator and therefore have equal index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from networkx.utils import UnionFind

from .errors import (
    AdmissibilityError,
    LayoutError,
    MixedTypeError,
    NonConstantIndex,
    NotSemiFredholm,
    SchemaError,
    SFIndexError,
    UnsupportedOperator,
)
from .opmodel import (
    DirectSum,
    ExtInt,
    MatrixOp,
    OmegaShift,
    Operator,
    ShiftBand,
    add,
    compose,
    index,
    is_finite_rank,
    is_lower_sf,
    is_semi_fredholm,
    is_upper_sf,
    signature,
)
from .ratlin import Mat
from .results import Report


@dataclass(frozen=True)
class ParamSpace:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple((str(a), str(b)) for a, b in self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise SchemaError("duplicate vertex label", "$.vertices")
        known = set(self.vertices)
        for i, (a, b) in enumerate(self.edges):
            for v in (a, b):
                if v not in known:
                    raise SchemaError(f"edge {i} ({a}, {b}) refers to unknown vertex {v!r}",
                                      f"$.edges[{i}]")

    @classmethod
    def path(cls, n: int, prefix: str = "v") -> ParamSpace:
        vs = [f"{prefix}{i}" for i in range(n)]
        return cls(tuple(vs), tuple(zip(vs, vs[1:])))

    @classmethod
    def cycle(cls, n: int, prefix: str = "v") -> ParamSpace:
        vs = [f"{prefix}{i}" for i in range(n)]
        return cls(tuple(vs), tuple((vs[i], vs[(i + 1) % n]) for i in range(n)))

    def disjoint_union(self, other: ParamSpace) -> ParamSpace:
        return ParamSpace(self.vertices + other.vertices, self.edges + other.edges)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Components:
    rep: dict[str, str]

    @property
    def count(self) -> int:
        return len(set(self.rep.values()))

    def classes(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for v, r in self.rep.items():
            out.setdefault(r, []).append(v)
        return dict(sorted(out.items()))

    def same(self, x: str, y: str) -> bool:
        return self.rep[x] == self.rep[y]


def components(p: ParamSpace) -> Components:
    """Connected components; each class is represented by its smallest label."""
    uf = UnionFind(p.vertices)
    for a, b in p.edges:
        uf.union(a, b)
    rep: dict[str, str] = {}
    for group in uf.to_sets():
        r = min(group)
        for v in group:
            rep[v] = r
    return Components({v: rep[v] for v in p.vertices})


def _check_assignment(space: ParamSpace, ops: Mapping[str, Operator]) -> None:
    missing = [v for v in space.vertices if v not in ops]
    extra = [v for v in ops if v not in set(space.vertices)]
    if missing or extra:
        raise SchemaError(f"operator assignment mismatch: missing {missing}, unknown {extra}", "$.ops")


@dataclass(frozen=True, eq=True)
class OpFamily:
    space: ParamSpace
    ops: dict[str, Operator]

    def __post_init__(self) -> None:
        _check_assignment(self.space, self.ops)
        for i, (a, b) in enumerate(self.space.edges):
            if a == b:
                continue
            sa, sb = signature(self.ops[a]), signature(self.ops[b])
            if sa != sb:
                raise AdmissibilityError(
                    f"edge {i} ({a}, {b}) joins operators with different signatures {sa} and {sb}",
                    (a, b), i)

    @classmethod
    def constant(cls, space: ParamSpace, t: Operator) -> OpFamily:
        return cls(space, {v: t for v in space.vertices})

    def __getitem__(self, v: str) -> Operator:
        return self.ops[v]

    def map(self, fn) -> OpFamily:
        return OpFamily(self.space, {v: fn(t) for v, t in self.ops.items()})


@dataclass(frozen=True, eq=True)
class FiniteRankFamily:
    space: ParamSpace
    ops: dict[str, Operator]

    def __post_init__(self) -> None:
        _check_assignment(self.space, self.ops)
        for v, t in self.ops.items():
            if not is_finite_rank(t):
                raise UnsupportedOperator(f"operator at {v!r} is not of finite rank")

    def __getitem__(self, v: str) -> Operator:
        return self.ops[v]


@dataclass(frozen=True)
class Homotopy:
    space: ParamSpace
    steps: tuple[OpFamily, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise SchemaError("a homotopy needs at least one step", "$.steps")
        for i, step in enumerate(self.steps):
            if step.space != self.space:
                raise SchemaError(f"step {i} lives on a different parameter space", f"$.steps[{i}]")
        for i in range(1, len(self.steps)):
            prev, cur = self.steps[i - 1], self.steps[i]
            for v in self.space.vertices:
                if signature(prev[v]) != signature(cur[v]):
                    raise AdmissibilityError(
                        f"steps {i - 1} and {i} change the monomial signature at vertex {v!r}",
                        (f"step{i - 1}:{v}", f"step{i}:{v}"), i)


# --- index -----------------------------------------------------------------------------

def vertex_index(f: OpFamily, v: str) -> ExtInt:
    t = f[v]
    if not is_semi_fredholm(t).is_yes:
        raise NotSemiFredholm(f"operator at vertex {v!r} is not semi-Fredholm", v)
    return index(t)


def family_index(f: OpFamily) -> dict[str, ExtInt]:
    """Index per component, after checking that it is constant on each component."""
    comps = components(f.space)
    out: dict[str, ExtInt] = {}
    for rep, members in comps.classes().items():
        first = members[0]
        ix = vertex_index(f, first)
        for y in members[1:]:
            iy = vertex_index(f, y)
            if iy != ix:
                raise NonConstantIndex(rep, first, y, ix, iy)
        out[rep] = ix
    return out


def index_json(ix: Mapping[str, ExtInt]) -> dict[str, int | str]:
    return {k: v.to_json() for k, v in ix.items()}


def _same_space(a, b) -> None:
    if a.space != b.space:
        raise LayoutError("families live on different parameter spaces")


def perturb(f: OpFamily, k: FiniteRankFamily) -> OpFamily:
    _same_space(f, k)
    return OpFamily(f.space, {v: add(f[v], k[v]) for v in f.space.vertices})


def compose_families(s: OpFamily, t: OpFamily) -> OpFamily:
    """Vertexwise product ``S_x T_x``; both factors must be upper or both lower semi-Fredholm."""
    _same_space(s, t)
    out = {}
    for v in s.space.vertices:
        both_upper = (is_upper_sf(s[v]) & is_upper_sf(t[v])).is_yes
        both_lower = (is_lower_sf(s[v]) & is_lower_sf(t[v])).is_yes
        if not (both_upper or both_lower):
            raise MixedTypeError(f"vertex {v!r}: factors are neither both upper nor both lower semi-Fredholm")
        out[v] = compose(s[v], t[v])
    return OpFamily(s.space, out)


def homotopy_check(h: Homotopy) -> Report:
    rep = Report("homotopy", trials=len(h.steps))
    first = index_json(family_index(h.steps[0]))
    for i, step in enumerate(h.steps):
        got = index_json(family_index(step))
        rep.check(f"step {i}", got == first, expected=first, got=got)
    rep.details = {"index": first, "steps": len(h.steps)}
    return rep


# --- norms and probes ---------------------------------------------------------------------

def sup_norm(f: OpFamily) -> Fraction:
    """Largest induced infinity-norm over the vertices (matrix families only)."""
    norms = []
    for v, t in f.ops.items():
        if not isinstance(t, MatrixOp):
            raise UnsupportedOperator(f"sup_norm needs matrix operators; vertex {v!r} is not one")
        norms.append(t.mat.inf_norm())
    return max(norms, default=Fraction(0))


def _jitter(t: Operator, rng: random.Random, scale: Fraction) -> Operator:
    """A small finite-rank operator with the layout of ``t``."""
    def small() -> Fraction:
        return Fraction(rng.randint(-3, 3), rng.randint(1, 4)) * scale

    match t:
        case MatrixOp():
            return MatrixOp(Mat.from_rows([[small() for _ in range(t.n)] for _ in range(t.n)], t.n))
        case ShiftBand():
            w = max(t.W, 1) + rng.randint(0, 1)
            return ShiftBand(window=Mat.from_rows([[small() for _ in range(w)] for _ in range(w)], w),
                             monomial=False)
        case OmegaShift():
            return ShiftBand(monomial=False)
        case DirectSum():
            return DirectSum(tuple(_jitter(p, rng, scale) for p in t.parts))
    raise UnsupportedOperator(type(t).__name__)


def jitter_family(f: OpFamily, rng: random.Random, scale: Fraction = Fraction(1, 8)) -> FiniteRankFamily:
    return FiniteRankFamily(f.space, {v: _jitter(t, rng, scale) for v, t in f.ops.items()})


def local_constancy_probe(f: OpFamily, trials: int = 100, seed: int = 0) -> Report:
    """Perturb by seeded finite-rank jitter and compare family indices."""
    rng = random.Random(seed)
    rep = Report("local-constancy", trials=trials)
    base = index_json(family_index(f))
    for i in range(trials):
        g = perturb(f, jitter_family(f, rng))
        try:
            got = index_json(family_index(g))
        except SFIndexError as exc:
            rep.record(f"trial {i}", "fail", base, f"{type(exc).__name__}: {exc}")
            continue
        rep.check(f"trial {i}", got == base, expected=base, got=got)
    rep.details = {"index": base}
    return rep


# --- interpolation ------------------------------------------------------------------------

def _lerp(a: Operator, b: Operator, tau: Fraction) -> Operator:
    if signature(a) != signature(b):
        raise AdmissibilityError(f"cannot interpolate between signatures {signature(a)} and {signature(b)}")
    match a, b:
        case MatrixOp(), MatrixOp():
            return MatrixOp(a.mat.scale(1 - tau) + b.mat.scale(tau))
        case ShiftBand(), ShiftBand():
            n = max(a.W, b.W)
            w = a.window.pad(n).scale(1 - tau) + b.window.pad(n).scale(tau)
            return ShiftBand(a.fwd, a.bwd, w, a.monomial)
        case OmegaShift(), OmegaShift():
            return a
        case DirectSum(), DirectSum():
            return DirectSum(tuple(_lerp(x, y, tau) for x, y in zip(a.parts, b.parts)))
    raise UnsupportedOperator(type(a).__name__)


def interpolate(f0: OpFamily, f1: OpFamily, steps: int = 5) -> Homotopy:
    """Straight-line homotopy of windows and matrix entries at ``tau = i / (steps - 1)``."""
    _same_space(f0, f1)
    if steps < 2:
        raise ValueError("need at least two steps")
    fams = []
    for i in range(steps):
        tau = Fraction(i, steps - 1)
        fams.append(OpFamily(f0.space, {v: _lerp(f0[v], f1[v], tau) for v in f0.space.vertices}))
    return Homotopy(f0.space, tuple(fams))

