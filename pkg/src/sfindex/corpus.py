"""Seeded generators for operators, matrices, polynomials, graphs and families.

Every generator takes a ``random.Random`` so that suites are reproducible from
a single seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .family import FiniteRankFamily, Homotopy, OpFamily, ParamSpace, interpolate, jitter_family
from .opmodel import DirectSum, MatrixOp, OmegaShift, Operator, ShiftBand
from .poly import Poly, poly_gcdex
from .ratlin import Mat

SMALL_EIGS = tuple(Fraction(x) for x in (-2, -1, 0, 0, 1, 1, 2, 3)) + (Fraction(1, 2), Fraction(-3, 2))


def rat(rng: random.Random, lo: int = -3, hi: int = 3, dens: int = 2) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, dens))


def sparse_entry(rng: random.Random, zero_weight: float = 0.5) -> Fraction:
    if rng.random() < zero_weight:
        return Fraction(0)
    return Fraction(rng.choice((-2, -1, 1, 1, 2, 3)), rng.choice((1, 1, 2)))


def window(rng: random.Random, size: int, zero_weight: float = 0.5) -> Mat:
    return Mat.from_rows([[sparse_entry(rng, zero_weight) for _ in range(size)] for _ in range(size)], size)


def shift_op(rng: random.Random, max_ab: int = 4, max_w: int = 6) -> tuple[ShiftBand, int, int]:
    """``S+^a S-^b + F`` with raw exponents ``a + b <= max_ab``; returns ``(op, a, b)``."""
    total = rng.randint(0, max_ab)
    a = rng.randint(0, total)
    b = total - a
    w = rng.randint(0, max_w)
    return ShiftBand(a, b, window(rng, w)), a, b


def axiom_shift(rng: random.Random) -> ShiftBand:
    """Small shift-band operator for the axiom suites (cheap chains)."""
    return shift_op(rng, max_ab=2, max_w=3)[0]


def unimodular(rng: random.Random, n: int, moves: int | None = None) -> Mat:
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(moves if moves is not None else 2 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return Mat.from_rows(rows, n)


def jordan_matrix(blocks: list[tuple[Fraction, int]]) -> Mat:
    n = sum(k for _, k in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for lam, k in blocks:
        for i in range(k):
            rows[pos + i][pos + i] = lam
            if i + 1 < k:
                rows[pos + i][pos + i + 1] = Fraction(1)
        pos += k
    return Mat.from_rows(rows, n)


def rat_spectrum_matrix(rng: random.Random, n: int):
    """``P J P^-1`` with unimodular ``P`` and ``J`` a Jordan matrix with small rational eigenvalues."""
    from .regmem import RatSpectrumMatrix

    blocks: list[tuple[Fraction, int]] = []
    left = n
    while left:
        k = rng.randint(1, min(left, 3))
        blocks.append((rng.choice(SMALL_EIGS), k))
        left -= k
    j = jordan_matrix(blocks)
    p = unimodular(rng, n)
    eig = tuple(lam for lam, k in blocks for _ in range(k))
    return RatSpectrumMatrix(p @ j @ p.inverse(), eig)


def invertible_matrix(rng: random.Random, n: int) -> MatrixOp:
    d = Mat.diag([Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 3)) for _ in range(n)])
    return MatrixOp(unimodular(rng, n) @ d @ unimodular(rng, n))


def matrix_op(rng: random.Random, n: int) -> MatrixOp:
    """Mix of sparse random, low-rank and Jordan-like matrices."""
    style = rng.randrange(3)
    if style == 0:
        return MatrixOp(window(rng, n, 0.6))
    if style == 1:
        r = rng.randint(0, n)
        left = Mat.from_rows([[sparse_entry(rng, 0.3) for _ in range(r)] for _ in range(n)], r)
        right = Mat.from_rows([[sparse_entry(rng, 0.3) for _ in range(n)] for _ in range(r)], n)
        return MatrixOp(left @ right if r else Mat.zeros(n))
    return rat_spectrum_matrix(rng, n).op


def near_identity(rng: random.Random, n: int) -> MatrixOp:
    """``I + E`` with every row sum of ``|E|`` at most 1/4."""
    e = Mat.from_rows([[Fraction(rng.randint(-1, 1), 4 * n) for _ in range(n)] for _ in range(n)], n)
    return MatrixOp(Mat.identity(n) + e)


def off_spectrum(rng: random.Random, t) -> Fraction:
    while True:
        mu = rat(rng, -9, 9, 4)
        if mu not in t.spectrum:
            return mu


def poly(rng: random.Random, lo: int = 1, hi: int = 3) -> Poly:
    deg = rng.randint(lo, hi)
    coeffs = [rat(rng, -3, 3, 2) for _ in range(deg)]
    lead = Fraction(rng.choice((-2, -1, 1, 1, 2)), rng.choice((1, 2)))
    return Poly(tuple(coeffs) + (lead,))


def coprime_pair(rng: random.Random, t: Operator | None = None) -> tuple[Poly, Poly]:
    """Two coprime polynomials whose roots are small rationals (often eigenvalues)."""
    while True:
        roots = rng.sample(SMALL_EIGS, 3)
        k = rng.randint(1, 2)
        p = Poly.from_roots(roots[:k]).scale(rng.choice((1, 2, -1)))
        q = Poly.from_roots(roots[k:]).scale(rng.choice((1, Fraction(1, 2))))
        if poly_gcdex(p, q)[0].degree == 0:
            return p, q


# --- graphs and families ---------------------------------------------------------------------------

def graph(rng: random.Random, max_vertices: int = 20, max_components: int = 3) -> ParamSpace:
    n_comp = rng.randint(1, max_components)
    total = rng.randint(n_comp, max_vertices)
    sizes = [1] * n_comp
    for _ in range(total - n_comp):
        sizes[rng.randrange(n_comp)] += 1
    vertices, edges = [], []
    for c, size in enumerate(sizes):
        vs = [f"c{c}v{i}" for i in range(size)]
        vertices.extend(vs)
        for i in range(1, size):
            edges.append((vs[rng.randrange(i)], vs[i]))
        for _ in range(rng.randint(0, size // 2)):
            x, y = rng.choice(vs), rng.choice(vs)
            if x != y:
                edges.append((x, y))
    rng.shuffle(edges)
    return ParamSpace(tuple(vertices), tuple(edges))


def lane(rng: random.Random, kind: str) -> dict:
    """A per-component template: a monomial signature plus window sizes."""
    if kind == "shift":
        total = rng.randint(0, 2)
        a = rng.randint(0, total)
        return {"kind": "shift", "fwd": a, "bwd": total - a, "w": rng.randint(0, 3)}
    if kind == "matrix":
        return {"kind": "matrix", "n": rng.randint(1, 4)}
    if kind == "omega":
        return {"kind": "omega", "dir": rng.choice(("fwd", "bwd"))}
    return {"kind": "sum", "parts": [lane(rng, "shift"), lane(rng, "omega")]}


def _instance(rng: random.Random, lane: dict) -> Operator:
    match lane["kind"]:
        case "shift":
            return ShiftBand(lane["fwd"], lane["bwd"], window(rng, lane["w"]))
        case "matrix":
            return MatrixOp(window(rng, lane["n"]))
        case "omega":
            return OmegaShift(lane["dir"])
    return DirectSum(tuple(_instance(rng, p) for p in lane["parts"]))


def family(rng: random.Random, space: ParamSpace | None = None, kinds: tuple[str, ...] = ("shift", "matrix"),
           lanes: dict[str, dict] | None = None) -> OpFamily:
    """Admissible family: one signature per component, windows vary per vertex."""
    from .family import components

    space = space or graph(rng)
    comps = components(space)
    if lanes is None:
        lanes = {rep: lane(rng, rng.choice(kinds)) for rep in comps.classes()}
    return OpFamily(space, {v: _instance(rng, lanes[comps.rep[v]]) for v in space.vertices})


def family_lanes(rng: random.Random, space: ParamSpace, kinds: tuple[str, ...] = ("shift", "matrix")) -> dict:
    from .family import components

    return {rep: lane(rng, rng.choice(kinds)) for rep in components(space).classes()}


def finite_rank_family(rng: random.Random, f: OpFamily) -> FiniteRankFamily:
    return jitter_family(f, rng, Fraction(1))


def homotopy(rng: random.Random, steps: int = 5, kinds: tuple[str, ...] = ("shift", "matrix", "omega")) -> Homotopy:
    space = graph(rng, max_vertices=10)
    lanes = family_lanes(rng, space, kinds)
    f0 = family(rng, space, lanes=lanes)
    f1 = family(rng, space, lanes=lanes)
    return interpolate(f0, f1, steps)
