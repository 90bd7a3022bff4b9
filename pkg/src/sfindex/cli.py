"""Command-line front end.

Exit codes: 0 success, 1 input or validation error, 2 a checked property was
violated, 3 nothing failed but some checks were undecided.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Sequence

from . import chains, suites
from .errors import AdmissibilityError, NonConstantIndex, SchemaError, SFIndexError
from .family import Homotopy, OpFamily, components, family_index, homotopy_check, index_json, local_constancy_probe
from .jsonio import detect_kind, dumps, load_any, poly_from_text, read_json
from .opmodel import (
    alpha,
    beta,
    index,
    is_fredholm,
    is_lower_sf,
    is_semi_fredholm,
    is_upper_sf,
    variant_name,
)
from .regmem import (
    ALL_REGS,
    ALL_SEMIREGS,
    RatSpectrumMatrix,
    Reg,
    axiom_suite,
    fmt_set,
    fredholm_spectrum,
    lemma_suite,
    mem,
    mem_family,
    parse_predicate,
    r_spectrum,
    smt_check,
    smt_oneway_check,
)
from .results import Report

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_UNKNOWN = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str, *kinds: str):
    doc = read_json(path)
    kind, value = load_any(doc)
    if kinds and kind not in kinds:
        raise InputError(f"{path}: expected {' or '.join(kinds)}, found {kind}")
    return kind, value


def _operator(path: str):
    """Returns ``(operator, certified spectrum or None)``."""
    _, value = _load(path, "operator")
    if isinstance(value, RatSpectrumMatrix):
        return value.op, value
    return value, None


def _preds(names: Sequence[str] | None, default) -> list:
    return [parse_predicate(n) for n in names] if names else list(default)


# --- commands ----------------------------------------------------------------------------

def cmd_invariants(args) -> tuple[Any, int]:
    t, cert = _operator(args.file)
    bound = args.chain_bound if args.chain_bound is not None else chains.default_bound(t)
    out: dict[str, Any] = {
        "variant": variant_name(t),
        "alpha": alpha(t).to_json(),
        "beta": beta(t).to_json(),
        "upper_semi_fredholm": is_upper_sf(t).to_json(),
        "lower_semi_fredholm": is_lower_sf(t).to_json(),
        "semi_fredholm": is_semi_fredholm(t).to_json(),
        "fredholm": is_fredholm(t).to_json(),
        "index": index(t).to_json() if is_semi_fredholm(t).is_yes else None,
        "ascent": chains.ascent(t, bound).to_json(),
        "descent": chains.descent(t, bound).to_json(),
        "essential_ascent": chains.essential_ascent(t, bound).to_json(),
        "essential_descent": chains.essential_descent(t, bound).to_json(),
        "uniform_descent": chains.uniform_descent_from(t, bound).to_json(),
        "has_tud": chains.has_tud(t, bound).to_json(),
        "chain_bound": bound,
        "table": {
            "n": list(range(bound + 1)),
            "c_prime": [chains.c_prime_n(t, n).to_json() for n in range(bound + 1)],
            "c": [chains.c_n(t, n).to_json() for n in range(bound + 1)],
            "k": [chains.k_n(t, n).to_json() for n in range(bound + 1)],
        },
    }
    if cert is not None:
        out["eigenvalues"] = fmt_set(cert.eigenvalues)
    return out, EXIT_OK


def cmd_family_index(args) -> tuple[Any, int]:
    _, f = _load(args.file, "family")
    try:
        ix = family_index(f)
    except NonConstantIndex as exc:
        return {"error": "NonConstantIndex", "message": str(exc), "component": exc.component}, EXIT_VIOLATION
    return {"components": components(f.space).count, "index": index_json(ix)}, EXIT_OK


def cmd_membership(args) -> tuple[Any, int]:
    kind, value = _load(args.file, "operator", "family")
    preds = _preds(args.reg, ALL_REGS + ALL_SEMIREGS)
    if kind == "family":
        verdicts = {str(r): mem_family(value, r, args.m, args.chain_bound).to_json() for r in preds}
    else:
        t = value.op if isinstance(value, RatSpectrumMatrix) else value
        verdicts = {str(r): mem(t, r, args.chain_bound, args.m).to_json() for r in preds}
    return {"kind": kind, "m": args.m, "verdicts": verdicts}, EXIT_OK


def _spectrum_input(path: str) -> RatSpectrumMatrix:
    _, cert = _operator(path)
    if cert is None:
        raise InputError(f"{path}: spectra need a certified-spectrum matrix (type 'ratspectrum')")
    return cert


def cmd_spectrum(args) -> tuple[Any, int]:
    t = _spectrum_input(args.file)
    preds = _preds(args.reg, ALL_REGS + ALL_SEMIREGS)
    return {
        "eigenvalues": fmt_set(t.spectrum),
        "spectra": {str(r): fmt_set(r_spectrum(t, r, args.m)) for r in preds},
        "fredholm": fmt_set(fredholm_spectrum(t)),
    }, EXIT_OK


def cmd_smt_check(args) -> tuple[Any, int]:
    t = _spectrum_input(args.file)
    p = poly_from_text(args.poly)
    rep = Report("smt-check")
    for r in _preds(args.reg, ALL_REGS + ALL_SEMIREGS):
        sub = smt_check(t, p, r, args.m) if isinstance(r, Reg) else smt_oneway_check(t, p, r, args.m)
        rep.trials += 1
        rep.merge(sub)
    return rep, rep.exit_code


SUITES: dict[str, Callable[..., Report]] = {
    "index": lambda a: suites.index_suite(a.trials, a.seed),
    "perturbation": lambda a: suites.perturbation_suite(a.trials, a.seed),
    "composition": lambda a: suites.composition_suite(a.trials, a.seed),
    "homotopy": lambda a: suites.homotopy_suite(a.trials, a.seed),
    "goldens": lambda a: suites.golden_chain_suite(),
    "smt": lambda a: suites.smt_suite(a.trials, 5, a.seed),
    "inclusion": lambda a: suites.inclusion_suite(a.trials, a.seed),
    "stability": lambda a: suites.stability_suite(a.trials, a.seed),
    "factor": lambda a: suites.factor_suite(a.trials, a.seed),
    "quasi-inverse": lambda a: suites.quasi_inverse_suite(a.trials, a.seed),
    "semiregularities": lambda a: suites.lower_upper_suite(a.trials, a.seed, a.m),
    "weyl": lambda a: suites.weyl_suite(a.trials, a.seed),
    "regularity-axioms": lambda a: suites.regularity_axioms_suite(a.trials, a.seed),
}


def _axioms(args) -> Report:
    preds = _preds(args.reg, ALL_REGS)
    if len(preds) == 1:
        return axiom_suite(preds[0], args.kind, args.trials, args.seed, args.m, args.chain_bound)
    rep = Report("axioms", trials=args.trials * len(preds))
    for r in preds:
        rep.merge(axiom_suite(r, args.kind, args.trials, args.seed, args.m, args.chain_bound), f"{r} ")
    return rep


def _lemma(args) -> Report:
    preds = _preds(args.reg, ALL_SEMIREGS)
    rep = Report("lemma", trials=args.trials * len(preds))
    for r in preds:
        rep.merge(lemma_suite(r, args.trials, args.seed, args.m), f"{r} ")
    return rep


def cmd_suite(args) -> tuple[Any, int]:
    if args.name == "axioms":
        rep = _axioms(args)
    elif args.name == "lemma":
        rep = _lemma(args)
    else:
        rep = SUITES[args.name](args)
    return rep, rep.exit_code


def cmd_homotopy_check(args) -> tuple[Any, int]:
    _, h = _load(args.file, "homotopy")
    rep = homotopy_check(h)
    return rep, rep.exit_code


def cmd_probe(args) -> tuple[Any, int]:
    _, f = _load(args.file, "family")
    rep = local_constancy_probe(f, args.trials, args.seed)
    return rep, rep.exit_code


def cmd_validate(args) -> tuple[Any, int]:
    doc = read_json(args.file)
    kind = detect_kind(doc)
    _, value = load_any(doc)
    notes = []
    if kind == "operator" and doc.get("type") == "shiftband" and doc["fwd"] and doc["bwd"]:
        notes.append("monomial rewritten to normal form with a window correction")
    out: dict[str, Any] = {"file": args.file, "kind": kind, "valid": True, "notes": notes}
    if isinstance(value, OpFamily):
        out["components"] = components(value.space).count
    if isinstance(value, Homotopy):
        out["steps"] = len(value.steps)
    return out, EXIT_OK


# --- parser ------------------------------------------------------------------------------------

def _globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--chain-bound", type=int, default=d(None), metavar="N",
                        help="bound for chain searches on shift operators")
    parser.add_argument("--seed", type=int, default=d(0))
    parser.add_argument("--trials", type=int, default=d(100))
    parser.add_argument("--out", default=d(None), metavar="PATH", help="write the JSON report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sfindex", description=__doc__.splitlines()[0])
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str, file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _globals(p, suppress=True)
        if file:
            p.add_argument("file")
        p.set_defaults(fn=fn)
        return p

    add("invariants", cmd_invariants, "nullity, defect, index and chain data of an operator")
    add("family-index", cmd_family_index, "index of a family per connected component")
    for name, fn, hlp in (("membership", cmd_membership, "regularity and semiregularity verdicts"),
                          ("spectrum", cmd_spectrum, "R-spectra of a certified-spectrum matrix")):
        p = add(name, fn, hlp)
        p.add_argument("--reg", action="append", help="R1..R16, LSR1..3, USR1..6 (repeatable)")
        p.add_argument("--m", type=int, default=0)
    p = add("smt-check", cmd_smt_check, "spectral mapping checks for a polynomial")
    p.add_argument("--poly", required=True, help="coefficients, low degree first, e.g. '0,0,1'")
    p.add_argument("--reg", action="append")
    p.add_argument("--m", type=int, default=0)
    p = add("suite", cmd_suite, "seeded property suites", file=False)
    p.add_argument("name", choices=sorted(["axioms", "lemma", *SUITES]))
    p.add_argument("--reg", action="append")
    p.add_argument("--kind", choices=["regularity", "lower", "upper"])
    p.add_argument("--m", type=int, default=0)
    add("homotopy-check", cmd_homotopy_check, "index constancy along a homotopy")
    add("probe", cmd_probe, "local constancy under seeded finite-rank jitter")
    add("validate", cmd_validate, "schema and invariant validation only")
    return parser


def _error_payload(exc: BaseException, file: str | None) -> dict[str, Any]:
    out: dict[str, Any] = {"error": type(exc).__name__, "message": str(exc)}
    if file:
        out["file"] = file
    if isinstance(exc, SchemaError):
        out["path"] = exc.path
    if isinstance(exc, AdmissibilityError):
        out["edge"] = list(exc.edge) if exc.edge else None
        out["edge_index"] = exc.edge_index
    return out


def _emit(payload: Any, out_path: str | None) -> None:
    text = payload.dumps() if isinstance(payload, Report) else dumps(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.trials < 0:
        parser.error("--trials must be non-negative")
    try:
        payload, code = args.fn(args)
    except (InputError, SFIndexError, ValueError) as exc:
        sys.stderr.write(dumps(_error_payload(exc, getattr(args, "file", None))) + "\n")
        return EXIT_INPUT
    _emit(payload, args.out)
    return code


def main() -> None:
    sys.exit(run())


