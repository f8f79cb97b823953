"""Command-line front end.

JSON reports go to stdout, human-readable tables to stderr.  Exit codes:
0 ok, 1 check or fixture failure, 2 invalid input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Any

from . import __version__
from .analytics import structure, weights
from .code import (DEFAULT_MAX_ENUM, DEFAULT_MAX_SUBSETS, LinearCode, classify,
                   dual, weight_distribution_exhaustive)
from .constructions import (EvaluationSet, ScalingVector, as_scaling, asd_char2, asd_subfield,
                            check_ck_window, ck_infty, ck_mu, egrs, grs)
from .errors import BudgetExceeded, InexactDivision, NongrsError, ValidationError
from .field import FieldSpec, build_field
from .replay import run_fixtures

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3
VARIANTS = ("ck", "ck_mu", "grs", "egrs")


# -- construction input -----------------------------------------------------------


@dataclass
class Construction:
    field: FieldSpec
    S: EvaluationSet
    v: ScalingVector
    k: int
    variant: str
    mu: int | None

    def code(self) -> LinearCode:
        if self.variant == "ck":
            return ck_infty(self.S, self.v, self.k)
        if self.variant == "ck_mu":
            if self.mu is None:
                raise ValidationError("variant ck_mu needs mu")
            return ck_mu(self.S, self.v, self.k, self.mu)
        if self.variant == "grs":
            return grs(self.S, self.v, self.k)
        return egrs(self.S, self.v, self.k)

    @property
    def is_ck(self) -> bool:
        return self.variant == "ck"

    @property
    def unit_scaling(self) -> bool:
        return all(x == 1 for x in self.v.values)

    def echo(self) -> dict:
        return {"field": self.field.to_json(), "set": list(self.S.elements),
                "v": list(self.v.values), "k": self.k, "variant": self.variant,
                "mu": self.mu}


def _parse_list(text: str) -> list[str]:
    text = text.strip()
    if text.startswith("["):
        return [str(x) for x in json.loads(text)]
    return [t for t in text.replace(" ", "").split(",") if t]


def _token(F: FieldSpec, t):
    if isinstance(t, str) and t.lstrip("-").isdigit():
        t = int(t)
    return F.element(t)


def _field_from(data: Any, args) -> FieldSpec:
    if isinstance(data, dict):
        return build_field(int(data["p"]), int(data.get("m", 1)), data.get("modulus"))
    if args.p is None:
        raise ValidationError("field not given: use --p/--m or a spec file with 'field'")
    modulus = [int(c) for c in _parse_list(args.modulus)] if args.modulus else None
    return build_field(args.p, args.m, modulus)


def _build_set(F: FieldSpec, token) -> EvaluationSet:
    if token == "fq":
        return EvaluationSet.full(F)
    if token == "fqstar":
        return EvaluationSet.nonzero(F)
    if isinstance(token, str):
        token = _parse_list(token)
    if not isinstance(token, list):
        raise ValidationError("set must be 'fq', 'fqstar' or a list of elements")
    return EvaluationSet(F, [_token(F, t) for t in token])


def _build_scaling(S: EvaluationSet, token) -> ScalingVector:
    if token in (None, "ones"):
        return ScalingVector.ones(S.field, S.n)
    if isinstance(token, str):
        token = _parse_list(token)
    return as_scaling(S, [_token(S.field, t) for t in token])


def load_construction(args) -> Construction:
    data: dict = {}
    if getattr(args, "spec", None):
        with open(args.spec) as fh:
            data = json.load(fh)
        if "construction" in data:  # output of `construct`
            data = data["construction"]
        if not isinstance(data, dict):
            raise ValidationError("spec file must hold a JSON object")
    F = _field_from(data.get("field"), args)
    set_token = data.get("set", args.set)
    if set_token is None:
        raise ValidationError("evaluation set not given (--set)")
    S = _build_set(F, set_token)
    v = _build_scaling(S, data.get("v", args.v))
    k = data.get("k", args.k)
    if k is None:
        raise ValidationError("dimension parameter not given (--k)")
    variant = data.get("variant", args.variant)
    if variant not in VARIANTS:
        raise ValidationError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    mu = data.get("mu", args.mu)
    k = int(k)
    if variant in ("ck", "ck_mu"):
        check_ck_window(S.n, k, F.q)
    return Construction(F, S, v, k, variant, None if mu is None else int(mu))


# -- output helpers -------------------------------------------------------------------


def emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def table(rows: list[tuple], header: tuple) -> None:
    cells = [tuple(str(c) for c in r) for r in [header, *rows]]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for j, r in enumerate(cells):
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip(), file=sys.stderr)
        if j == 0:
            print("  ".join("-" * w for w in widths), file=sys.stderr)


def _report(command: str, c: Construction | None, result: dict, notes: list[str]) -> dict:
    out = {"command": command, "version": __version__, "result": result, "budget_notes": notes}
    if c is not None:
        out["input"] = c.echo()
    return out


# -- commands --------------------------------------------------------------------------


def cmd_construct(args) -> int:
    c = load_construction(args)
    code = c.code()
    out = {"construction": c.echo(), "code": code.to_json()}
    text = json.dumps(out, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"[{code.length}, {code.dimension}] code over GF({c.field.q}), variant {c.variant}",
          file=sys.stderr)
    return EXIT_OK


def cmd_classify(args) -> int:
    c = load_construction(args)
    notes: list[str] = []
    if c.is_ck:
        try:
            res = structure.classify_ck(c.S, c.v, c.k, cross_check=not args.no_cross_check,
                                        max_enum=args.max_enum, max_subsets=args.max_subsets)
        except BudgetExceeded as exc:
            if args.no_cross_check:
                raise
            notes.append(f"cross-check skipped: {exc}")
            res = structure.classify_ck(c.S, c.v, c.k, max_enum=args.max_enum,
                                        max_subsets=args.max_subsets)
        result = res.to_json()
        cls = res.code_class
    else:
        cls = classify(c.code(), args.method, args.max_enum, args.max_subsets)
        result = {"classification": cls.to_json()}
    table([(cls.kind, f"[{cls.length},{cls.dimension}]", cls.d, cls.method,
            cls.d_dual, cls.method_dual)],
          ("class", "params", "d", "method", "d_dual", "method"))
    emit(_report("classify", c, result, notes))
    return EXIT_OK


def _side_json(wd, method: str) -> dict:
    return {**wd.to_json(), "method": method}


def cmd_wdist(args) -> int:
    c = load_construction(args)
    code = c.code()
    method = args.method
    notes: list[str] = []
    result: dict = {}
    want_formula = method in ("formula", "both")
    want_exh = method in ("exhaustive", "both")
    if want_formula and not c.is_ck:
        if method == "formula":
            raise ValidationError(f"no closed form for variant {c.variant}")
        notes.append(f"formula unavailable for variant {c.variant}")
        want_formula = False
    formula = None
    if want_formula:
        formula = weights.ck_distribution(c.S, c.k, args.max_subsets)
        result["formula"] = {"class": formula.kind, "zero_sum_subsets": str(formula.zero_sum_count),
                             "code": _side_json(formula.code, formula.method),
                             "dual": _side_json(formula.dual, formula.method)}
    exh = exh_dual = None
    if want_exh:
        try:
            exh = weight_distribution_exhaustive(code, args.max_enum)
        except BudgetExceeded as exc:
            if method != "both" or args.method_explicit or formula is None:
                raise
            notes.append(f"exhaustive skipped: {exc}")
        if exh is not None:
            result["exhaustive"] = {"code": _side_json(exh, "exhaustive")}
            try:
                exh_dual = weight_distribution_exhaustive(dual(code), args.max_enum)
                result["exhaustive"]["dual"] = _side_json(exh_dual, "exhaustive")
            except BudgetExceeded as exc:
                notes.append(f"exhaustive dual skipped: {exc}")
    agree = True
    if formula is not None and exh is not None:
        agree = formula.code == exh and (exh_dual is None or formula.dual == exh_dual)
        result["agree"] = agree
    primary = exh if exh is not None else formula.code
    rows = [(w, n) for w, n in enumerate(primary.counts) if n]
    table(rows, ("weight", "count"))
    print(primary.enumerator(), file=sys.stderr)
    emit(_report("wdist", c, result, notes))
    if not agree:
        print("formula and exhaustive distributions disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_schur(args) -> int:
    c = load_construction(args)
    notes: list[str] = []
    if c.is_ck:
        ev = structure.nongrs_verdict(c.S, c.v, c.k)
    else:
        ev = structure.schur_evidence(c.code())
    result: dict = {"evidence": ev.to_json()}
    ok = True
    if c.is_ck:
        if c.unit_scaling:
            rep = structure.schur_square_structure(c.S, c.k, distances=not args.no_distances,
                                                   max_enum=args.max_enum,
                                                   max_subsets=args.max_subsets)
            result["structure"] = rep.to_json()
            ok = rep.ok and ev.fired
        else:
            notes.append("row-space predictions are stated for v = 1; structure check skipped")
            ok = ev.fired
    table([(ev.regime, ev.measured, ev.threshold, ev.fired)],
          ("regime", "measured", "threshold", "non-GRS"))
    emit(_report("schur", c, result, notes))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_so(args) -> int:
    c = load_construction(args)
    if c.is_ck:
        result = structure.so_check(c.S, c.v, c.k).to_json()
    else:
        result = {"certificate": None, "ggt_zero": c.code().is_self_orthogonal()}
    table([(result["ggt_zero"], result["certificate"] is not None)],
          ("GG^T=0", "certificate"))
    emit(_report("so", c, result, []))
    return EXIT_OK


def cmd_asd(args) -> int:
    F = _field_from(None, args)
    if args.set is None or args.k is None:
        raise ValidationError("asd needs --set and --k")
    S = _build_set(F, args.set)
    if args.char2:
        asd = asd_char2(S, args.k)
        recipe = "char2"
    else:
        if args.subfield is None:
            raise ValidationError("asd needs --char2 or --subfield R")
        v = None if args.v in (None, "ones") else _build_scaling(S, args.v)
        asd = asd_subfield(S, args.k, args.subfield, v)
        recipe = f"subfield r={args.subfield}"
    so = structure.so_check(S, asd.scaling, args.k)
    result = {"recipe": recipe, "v": list(asd.scaling.values),
              "v_log": [F.log(x) for x in asd.scaling.values], "lambda": asd.lam,
              "lambda_log": F.log(asd.lam), "code": asd.code.to_json(),
              "self_orthogonality": so.to_json()}
    notes: list[str] = []
    if args.classify:
        try:
            cls = classify(asd.code, "auto", args.max_enum, args.max_subsets)
            result["classification"] = cls.to_json()
        except BudgetExceeded as exc:
            notes.append(f"classification skipped: {exc}")
    table([(i, a, x, f"w^{F.log(x)}") for i, (a, x) in enumerate(zip(S.elements, asd.scaling))],
          ("i", "a_i", "v_i", "v_i as power"))
    out = {"command": "asd", "version": __version__, "result": result, "budget_notes": notes,
           "input": {"field": F.to_json(), "set": list(S.elements), "k": args.k}}
    emit(out)
    return EXIT_OK if so.ggt_zero else EXIT_MISMATCH


def cmd_paper_check(args) -> int:
    selected = None
    if args.only:
        selected = lambda name: any(s in name for s in args.only)  # noqa: E731
    start = time.perf_counter()
    results = run_fixtures(selected)
    failed = [r.name for r in results if not r.passed]
    table([("PASS" if r.passed else "FAIL", r.name) for r in results], ("status", "fixture"))
    print(f"{len(results) - len(failed)}/{len(results)} passed in "
          f"{time.perf_counter() - start:.1f}s", file=sys.stderr)
    if failed:
        print("failing: " + "; ".join(failed), file=sys.stderr)
    emit({"command": "paper-check", "version": __version__,
          "fixtures": [r.to_json() for r in results], "failed": failed, "ok": not failed})
    return EXIT_MISMATCH if failed else EXIT_OK


# -- argument parsing ------------------------------------------------------------------


def _add_budgets(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM,
                   help="largest number of codewords to enumerate")
    p.add_argument("--max-subsets", type=int, default=DEFAULT_MAX_SUBSETS,
                   help="largest number of subsets to visit")


def _add_field(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, help="characteristic")
    p.add_argument("--m", type=int, default=1, help="extension degree")
    p.add_argument("--modulus", help="modulus coefficients c_0,...,c_m (default: smallest)")


def _add_construction(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", help="construction JSON file (or output of `construct`)")
    _add_field(p)
    p.add_argument("--set", help="'fq', 'fqstar' or comma-separated elements (ints or w^e)")
    p.add_argument("--v", default=None, help="'ones' or comma-separated multipliers")
    p.add_argument("--k", type=int)
    p.add_argument("--variant", default="ck", choices=VARIANTS)
    p.add_argument("--mu", type=int, help="deleted row for variant ck_mu")
    _add_budgets(p)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nongrs", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and print its generator as JSON")
    _add_construction(p)
    p.add_argument("-o", "--output", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("classify", help="MDS / NMDS / AMDS-only / Other")
    _add_construction(p)
    p.add_argument("--method", default="auto", choices=("auto", "exhaustive", "dependence"),
                   help="distance method for non-ck variants")
    p.add_argument("--no-cross-check", action="store_true",
                   help="skip the direct distance computation for ck codes")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("wdist", help="weight distribution of the code and its dual")
    _add_construction(p)
    p.add_argument("--method", default=None, choices=("formula", "exhaustive", "both"))
    p.set_defaults(func=cmd_wdist)

    p = sub.add_parser("schur", help="Schur-square structure and non-GRS evidence")
    _add_construction(p)
    p.add_argument("--no-distances", action="store_true")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("so", help="self-orthogonality certificate and GG^T test")
    _add_construction(p)
    p.set_defaults(func=cmd_so)

    p = sub.add_parser("asd", help="almost self-dual codes from the two recipes")
    _add_field(p)
    p.add_argument("--set", required=True)
    p.add_argument("--k", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--char2", action="store_true", help="q = 2^m recipe")
    mode.add_argument("--subfield", type=int, metavar="R", help="S inside F_{p^R}, m/R even")
    p.add_argument("--v", default=None, help="explicit square roots for the subfield recipe")
    p.add_argument("--classify", action="store_true", help="also compute both distances")
    _add_budgets(p)
    p.set_defaults(func=cmd_asd)

    p = sub.add_parser("paper-check", help="replay the built-in reference fixtures")
    p.add_argument("--only", action="append", help="run fixtures whose name contains this")
    p.set_defaults(func=cmd_paper_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) == "wdist":
        args.method_explicit = args.method is not None
        args.method = args.method or "both"
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InexactDivision, AssertionError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except NongrsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
