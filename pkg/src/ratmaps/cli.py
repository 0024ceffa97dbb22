"""Command-line front end.

A map is described by a key/value document::

    [ring]
    field = QQ            # or: GF 101
    block0 = x0 x1 x2
    relations0 = ...      # optional, comma separated
    target = y0 y1 y2     # optional

    [forms]
    f0 = x1*x2
    f1 = x0*x2
    f2 = x0*x1

    [options]
    nmax = 8
    seed = 0
    prime = 101

or by the equivalent JSON object with keys ``field``, ``blocks``,
``relations``, ``target``, ``forms`` and ``options``.

Exit codes: 0 success, 2 parse error, 3 hypotheses not met, 4 undetermined,
5 methods disagree.
"""
from __future__ import annotations

import argparse
import configparser
import json
import re
import sys
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional

from .hilbert import Unstabilized
from .maps import MapError, RationalMap
from .ring import RingError, Ring

EXIT_OK, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_UNDETERMINED, EXIT_INCONSISTENT = 0, 2, 3, 4, 5

COMMANDS = ("degree", "birational", "inverse", "rees", "sym", "sylvester", "saturate",
            "hilbert", "bounds", "oracle", "syzygies")
ROUTES = ("auto", "jacdual", "monomial", "plane", "bigraded", "limit", "formula")


class DocumentError(ValueError):
    pass


class CommandFailure(Exception):
    """Raised with an exit code and a partial report."""

    def __init__(self, code: int, message: str, report: Optional[dict] = None):
        super().__init__(message)
        self.code = code
        self.report = report or {}


@dataclass
class MapDocument:
    blocks: List[List[str]]
    forms: List[str]
    field: str = "QQ"
    relations: Optional[List[List[str]]] = None
    target: Optional[List[str]] = None
    options: Dict[str, int] = dc_field(default_factory=dict)

    @property
    def characteristic(self) -> int:
        f = self.field.strip()
        if f.upper() in ("QQ", "Q"):
            return 0
        m = re.fullmatch(r"(?:GF|F)\s*\(?\s*(\d+)\s*\)?", f, re.IGNORECASE)
        if not m:
            raise DocumentError(f"unknown field {self.field!r}")
        return int(m.group(1))

    def to_map(self) -> RationalMap:
        try:
            R = Ring(self.blocks, self.characteristic, self.relations)
            return RationalMap(R, self.forms, self.target)
        except (RingError, MapError) as exc:
            raise DocumentError(str(exc)) from exc

    def to_json(self) -> dict:
        out = {"field": self.field, "blocks": self.blocks, "forms": self.forms, "options": self.options}
        if self.relations:
            out["relations"] = self.relations
        if self.target:
            out["target"] = self.target
        return out


def _int_options(raw) -> Dict[str, int]:
    out = {}
    for k, v in dict(raw).items():
        try:
            out[k] = int(v)
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"option {k} must be an integer") from exc
    return out


def parse_document(text: str) -> MapDocument:
    """Parse either the key/value format or JSON."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        if "blocks" not in data or "forms" not in data:
            raise DocumentError("document needs 'blocks' and 'forms'")
        return MapDocument([list(b) for b in data["blocks"]], list(data["forms"]),
                           data.get("field", "QQ"), data.get("relations"), data.get("target"),
                           _int_options(data.get("options", {})))
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",), interpolation=None)
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise DocumentError(f"invalid document: {exc}") from exc
    if not cp.has_section("ring") or not cp.has_section("forms"):
        raise DocumentError("document needs [ring] and [forms] sections")
    ring = cp["ring"]
    keys = sorted((k for k in ring if re.fullmatch(r"block\d+", k)), key=lambda k: int(k[5:]))
    if not keys:
        raise DocumentError("no blocks given")
    blocks = [ring[k].replace(",", " ").split() for k in keys]
    relations = None
    if any(f"relations{k[5:]}" in ring for k in keys):
        relations = []
        for k in keys:
            raw = ring.get(f"relations{k[5:]}", "")
            relations.append([r.strip() for r in raw.split(",") if r.strip()])
    target = ring["target"].replace(",", " ").split() if "target" in ring else None
    forms = [v.strip() for v in cp["forms"].values()]
    opts = _int_options(cp["options"]) if cp.has_section("options") else {}
    return MapDocument(blocks, forms, ring.get("field", "QQ"), relations, target, opts)


# ------------------------------------------------------------ helpers


def _ideal_str(gens) -> str:
    gens = [str(g) for g in gens]
    return "(" + ", ".join(gens) + ")" if gens else "(0)"


def _frac(x):
    if x is None:
        return None
    x = x if not hasattr(x, "denominator") or x.denominator != 1 else int(x)
    return x if isinstance(x, int) else str(x)


def _clean_gb(ideal):
    """Reduced Groebner basis without the block relations."""
    from .groebner import Ideal
    R = ideal.ring
    basis = list(ideal.gb().basis)
    if not R.relations:
        return basis
    rel = Ideal(R, []).gb()
    return [g for g in basis if rel.reduce(g).terms]


def _hypothesis_errors():
    from .degree import HypothesisError
    from .monomial import NotDominant, NotMonomialMap
    from .plane import NotHilbertBurch, WrongShape
    return (HypothesisError, NotDominant, NotMonomialMap, NotHilbertBurch, WrongShape)


# ------------------------------------------------------------ commands


def cmd_degree(F: RationalMap, args) -> dict:
    from .degree import base_locus_report, degree
    methods = {"auto": ("limit", "formula", "oracle"), "limit": ("limit",),
               "formula": ("formula",)}.get(args.route)
    if methods is None:
        raise CommandFailure(EXIT_HYPOTHESIS, f"route {args.route} does not compute degrees; use limit or formula")
    rep = degree(F, args.nmax, args.seed, args.prime, methods=methods)
    base = base_locus_report(F, args.nmax)
    out = {"degree": rep.deg_F, "methods": rep.cross_checks, "deg_Y": rep.deg_Y, "dim_Y": rep.dim_Y,
           "deg_X": rep.deg_X, "consistent": rep.consistent, "stabilized": rep.stabilized,
           "diagnostics": rep.diagnostics,
           "base_locus": {"dim": base.dim_B, "deg": base.deg_B, "e": _frac(base.e_B)}}
    if not rep.consistent:
        raise CommandFailure(EXIT_INCONSISTENT, "degree methods disagree", out)
    if rep.deg_F is None:
        if "formula" in methods and len(methods) == 1 and any("skipped" in d for d in rep.diagnostics):
            raise CommandFailure(EXIT_HYPOTHESIS, "formula needs a zero-dimensional base locus; try --route limit", out)
        raise CommandFailure(EXIT_UNDETERMINED, "degree undetermined", out)
    return out


def _jacdual_verdict(F, args):
    from .birationality import is_birational_jacdual
    a = is_birational_jacdual(F, args.cap_ydeg, args.nmax)
    return a.verdict, a


def _bigraded_applicable(F):
    R = F.ring
    return (R.nblocks == 2 and all(len(b) == 2 for b in R.blocks) and F.s == 2 and not R.relations
            and (min(F.degree) == 1 or tuple(F.degree) == (2, 2)))


def _plane_applicable(F):
    from .plane import NotHilbertBurch, WrongShape, hilbert_burch
    R = F.ring
    if R.nblocks != 1 or R.nvars != 3 or F.s != 2 or R.relations:
        return False
    try:
        hb = hilbert_burch(F.base_ideal())
    except (NotHilbertBurch, WrongShape, ValueError):
        return False
    return hb.saturated and hb.mu1 == 1


def _monomial_applicable(F):
    R = F.ring
    return F.is_monomial() and R.nblocks == F.s and all(len(b) == 2 for b in R.blocks) and not R.relations


def _route_verdict(F, route, args):
    """(verdict, details) along one route."""
    if route == "monomial":
        from .monomial import is_birational_monomial, lattice_certificates
        ok = is_birational_monomial(F)
        cert = lattice_certificates(F)
        return ("birational" if ok else "not birational"), {"certificates": {str(k): v for k, v in cert.items()}}
    if route == "plane":
        from .plane import is_birational_mu1
        v = is_birational_mu1(F)
        return ("birational" if v.birational else "not birational"), {"m": v.m, "d": v.d, "ht_I1": v.ht_I1,
                                                                      "reason": v.reason}
    if route == "bigraded":
        from .degree import HypothesisError, criterion_1n, criterion_22
        if min(F.degree) == 1:
            ok, name = criterion_1n(F), "bidegree (1, n)"
        elif tuple(F.degree) == (2, 2):
            ok, name = criterion_22(F), "bidegree (2, 2)"
        else:
            raise HypothesisError("bigraded criteria cover bidegrees (1, n) and (2, 2)")
        return ("birational" if ok else "not birational"), {"criterion": name}
    if route == "jacdual":
        v, a = _jacdual_verdict(F, args)
        det = {"ranks": a.ranks, "reason": a.reason}
        if a.inverse is not None:
            det["inverse"] = [[str(g) for g in blk] for blk in a.inverse]
        return v, det
    if route in ("limit", "formula"):
        from .degree import degree
        rep = degree(F, args.nmax, args.seed, args.prime, methods=(route,))
        if rep.deg_F is None:
            return "undetermined", {"diagnostics": rep.diagnostics}
        return ("birational" if rep.deg_F == 1 else "not birational"), {"degree": rep.deg_F}
    if route == "oracle":
        from .degree import fiber_oracle
        deg = fiber_oracle(F, args.prime, 5, args.seed)
        return ("birational" if deg == 1 else "not birational"), {"degree": deg}
    raise CommandFailure(EXIT_HYPOTHESIS, f"unknown route {route}")


def choose_route(F: RationalMap) -> str:
    if _monomial_applicable(F):
        return "monomial"
    if _plane_applicable(F):
        return "plane"
    if _bigraded_applicable(F):
        from .degree import base_locus_dimension
        if base_locus_dimension(F) == 0:
            return "bigraded"
    return "jacdual"


ROUTE_NAMES = {"monomial": "monomial/HNF", "plane": "plane/Sylvester", "bigraded": "bigraded/criteria",
               "jacdual": "jacobian-dual", "limit": "degree/limit", "formula": "degree/formula",
               "oracle": "fiber-oracle"}


def cmd_birational(F: RationalMap, args) -> dict:
    route = choose_route(F) if args.route == "auto" else args.route
    verdict, details = _route_verdict(F, route, args)
    checks = {}
    check_route = "jacdual" if route != "jacdual" else "oracle"
    try:
        other, _ = _route_verdict(F, check_route, args)
        if other == "undetermined" or verdict == "undetermined":
            checks[ROUTE_NAMES[check_route]] = other
        else:
            checks[ROUTE_NAMES[check_route]] = "agree" if other == verdict else f"disagree ({other})"
    except _hypothesis_errors() + (Unstabilized,) as exc:
        checks[ROUTE_NAMES[check_route]] = f"skipped ({exc})"
    out = {"verdict": verdict, "birational": None if verdict == "undetermined" else verdict == "birational",
           "route": ROUTE_NAMES[route], "details": details, "cross_checks": checks}
    if any(str(v).startswith("disagree") for v in checks.values()):
        raise CommandFailure(EXIT_INCONSISTENT, "routes disagree", out)
    if verdict == "undetermined":
        raise CommandFailure(EXIT_UNDETERMINED, "verdict undetermined", out)
    return out


def cmd_inverse(F: RationalMap, args) -> dict:
    from .birationality import check_inverse, is_birational_jacdual
    a = is_birational_jacdual(F, args.cap_ydeg, args.nmax)
    out = {"verdict": a.verdict, "ranks": a.ranks, "inverse": None, "verified": None}
    if a.inverse is not None:
        out["inverse"] = [[str(g) for g in blk] for blk in a.inverse]
        out["verified"] = check_inverse(F, a.inverse)
        if not out["verified"]:
            raise CommandFailure(EXIT_INCONSISTENT, "inverse fails the composition check", out)
    if a.verdict == "undetermined":
        raise CommandFailure(EXIT_UNDETERMINED, a.reason, out)
    return out


def _bigraded_gens(B):
    return [{"poly": str(g), "x_degree": list(xd), "y_degree": yd} for g, (xd, yd) in zip(B.gens, B.bidegrees)]


def cmd_rees(F: RationalMap, args) -> dict:
    from .blowup import rees_ideal
    B = rees_ideal(F, args.cap_ydeg)
    return {"generators": _bigraded_gens(B), "capped": B.capped}


def cmd_sym(F: RationalMap, args) -> dict:
    from .blowup import is_linear_type, sym_ideal
    B = sym_ideal(F)
    return {"generators": _bigraded_gens(B), "linear_type": is_linear_type(F)}


def cmd_sylvester(F: RationalMap, args) -> dict:
    from .plane import (ChainValidationError, hilbert_burch, is_birational_mu1, normalize_mu1,
                        rees_equations_mu1, sylvester_chain)
    hb = hilbert_burch(F.base_ideal())
    if hb.mu1 != 1:
        raise CommandFailure(EXIT_HYPOTHESIS, f"needs μ_1 = 1 (got μ = ({hb.mu1}, {hb.mu2})); use `birational`")
    norm = normalize_mu1(hb)
    chain = sylvester_chain(norm.hb)
    out = {"mu": [hb.mu1, hb.mu2], "d": hb.d, "saturated": hb.saturated, "ht_I1": hb.ht_I1,
           "phi": [[str(e) for e in row] for row in norm.hb.phi],
           "g1": str(chain.g1), "g2": str(chain.g2),
           "chain": [{"poly": str(f), "bidegree": list(b)} for f, b in zip(chain.forms, chain.bidegrees)],
           "m": chain.m}
    try:
        rees_equations_mu1(norm.hb, validate=True)
        out["generates_rees_ideal"] = True
    except ChainValidationError:
        out["generates_rees_ideal"] = False
    if hb.saturated:
        v = is_birational_mu1(F)
        out["birational"] = v.birational
    if not out["generates_rees_ideal"]:
        raise CommandFailure(EXIT_INCONSISTENT, "chain does not generate the Rees ideal", out)
    return out


def cmd_saturate(F: RationalMap, args) -> dict:
    from .blowup import SaturationPlan
    I = F.base_ideal()
    plan = SaturationPlan(I, args.seed)
    sat = plan.saturate(I)
    gens = _clean_gb(sat)
    return {"saturation": _ideal_str(gens), "generators": [str(g) for g in gens],
            "unit": sat.is_unit(), "already_saturated": sat == I, "route": plan.route}


def cmd_hilbert(F: RationalMap, args) -> dict:
    from .blowup import saturated_fiber_table
    from .hilbert import hilbert_fit, hilbert_table
    I = F.base_ideal()
    tab = hilbert_table(I, args.nmax, direction=F.degree)
    fit = hilbert_fit(tab, F.delta)
    sat = saturated_fiber_table(F, args.nmax, seed=args.seed)
    return {"quotient_along_nd": {str(k): v for k, v in tab.items()},
            "quotient_fit": {"degree": fit.fitted_degree, "leading_delta": _frac(fit.leading_delta),
                             "stabilized": fit.stabilized},
            "fiber_table": {str(n): {"ideal": a, "saturation": b} for n, (a, b) in sat.rows.items()},
            "differences": {str(k): v for k, v in sat.differences.items()},
            "differences_fit": {"degree": sat.fit.fitted_degree, "leading_delta": _frac(sat.fit.leading_delta),
                                "stabilized": sat.fit.stabilized},
            "route": sat.route, "warnings": sat.warnings}


def cmd_bounds(F: RationalMap, args) -> dict:
    from .degree import bound_p1p1, bound_single, p2_formula
    from .plane import degree_bound_mu, hilbert_burch
    errs = _hypothesis_errors()
    out = {}
    for name, fn in (("bound_single", bound_single), ("bound_p1p1", bound_p1p1)):
        try:
            out[name] = fn(F)
        except errs as exc:
            out[name] = f"n/a: {exc}"
    try:
        rep = p2_formula(F, args.nmax, args.seed)
        out["p2_formula"] = rep.deg_F
        if not rep.consistent:
            raise CommandFailure(EXIT_INCONSISTENT, "plane formula disagrees with the limit", out)
    except errs as exc:
        out["p2_formula"] = f"n/a: {exc}"
    try:
        R = F.ring
        if R.nblocks != 1 or R.nvars != 3 or F.s != 2:
            raise _hypothesis_errors()[0]("needs a plane map")
        hb = hilbert_burch(F.base_ideal())
        if not hb.saturated:
            raise _hypothesis_errors()[0]("base ideal is not saturated")
        bound, lci = degree_bound_mu(hb)
        out["bound_mu"] = {"bound": bound, "exact_if_lci": lci}
    except errs + (ValueError,) as exc:
        out["bound_mu"] = f"n/a: {exc}"
    return out


def cmd_oracle(F: RationalMap, args) -> dict:
    from .degree import fiber_oracle
    trials = args.trials
    mode, counts = fiber_oracle(F, args.prime, trials, args.seed, details=True)
    return {"degree": mode, "counts": counts, "prime": F.ring.p or args.prime, "trials": trials, "seed": args.seed}


def cmd_syzygies(F: RationalMap, args) -> dict:
    from .blowup import syzygy_matrix
    S = syzygy_matrix(F)
    return {"columns": [[str(e) for e in col] for col in S.columns],
            "degrees": [list(d) for d in S.degrees], "exact": S.check()}


HANDLERS = {"degree": cmd_degree, "birational": cmd_birational, "inverse": cmd_inverse, "rees": cmd_rees,
            "sym": cmd_sym, "sylvester": cmd_sylvester, "saturate": cmd_saturate, "hilbert": cmd_hilbert,
            "bounds": cmd_bounds, "oracle": cmd_oracle, "syzygies": cmd_syzygies}


# ------------------------------------------------------------ output


def render_text(command: str, report: dict) -> str:
    lines = [f"command: {command}"]

    def emit(prefix, value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{prefix}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            lines.append(f"{pad}{prefix}:")
            for v in value:
                if isinstance(v, dict):
                    lines.append(f"{pad}  - " + ", ".join(f"{k}={_flat(x)}" for k, x in v.items()))
                else:
                    lines.append(f"{pad}  - {_flat(v)}")
        else:
            lines.append(f"{pad}{prefix}: {_flat(value)}")

    for k, v in report.items():
        emit(k, v, 0)
    return "\n".join(lines) + "\n"


def _flat(v):
    if isinstance(v, list):
        return "[" + ", ".join(_flat(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def run(command: str, document, flags=None) -> dict:
    """Run ``command`` on a document (text, dict or MapDocument); returns the report."""
    args = build_parser().parse_intermixed_args([command, "-"] + list(flags or []))
    doc = _coerce_document(document)
    _apply_options(args, doc)
    return HANDLERS[command](doc.to_map(), args)


def _coerce_document(document) -> MapDocument:
    if isinstance(document, MapDocument):
        return document
    if isinstance(document, dict):
        return parse_document(json.dumps(document))
    return parse_document(document)


def _apply_options(args, doc: MapDocument):
    # command-line flags override document options
    for key in ("nmax", "seed", "prime", "trials"):
        if getattr(args, key) is None:
            setattr(args, key, doc.options.get(key, DEFAULTS[key]))


DEFAULTS = {"nmax": 8, "seed": 0, "prime": 101, "trials": 5}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ratmaps", description="Degree and birationality of rational maps.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", nargs="?", default="-", help="map document (default: stdin)")
    ap.add_argument("--nmax", type=int, default=None)
    ap.add_argument("--prime", type=int, default=None)
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--trials", type=int, default=None)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--route", choices=ROUTES, default="auto")
    ap.add_argument("--cap-ydeg", type=int, default=None, dest="cap_ydeg")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    code = EXIT_OK
    try:
        doc = parse_document(text)
        _apply_options(args, doc)
        F = doc.to_map()
        report = HANDLERS[args.command](F, args)
    except (DocumentError, RingError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CommandFailure as exc:
        report, code = dict(exc.report), exc.code
        report["error"] = str(exc)
    except _hypothesis_errors() as exc:
        report, code = {"error": str(exc), "advice": _advice(args.command)}, EXIT_HYPOTHESIS
    except Unstabilized as exc:
        report, code = {"error": str(exc), "advice": "increase --nmax"}, EXIT_UNDETERMINED
    if args.json:
        sys.stdout.write(json.dumps({"command": args.command, "exit_code": code, "report": report},
                                    sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(args.command, report))
    return code


def _advice(command):
    return {"birational": "try --route jacdual, which applies to every dominant map",
            "degree": "try --route limit",
            "sylvester": "the Sylvester chain needs a saturated plane ideal with μ_1 = 1; use `birational`",
            "bounds": "bounds have restrictive hypotheses; use `degree`"}.get(
        command, "check the hypotheses of the command")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
