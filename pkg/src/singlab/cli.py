"""``singlab`` command line: analyze, monodromy, divisibility, superabundance.

Exit codes: 0 ok, 2 input error, 3 resource limit, 4 hypothesis not met.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .errors import HypothesisError, ParseError, ResourceLimitError
from .grobner import ResourceLimits
from .infinity import classify_at_infinity
from .laurent import LaurentPolynomial, parse_laurent
from .monodromy import (
    DEFAULT_KAPPA_CAP,
    CyclotomicDivisor,
    ak_divisor,
    brieskorn_divisor,
    divisibility_check,
    divisor_to_charpoly,
    oka_alexander,
    roots_of_unity_degree_check,
    superabundance,
    superabundance_charpoly,
)
from .polycore import RingContext, parse_polynomial, variables_in
from .topology import (
    ATYPICAL,
    GENERIC,
    bouquet_betti,
    complement_betti_generic,
    connectivity_bounds,
    tame_bouquet_rank,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_HYPOTHESIS = 4


class InputError(Exception):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


@dataclass
class AnalysisRequest:
    polynomial_text: str
    variable_list: Tuple[str, ...]
    weights: Tuple[int, ...] = ()
    topology: bool = True

    def __post_init__(self):
        if not self.weights:
            self.weights = (1,) * len(self.variable_list)
        if len(self.weights) != len(self.variable_list):
            raise InputError(
                f"{len(self.weights)} weights given for {len(self.variable_list)} variables"
            )


# -- serialization ------------------------------------------------------------


def laurent_json(p: Optional[LaurentPolynomial]):
    if p is None:
        return None
    p = p.normalized()
    return {"coeffs": [str(c) for c in p.to_list()], "text": str(p),
            "degree": p.degree() if p else None}


def divisor_json(D: CyclotomicDivisor):
    return {"terms": {str(m): e for m, e in sorted(D.coeffs.items())}, "text": str(D)}


def _plain(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, LaurentPolynomial):
        return laurent_json(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def dumps(report: dict) -> str:
    return json.dumps(_plain(report), sort_keys=True, indent=2, ensure_ascii=False)


def _envelope(command: str, request: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "request": request,
        "diagnostics": [],
    }


# -- commands -----------------------------------------------------------------


def cmd_analyze(request: AnalysisRequest, limits: Optional[ResourceLimits] = None) -> dict:
    try:
        ring = RingContext(request.variable_list, request.weights)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    f = parse_polynomial(request.polynomial_text, ring)
    if f.is_constant():
        raise InputError("polynomial is constant; nothing to analyze")
    report = _envelope("analyze", {
        "polynomial": request.polynomial_text,
        "canonical": str(f),
        "variables": list(ring.variables),
        "weights": list(ring.weights),
        "topology": request.topology,
    })
    diag = report["diagnostics"]
    info = classify_at_infinity(f, limits)
    report["infinity"] = info.to_dict()
    if info.weights_warning:
        diag.append("weights_warning: the locus-at-infinity criterion is applied "
                    "with non-unit weights; the bound is stated for weights 1")
    if info.homogeneous:
        diag.append("f is weighted-homogeneous: no lower part, locus at infinity "
                    "uses the gradient of the top part only")
    if info.dim_sigma >= 0 and info.dim_sing_affine > info.dim_sigma + 1:
        diag.append("inconsistent: affine singular locus exceeds dim(locus at infinity) + 1")

    report["topology"] = None
    if request.topology:
        report["topology"] = _topology_section(f, info, limits, diag)
    return report


def _topology_section(f, info, limits, diag):
    n = f.ring.nvars - 1
    if n < 1:
        diag.append("topology: needs at least two variables")
        return None
    k = info.bound_dim_sing_X
    section = {
        "n": n,
        "k": k,
        "generic": connectivity_bounds(n, k, GENERIC).to_dict(),
        "atypical": connectivity_bounds(n, k, ATYPICAL).to_dict(),
        "bouquet_rank": None,
        "fiber_betti": None,
        "complement_betti": None,
    }
    try:
        lam = tame_bouquet_rank(f, limits)
    except HypothesisError as exc:
        diag.append(f"bouquet rank not determined: {exc}")
        return section
    fiber = bouquet_betti(lam, n)
    section["bouquet_rank"] = lam
    section["fiber_betti"] = list(fiber.values)
    section["complement_betti"] = list(complement_betti_generic(fiber, n).trimmed().values)
    return section


def cmd_monodromy(kind: str, values: Sequence[int]) -> dict:
    report = _envelope("monodromy", {"kind": kind, "arguments": list(values)})
    diag = report["diagnostics"]
    if kind == "brieskorn":
        if not values:
            raise InputError("brieskorn needs at least one exponent")
        if any(v < 2 for v in values):
            raise InputError("Brieskorn exponents must be >= 2")
        D = brieskorn_divisor(values)
    elif kind == "ak":
        if len(values) != 1 or values[0] < 1:
            raise InputError("ak needs one integer k >= 1")
        D = ak_divisor(values[0])
    elif kind == "oka":
        if len(values) != 2 or min(values) < 2:
            raise InputError("oka needs two integers a, b >= 2")
        res = oka_alexander(*values)
        report["oka"] = {
            "expected_rank": res.expected_rank,
            "formula": "(t^(a+b)-1)(t-1)/((t^a-1)(t^b-1))",
            "formula_value": laurent_json(res.formula_value),
            "formula_exact": res.formula_value is not None,
            "consistent": res.consistent,
            "variant": "(t^(ab)-1)(t-1)/((t^a-1)(t^b-1))",
            "variant_value": laurent_json(res.variant_value),
            "variant_exact": res.variant_value is not None,
            "variant_consistent": res.variant_consistent,
        }
        if not res.consistent:
            diag.append(
                "a+b formula inconsistent with rank (a-1)(b-1): "
                + (res.formula_error or "degree mismatch")
            )
            if res.variant_consistent:
                diag.append("degree-consistent variant uses t^(ab)-1; reported alongside, not substituted")
        return report
    else:
        raise InputError(f"unknown monodromy kind {kind!r}")
    charpoly = divisor_to_charpoly(D)
    report["divisor"] = divisor_json(D)
    report["charpoly"] = laurent_json(charpoly)
    report["degree"] = charpoly.degree()
    return report


def cmd_divisibility(
    delta_text: str,
    factors: Sequence[str] = (),
    infinity_factors: Sequence[str] = (),
    mode: str = "global",
    kappa_allowance: bool = True,
    kappa_cap: int = DEFAULT_KAPPA_CAP,
    d: Optional[int] = None,
) -> dict:
    delta = parse_laurent(delta_text)
    if not delta:
        raise InputError("delta must be nonzero")
    trans = [parse_laurent(s) for s in factors]
    infin = [parse_laurent(s) for s in infinity_factors]
    report = _envelope("divisibility", {
        "delta": delta_text,
        "factors": list(factors),
        "infinity_factors": list(infinity_factors),
        "mode": mode,
        "kappa_allowance": kappa_allowance,
        "kappa_cap": kappa_cap,
        "d": d,
    })
    report["delta"] = laurent_json(delta)
    report["divisibility"] = None
    if factors or infinity_factors:
        v = divisibility_check(delta, trans, infin, kappa_allowance, mode, kappa_cap)
        report["divisibility"] = {
            "divides": v.divides,
            "kappa": v.kappa,
            "quotient": laurent_json(v.quotient),
            "context": v.context,
        }
    report["roots_of_unity"] = None
    if d is not None:
        if d < 1:
            raise InputError("d must be positive")
        report["roots_of_unity"] = {"d": d, "all_roots_of_degree_d": roots_of_unity_degree_check(delta, d)}
    if not factors and not infinity_factors and d is None:
        report["diagnostics"].append("no factors and no d given: nothing checked")
    return report


def parse_points(text: str) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """One ``x:y:z`` point per line; ``#`` starts a comment."""
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(":")
        if len(parts) != 3:
            raise InputError(f"line {lineno}: expected three colon-separated rationals")
        try:
            pt = tuple(Fraction(p.strip()) for p in parts)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"line {lineno}: bad rational in {line!r}") from None
        if not any(pt):
            raise InputError(f"line {lineno}: (0:0:0) is not a point")
        points.append(pt)
    return points


def cmd_superabundance(points_text: str, m: Optional[int] = None, d: Optional[int] = None) -> dict:
    points = parse_points(points_text)
    if d is not None:
        if d % 6 != 0 or d < 6:
            raise HypothesisError(f"degree d={d} is not a positive multiple of 6")
        m_from_d = d - 3 - d // 6
        if m is not None and m != m_from_d:
            raise InputError(f"m={m} conflicts with d-3-d/6={m_from_d}")
        m = m_from_d
    if m is None:
        raise InputError("give either -m or -d")
    if m < 0:
        raise InputError("m must be nonnegative")
    try:
        s = superabundance(points, m)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = _envelope("superabundance", {
        "points": [[str(c) for c in p] for p in points],
        "m": m,
        "d": d,
    })
    report["m"] = m
    report["superabundance"] = s
    report["charpoly"] = laurent_json(superabundance_charpoly(s))
    if d is not None:
        report["diagnostics"].append(
            "charpoly (t^2-t+1)^s assumes: d divisible by 6, transversal A1/A2 only, "
            "irreducible zero fibre, one-dimensional singular locus, "
            "zero-dimensional singular set at infinity"
        )
    return report


# -- human summaries ------------------------------------------------------------


def summarize(report: dict) -> str:
    cmd = report["command"]
    lines = []
    if cmd == "analyze":
        info = report["infinity"]
        lines.append(f"f = {report['request']['canonical']}")
        lines.append(f"top degree d = {info['d']}, gap k = {info['k_gap']}")
        lines.append(f"dim Sing f = {info['dim_sing_affine']}")
        lines.append(f"dim of locus at infinity = {info['dim_sigma']}")
        lines.append(f"bound on dim of stratified singular set = {info['bound_dim_sing_X']}")
        lines.append(f"isolated singularities at infinity: {info['isolated_at_infinity']}")
        if info["dim_sing_infinity_V"] is not None:
            lines.append(f"dim Sing(closure of V at infinity) = {info['dim_sing_infinity_V']}")
        topo = report.get("topology")
        if topo:
            for kind in ("generic", "atypical"):
                r = topo[kind]
                degs = r["vanishing_degrees"]
                rng = f"pi_i = 0 for i in {degs}" if degs else "no vanishing asserted"
                lines.append(f"{kind} fibre complement: {rng}; fibre {r['fiber_connectivity']}-connected"
                             + (" (at least)" if r["fiber_connectivity_is_lower_bound"] else ""))
            if topo["bouquet_rank"] is not None:
                lines.append(f"general fibre ~ bouquet of {topo['bouquet_rank']} spheres S^{topo['n']}")
                lines.append(f"complement Betti numbers: {topo['complement_betti']}")
    elif cmd == "monodromy":
        if "oka" in report:
            o = report["oka"]
            fv = o["formula_value"]["text"] if o["formula_value"] else "not a polynomial"
            vv = o["variant_value"]["text"] if o["variant_value"] else "not a polynomial"
            lines.append(f"expected H_1 rank = {o['expected_rank']}")
            lines.append(f"a+b formula: {fv} (consistent: {o['consistent']})")
            lines.append(f"variant: {vv} (consistent: {o['variant_consistent']})")
        else:
            lines.append(f"divisor: {report['divisor']['text']}")
            lines.append(f"characteristic polynomial: {report['charpoly']['text']}")
            lines.append(f"degree: {report['degree']}")
    elif cmd == "divisibility":
        v = report["divisibility"]
        if v is not None:
            if v["divides"]:
                lines.append(f"divides with kappa = {v['kappa']}, quotient {v['quotient']['text']}")
            else:
                lines.append("does not divide")
        r = report["roots_of_unity"]
        if r is not None:
            lines.append(f"all roots are roots of unity of degree {r['d']}: {r['all_roots_of_degree_d']}")
    elif cmd == "superabundance":
        lines.append(f"m = {report['m']}, superabundance s = {report['superabundance']}")
        lines.append(f"characteristic polynomial: {report['charpoly']['text']}")
    lines.extend(f"note: {d}" for d in report["diagnostics"])
    return "\n".join(lines)


# -- argument parsing -------------------------------------------------------------


def _int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _name_list(text: str) -> Tuple[str, ...]:
    return tuple(v.strip() for v in text.split(",") if v.strip())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    env = os.environ
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--max-basis", type=int,
                        default=int(env.get("SINGLAB_MAX_BASIS", ResourceLimits().max_basis)))
    common.add_argument("--max-degree", type=int,
                        default=int(env.get("SINGLAB_MAX_DEGREE", ResourceLimits().max_degree)))
    common.add_argument("--kappa-cap", type=int,
                        default=int(env.get("SINGLAB_KAPPA_CAP", DEFAULT_KAPPA_CAP)))

    parser = _Parser(prog="singlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="singularities at infinity and topology")
    p.add_argument("polynomial")
    p.add_argument("--vars", type=_name_list, default=None,
                   help="comma-separated variable order (default: order of appearance)")
    p.add_argument("--weights", type=_int_list, default=())
    p.add_argument("--no-topology", dest="topology", action="store_false")

    p = sub.add_parser("monodromy", parents=[common], help="characteristic polynomials")
    p.add_argument("kind", choices=["brieskorn", "oka", "ak"])
    p.add_argument("values", type=int, nargs="+")

    p = sub.add_parser("divisibility", parents=[common], help="divisibility of orders")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--delta")
    src.add_argument("--delta-file")
    p.add_argument("--factor", action="append", default=[], help="transversal factor (repeatable)")
    p.add_argument("--infinity-factor", action="append", default=[])
    p.add_argument("--mode", choices=["global", "local"], default="global")
    p.add_argument("--no-kappa", dest="kappa_allowance", action="store_false")
    p.add_argument("-d", type=int, default=None, help="check roots of unity of degree d")

    p = sub.add_parser("superabundance", parents=[common], help="superabundance of plane curves")
    p.add_argument("points", help="points file ('-' for stdin)")
    p.add_argument("-m", type=int, default=None, help="curve degree")
    p.add_argument("-d", type=int, default=None, help="degree of f; sets m = d-3-d/6")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _dispatch(args) -> dict:
    limits = ResourceLimits(max_basis=args.max_basis, max_degree=args.max_degree)
    if args.command == "analyze":
        names = args.vars or variables_in(args.polynomial)
        req = AnalysisRequest(args.polynomial, tuple(names), tuple(args.weights), args.topology)
        return cmd_analyze(req, limits)
    if args.command == "monodromy":
        return cmd_monodromy(args.kind, args.values)
    if args.command == "divisibility":
        text = args.delta if args.delta is not None else _read(args.delta_file)
        return cmd_divisibility(text.strip(), args.factor, args.infinity_factor, args.mode,
                                args.kappa_allowance, args.kappa_cap, args.d)
    if args.command == "superabundance":
        return cmd_superabundance(_read(args.points), args.m, args.d)
    raise InputError(f"unknown command {args.command!r}")


def _fail(kind: str, message: str, code: int, position=None) -> int:
    err = {"error": {"kind": kind, "message": message, "exit_code": code}}
    if position is not None:
        err["error"]["position"] = position
    print(json.dumps(err, sort_keys=True), file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        report = _dispatch(args)
    except ParseError as exc:
        return _fail("parse_error", exc.message, EXIT_INPUT, exc.position)
    except InputError as exc:
        return _fail("input_error", str(exc), EXIT_INPUT, exc.position)
    except ResourceLimitError as exc:
        return _fail("resource_limit", str(exc), EXIT_RESOURCE)
    except HypothesisError as exc:
        return _fail("hypothesis_not_met", str(exc), EXIT_HYPOTHESIS)
    print(dumps(report) if args.json else summarize(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
