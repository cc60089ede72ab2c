"""Command-line interface: ``leibalg <command> [input] [--json]``.

Exit codes: 0 completed, 2 precondition or budget refusal (including
malformed input), 1 internal error.
Reports go to stdout as ``key: value`` lines, or as JSON with ``--json``.
``catalog`` and ``companion`` emit algebra documents so they can be piped
into the other commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import algebra as ac
from . import classify as cl
from . import lattice as lt
from .catalog import FAMILIES, FamilySpec, build, t_p_minus_t_surjective
from .companion import companion_lie, decompose, leibnizize
from .document import parse_algebra, parse_subspace, serialize_algebra, to_json_document
from .errors import InternalError, LeibalgError, RefusalError
from .exactfield import parse_field


def budget_from_env():
    raw = os.environ.get("LEIBALG_BUDGET")
    if raw is None:
        return lt.EnumerationBudget()
    try:
        return lt.EnumerationBudget(int(raw))
    except ValueError:
        raise RefusalError(f"LEIBALG_BUDGET must be a positive integer, got {raw!r}") from None


# -- rendering ----------------------------------------------------------------

def fmt_vector(field, v):
    return [field.format(x) for x in v]


def fmt_subspace(s):
    return {"dim": s.rank, "basis": [fmt_vector(s.field, v) for v in s.basis]}


def fmt_witness(alg, w):
    if w is None:
        return None
    return {"kind": w.kind, "basis": [alg.label(i) for i in w.indices],
            "lhs": fmt_vector(alg.field, w.lhs), "rhs": fmt_vector(alg.field, w.rhs)}


def fmt_flag(flag):
    return None if flag is None else [fmt_subspace(s) for s in flag.chain]


def _text_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, dict) and set(v) == {"dim", "basis"}:
        if not v["basis"]:
            return "0"
        return "span{" + ", ".join("(" + ",".join(r) + ")" for r in v["basis"]) + "}"
    if isinstance(v, list) and v and all(isinstance(x, dict) and set(x) == {"dim", "basis"} for x in v):
        return "[" + "; ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render_text(report, prefix=""):
    lines = []
    for k, v in report.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict) and set(v) != {"dim", "basis"} and v:
            lines.extend(render_text(v, key + "."))
        else:
            lines.append(f"{key}: {_text_value(v)}")
    return lines


def emit(report, as_json, out):
    if as_json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write("\n".join(render_text(report)) + "\n")


# -- commands -----------------------------------------------------------------

def _read(path):
    if path in (None, "-"):
        return sys.stdin.read(), False
    with open(path) as fh:
        return fh.read(), path.endswith(".json")


def load_algebra(path):
    text, is_json = _read(path)
    return parse_algebra(text, True if is_json else None)


def cmd_check(alg, args, budget):
    ok_leib, w_leib = ac.check_leibniz(alg)
    ok_lie, w_lie = ac.check_lie(alg)
    return {"leibniz": ok_leib, "leibniz_witness": fmt_witness(alg, w_leib),
            "lie": ok_lie, "lie_witness": fmt_witness(alg, w_lie)}


def _require_leibniz(alg):
    ok, w = ac.check_leibniz(alg)
    if not ok:
        raise RefusalError(f"input fails the Leibniz identity on basis triple "
                           f"{tuple(alg.label(i) for i in w.indices)}")


def cmd_analyze(alg, args, budget):
    _require_leibniz(alg)
    rep = cl.analyze(alg, budget)
    out = {
        "dim": alg.dim,
        "field": str(alg.field),
        "series": {"derived": [fmt_subspace(s) for s in rep.series.derived],
                   "lower_central": [fmt_subspace(s) for s in rep.series.lower_central]},
        "classes": rep.classes,
        "flag": fmt_flag(rep.flag),
        "leib": fmt_subspace(rep.leib),
        "center": fmt_subspace(rep.center),
        "centralizer_of_leib": fmt_subspace(rep.centralizer_of_leib),
    }
    out["nilradical"] = fmt_subspace(rep.nilradical) if rep.nilradical is not None else None
    if rep.frattini is not None:
        out["frattini"] = {"F": fmt_subspace(rep.frattini.F), "Phi": fmt_subspace(rep.frattini.Phi),
                           "phi_free": rep.frattini.phi_free}
    else:
        out["frattini"] = None
    out["socle"] = fmt_subspace(rep.socle) if rep.socle is not None else None
    if rep.refusals:
        out["refused"] = rep.refusals
    return out


def cmd_frattini(alg, args, budget):
    _require_leibniz(alg)
    r = lt.frattini(alg, budget)
    return {"F": fmt_subspace(r.F), "Phi": fmt_subspace(r.Phi), "phi_free": r.phi_free}


def cmd_minimal_ideals(alg, args, budget):
    _require_leibniz(alg)
    mins = lt.minimal_ideals(alg, budget)
    return {"count": len(mins), "minimal_ideals": [fmt_subspace(s) for s in mins],
            "socle": fmt_subspace(lt.socle(alg, budget))}


def cmd_nilradical(alg, args, budget):
    _require_leibniz(alg)
    return {"nilradical": fmt_subspace(lt.nilradical(alg, budget))}


def cmd_supersolvable(alg, args, budget):
    _require_leibniz(alg)
    flag = cl.supersolvable_flag(alg)
    return {"supersolvable": flag is not None, "flag": fmt_flag(flag)}


def cmd_triangulable(alg, args, budget):
    _require_leibniz(alg)
    if args.sub == "full":
        s = alg.full()
    else:
        with open(args.sub) as fh:
            s = parse_subspace(fh.read(), alg)
    if not ac.is_subalgebra(alg, s):
        raise RefusalError("--sub does not span a subalgebra")
    m = s if args.on == "self" else alg.full()
    nil = cl.nil_ideal(alg, s, m, budget)
    sq = ac.subspace_product(alg, s, s)
    return {"sub": fmt_subspace(s), "on": args.on, "square": fmt_subspace(sq),
            "nil": fmt_subspace(nil), "triangulable": nil.contains(sq)}


def cmd_two_generated(alg, args, budget):
    _require_leibniz(alg)
    r = lt.is_two_generated(alg, budget)
    result = "unknown" if r.result is None else r.result
    pair = [fmt_vector(alg.field, v) for v in r.pair] if r.pair else None
    return {"two_generated": result, "pair": pair}


def cmd_minimality(alg, args, budget):
    _require_leibniz(alg)
    v = lt.minimal_non_class(alg, args.cls, budget)
    return {"class": args.cls, "in_class": v.in_class, "verdict": v.verdict,
            "failing_subalgebra": fmt_subspace(v.failing_subalgebra)
            if v.failing_subalgebra is not None else None}


def cmd_companion(alg, args, budget):
    _require_leibniz(alg)
    dec = decompose(alg, budget)
    comp = companion_lie(alg, dec)
    result = leibnizize(comp, dec.adapted()) if args.emit_leibnizized else comp
    header = (f"A = {dec.a}", f"H = {dec.h}",
              "leibnizized companion" if args.emit_leibnizized else "companion Lie algebra")
    if args.json:
        return {"decomposition": {"A": fmt_subspace(dec.a), "H": fmt_subspace(dec.h)},
                "document": to_json_document(result)}
    return serialize_algebra(result, header=header)


def cmd_catalog(args, budget):
    field = parse_field(args.field) if args.field else None
    alpha = None
    if args.alpha is not None:
        ff = field or parse_field(f"GF({args.p})")
        alpha = ff.parse(args.alpha)
    spec = FamilySpec(args.family, field, p=args.p, variant=args.variant, alpha=alpha, n=args.n)
    alg = build(spec)
    header = [str(spec)]
    if args.family == "thm5_2a":
        ok = t_p_minus_t_surjective(spec.resolved_field())
        header.append(f"field condition (every a is t^p - t): {'holds' if ok else 'fails'}")
    return serialize_algebra(alg, json_body=args.json, header=() if args.json else header)


def cmd_verify_suite(args, budget):
    from .suite import run_all
    results = run_all(sys.stdout, timing=args.timing)
    return all(ok for _, ok, _ in results)


ALGEBRA_COMMANDS = {
    "check": cmd_check,
    "analyze": cmd_analyze,
    "frattini": cmd_frattini,
    "minimal-ideals": cmd_minimal_ideals,
    "nilradical": cmd_nilradical,
    "supersolvable": cmd_supersolvable,
    "triangulable": cmd_triangulable,
    "two-generated": cmd_two_generated,
    "minimality": cmd_minimality,
    "companion": cmd_companion,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="leibalg",
                                     description="Exact tools for finite-dimensional Leibniz algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ALGEBRA_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", default="-", help="algebra document (default: stdin)")
        p.add_argument("--json", action="store_true")
        p.add_argument("--timing", action="store_true", help="append elapsed seconds")
        if name == "triangulable":
            p.add_argument("--sub", default="full", help="file of spanning vectors, or 'full'")
            p.add_argument("--on", choices=("self", "full"), default="self")
        if name == "minimality":
            p.add_argument("--class", dest="cls", required=True, choices=cl.CLASSES)
        if name == "companion":
            p.add_argument("--emit-leibnizized", action="store_true")
    p = sub.add_parser("catalog")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--field")
    p.add_argument("--variant", choices=("lie", "leibniz"), default="leibniz")
    p.add_argument("--alpha")
    p.add_argument("--json", action="store_true")
    p = sub.add_parser("verify-suite")
    p.add_argument("--timing", action="store_true")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        budget = budget_from_env()
        if args.command == "verify-suite":
            return 0 if cmd_verify_suite(args, budget) else 1
        if args.command == "catalog":
            out.write(cmd_catalog(args, budget))
            return 0
        start = time.perf_counter()
        alg = load_algebra(args.input)
        result = ALGEBRA_COMMANDS[args.command](alg, args, budget)
        if isinstance(result, str):
            out.write(result)
            return 0
        report = {"command": args.command}
        report.update(result)
        if args.timing:
            report["elapsed_seconds"] = round(time.perf_counter() - start, 6)
        emit(report, args.json, out)
        return 0
    except RefusalError as exc:
        print(f"leibalg: refused: {exc}", file=sys.stderr)
        if getattr(exc, "count", None) is not None:
            print(f"leibalg: count: {exc.count}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"leibalg: internal error: {exc}", file=sys.stderr)
        return 1
    except (LeibalgError, OSError) as exc:
        # bad field, dimension or file: the input fails a precondition
        print(f"leibalg: refused: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
