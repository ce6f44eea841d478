"""
Command-line front end.

    braidwrench fdtc "s1 s2 s3 s3" -n 4
    braidwrench upsilon --family beta_nm 4 3 --json
    braidwrench fuzz --suite order --seed 1 --count 200

Exit status: 0 on success, 1 on a parse error or property violation,
2 when handle reduction exceeds its step budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import artin, braid
from .braid_index import full_twist_domination, index_certificate
from .dehornoy import Ordering, compare, dehornoy_floor, handle_reduce
from .errors import BadParams, BraidError, BudgetExceeded, DomainError, OracleBudgetExceeded, ParseError
from .fdtc import fdtc
from .parse import format_braid, parse_braid
from .suites import SUITES, run_suite
from .upsilon import HUResult, PLFunction, homogenized_upsilon, pl_eval, torus_upsilon


def rat(x: Fraction | int) -> dict[str, int]:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def pl_json(f: PLFunction) -> dict[str, Any]:
    return {
        "breakpoints": [rat(t) for t in f.breakpoints],
        "values": [rat(v) for v in f.values],
        "slopes": [rat(s) for s in f.slopes],
    }


def pl_csv(f: PLFunction, samples: int = 0) -> str:
    ts = set(f.breakpoints)
    if samples > 1:
        ts |= {f.end * Fraction(j, samples - 1) for j in range(samples)}
    rows = ["t_num,t_den,v_num,v_den"]
    for t in sorted(ts):
        v = pl_eval(f, t)
        rows.append(f"{t.numerator},{t.denominator},{v.numerator},{v.denominator}")
    return "\n".join(rows)


def pl_svg(f: PLFunction, width: int = 400, height: int = 300) -> str:
    """A bare polyline; decorative only, CSV is the data format."""
    lo = min(min(f.values), 0)
    hi = max(max(f.values), 0)
    span = (hi - lo) or 1
    pts = " ".join(
        f"{float(t / f.end) * width:.2f},{float((hi - v) / span) * height:.2f}"
        for t, v in zip(f.breakpoints, f.values)
    )
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
            f'<polyline fill="none" stroke="black" points="{pts}"/></svg>')


# ---------------------------------------------------------------------------
# input helpers


def _word(args, text_attr: str = "word") -> braid.BraidWord:
    fam = getattr(args, "family", None)
    if fam:
        name, *params = fam
        try:
            w = braid.family(name, *(int(p) for p in params))
        except ValueError as exc:
            raise BadParams(str(exc)) from None
        if args.n is not None and args.n != w.strands:
            raise BadParams(f"family {name} lives on {w.strands} strands, not {args.n}")
        return w
    text = getattr(args, text_attr)
    if text is None:
        raise BadParams("give a braid word or --family")
    return parse_braid(text, args.n).word


def _pair(args) -> tuple[braid.BraidWord, braid.BraidWord]:
    a = parse_braid(args.a, args.n)
    b = parse_braid(args.b, args.n)
    n = max(a.strands, b.strands)
    return braid.BraidWord(n, a.word.letters), braid.BraidWord(n, b.word.letters)


def _emit(args, payload: dict[str, Any], text: str) -> None:
    print(json.dumps(payload) if args.json else text)


# ---------------------------------------------------------------------------
# commands


def cmd_reduce(args) -> int:
    w = _word(args)
    rep = handle_reduce(w, args.budget)
    _emit(args, {"strands": w.strands, "reduced": format_braid(rep.reduced), "steps": rep.steps,
                 "sign": str(rep.sign)}, format_braid(rep.reduced))
    return 0


def cmd_sign(args) -> int:
    w = _word(args)
    s = handle_reduce(w, args.budget).sign
    _emit(args, {"strands": w.strands, "sign": str(s)}, str(s))
    return 0


def cmd_cmp(args) -> int:
    a, b = _pair(args)
    r = compare(a, b, args.budget)
    _emit(args, {"strands": a.strands, "result": str(r)}, str(r))
    return 0


def cmd_eq(args) -> int:
    a, b = _pair(args)
    by_order = compare(a, b, args.budget) is Ordering.EQUAL
    payload: dict[str, Any] = {"strands": a.strands, "equal": by_order}
    if args.oracle:
        by_artin = artin.artin_equal(a, b)
        payload["artin_equal"] = by_artin
        if by_artin != by_order:
            _emit(args, payload, f"MISMATCH order={by_order} artin={by_artin}")
            return 1
    _emit(args, payload, "true" if by_order else "false")
    return 0


def cmd_floor(args) -> int:
    w = _word(args)
    m = dehornoy_floor(w, args.budget)
    _emit(args, {"strands": w.strands, "floor": m}, str(m))
    return 0


def cmd_fdtc(args) -> int:
    w = _word(args)
    v = fdtc(w, args.budget)
    _emit(args, {"strands": w.strands, "fdtc": rat(v.value)}, str(v.value))
    return 0


def _hu_payload(hu: HUResult) -> dict[str, Any]:
    return {
        "strands": hu.strands,
        "writhe": hu.writhe,
        "fdtc": rat(hu.omega.value),
        "slope_change": rat(hu.slope_change_at_2_over_n),
        **pl_json(hu.fn),
    }


def _emit_pl(args, f: PLFunction, payload: dict[str, Any]) -> None:
    if args.csv:
        print(pl_csv(f, args.samples))
    elif args.svg:
        print(pl_svg(f))
    elif args.json:
        print(json.dumps(payload))
    else:
        print("breakpoints:", " ".join(str(t) for t in f.breakpoints))
        print("values:     ", " ".join(str(v) for v in f.values))
        print("slopes:     ", " ".join(str(s) for s in f.slopes))
        for key in ("writhe", "fdtc", "slope_change"):
            if key in payload:
                val = payload[key]
                print(f"{key}: {Fraction(val['num'], val['den']) if isinstance(val, dict) else val}")


def cmd_upsilon(args) -> int:
    w = _word(args)
    hu = homogenized_upsilon(w, args.budget)
    _emit_pl(args, hu.fn, _hu_payload(hu))
    return 0


def cmd_torus_upsilon(args) -> int:
    f = torus_upsilon(args.p, args.k)
    _emit_pl(args, f, {"n": args.p, "k": args.k, **pl_json(f)})
    return 0


def cmd_index(args) -> int:
    w = _word(args)
    cert = index_certificate(w, args.budget)
    payload = {
        "strands": cert.strands,
        "fdtc": rat(cert.omega.value),
        "verdict": cert.verdict.value,
        "rule": cert.rule.value if cert.rule else None,
        "experimental_n_minus_2": cert.experimental.value,
    }
    if args.domination:
        payload["full_twist_domination"] = full_twist_domination(w, args.budget)
    text = f"{cert.verdict.value}" + (f" ({cert.rule.value})" if cert.rule else "")
    _emit(args, payload, text)
    return 0


def cmd_wr(args) -> int:
    w = _word(args)
    v = braid.writhe(w)
    _emit(args, {"strands": w.strands, "writhe": v}, str(v))
    return 0


def cmd_perm(args) -> int:
    w = _word(args)
    p = braid.perm_of(w)
    _emit(args, {"strands": w.strands, "perm": list(p.images)}, " ".join(map(str, p.images)))
    return 0


def cmd_components(args) -> int:
    w = _word(args)
    c = braid.closure_components(w)
    _emit(args, {"strands": w.strands, "components": c}, str(c))
    return 0


def cmd_family(args) -> int:
    w = braid.family(args.name, *args.params)
    _emit(args, {"strands": w.strands, "word": format_braid(w)}, format_braid(w))
    return 0


def cmd_fuzz(args) -> int:
    rep = run_suite(args.suite, args.seed, args.count)
    payload = {"suite": rep.suite, "cases": rep.cases, "violations": rep.violations}
    text = f"{rep.suite}: {rep.cases} cases, {len(rep.violations)} violations"
    if rep.violations:
        text += "\n" + "\n".join(rep.violations)
    _emit(args, payload, text)
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=None, help="strand count (default: smallest that fits)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=None, help="handle reduction step cap")

    word_in = argparse.ArgumentParser(add_help=False)
    word_in.add_argument("word", nargs="?", help='braid word, e.g. "s1 S2 (s1 s2)^3"')
    word_in.add_argument("--family", nargs="+", metavar=("NAME", "PARAM"), help="use a named family instead")

    plot_out = argparse.ArgumentParser(add_help=False)
    plot_out.add_argument("--csv", action="store_true", help="emit t,value rows")
    plot_out.add_argument("--samples", type=int, default=0, help="extra uniform samples for --csv")
    plot_out.add_argument("--svg", action="store_true", help="emit a bare SVG polyline")

    p = argparse.ArgumentParser(prog="braidwrench", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, parents, help_):
        sp = sub.add_parser(name, parents=parents, help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("reduce", cmd_reduce, [common, word_in], "handle-reduce a word")
    add("sign", cmd_sign, [common, word_in], "Dehornoy sign: positive, zero or negative")
    for name, fn, help_ in (("cmp", cmd_cmp, "compare two braids"), ("eq", cmd_eq, "test braid equality")):
        sp = add(name, fn, [common], help_)
        sp.add_argument("a")
        sp.add_argument("b")
        if name == "eq":
            sp.add_argument("--oracle", action="store_true", help="cross-check with the Artin action")
    add("floor", cmd_floor, [common, word_in], "Dehornoy floor")
    add("fdtc", cmd_fdtc, [common, word_in], "fractional Dehn twist coefficient")
    add("upsilon", cmd_upsilon, [common, word_in, plot_out], "homogenized Upsilon")
    sp = add("torus-upsilon", cmd_torus_upsilon, [common, plot_out], "Upsilon of T(p, pk+1)")
    sp.add_argument("p", type=int)
    sp.add_argument("k", type=int)
    sp = add("index", cmd_index, [common, word_in], "braid index certificate")
    sp.add_argument("--domination", action="store_true", help="also test full-twist domination")
    add("wr", cmd_wr, [common, word_in], "writhe")
    add("perm", cmd_perm, [common, word_in], "strand permutation")
    add("components", cmd_components, [common, word_in], "closure component count")
    sp = add("family", cmd_family, [common], "print a named family word")
    sp.add_argument("name", choices=sorted(braid.FAMILIES))
    sp.add_argument("params", type=int, nargs="*")
    sp = add("fuzz", cmd_fuzz, [common], "run a randomized property suite")
    sp.add_argument("--suite", choices=sorted(SUITES), required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=100)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, OracleBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, BadParams, DomainError, BraidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
