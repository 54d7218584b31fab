"""Command-line interface: ``skewdna <subcommand> [options]``.

Exit codes: 0 success, 1 domain error (non-divisor, guard exceeded, ...),
2 usage or parse error.  Output is deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes, dna, search
from .errors import DomainError, NotDivisorError, UsageError
from .gf import build_field, format_gf2
from .skewpoly import (
    SkewPoly,
    format_poly,
    is_left_divisor,
    is_palindromic,
    is_theta_palindromic,
    left_divmod,
    palindromic_normalize,
    right_divmod,
    skew_reciprocal,
)

SCHEMA = "skewdna/v1"


def _field(args):
    return build_field(args.s, args.modulus)


def _poly(F, text: str) -> SkewPoly:
    return SkewPoly.parse(F, text)


def _code(args):
    F = _field(args)
    return codes.build_code(_poly(F, args.g), args.n)


def _kv(pairs) -> str:
    return "".join(f"{k} = {v}\n" for k, v in pairs)


def _flag(v) -> str:
    if v is None:
        return "skipped:guard"
    return "true" if v else "false"


def code_report(code: codes.SkewCyclicCode, guard: int | None = None) -> dict:
    """Machine-readable summary of a code and its reversibility flags."""
    g = code.g
    d = None
    if code.k:
        d = search.guarded(codes.minimum_distance, code, guard)
    norm = palindromic_normalize(g, "theta_palindromic")
    return {
        "n": code.n,
        "k": code.k,
        "d": d,
        "g": format_poly(g),
        "h": format_poly(code.h),
        "h_reciprocal": format_poly(codes.dual_generator(code)),
        "flags": {
            "palindromic": is_palindromic(g),
            "theta_palindromic": is_theta_palindromic(g),
            "theta_palindromic_multiple": None if norm is None else format_poly(norm.poly),
            "reversible_classical": search.guarded(codes.is_reversible_classical, code, guard),
            "reversible_dna": search.guarded(dna.is_reversible_dna_code, code, None, guard),
            "reversible_dna_structural": dna.is_reversible_dna_by_generator(code),
        },
    }


def _report_text(rep: dict) -> str:
    lines = [
        ("parameters", codes.format_parameters(rep["n"], rep["k"], rep["d"])),
        ("g", rep["g"]),
        ("h", rep["h"]),
        ("h_reciprocal", rep["h_reciprocal"]),
    ]
    for key, val in rep["flags"].items():
        lines.append((key, val if isinstance(val, str) else "-" if key.endswith("multiple") else _flag(val)))
    return _kv(lines)


# -- subcommands: each returns (structured result, text) -----------------


def cmd_field_info(args):
    F = _field(args)
    fixed = [F.format(a) for a in F.fixed_elements()]
    result = {
        "s": F.s,
        "q": F.q,
        "modulus": format_gf2(F.modulus),
        "theta_exponent": F.theta_exponent,
        "fixed_subfield": fixed,
        "elements": [
            {"element": F.format(a), "additive": F.hex(a), "theta": F.format(F.theta(a))} for a in F.elements()
        ],
    }
    text = _kv(
        [
            ("q", F.q),
            ("modulus", result["modulus"]),
            ("theta", f"b -> b^{F.theta_exponent}"),
            ("fixed_subfield", ", ".join(fixed)),
        ]
    )
    return result, text


def cmd_poly_mul(args):
    F = _field(args)
    p = _poly(F, args.f) * _poly(F, args.g)
    return {"product": format_poly(p)}, format_poly(p) + "\n"


def cmd_poly_divmod(args):
    F = _field(args)
    fn = right_divmod if args.side == "right" else left_divmod
    q, r = fn(_poly(F, args.f), _poly(F, args.g))
    result = {"side": args.side, "quotient": format_poly(q), "remainder": format_poly(r)}
    return result, _kv([("quotient", result["quotient"]), ("remainder", result["remainder"])])


def cmd_check_divisor(args):
    F = _field(args)
    texts = [args.g] if args.g else _read_lines(args.file)
    if not texts:
        raise UsageError("no polynomial given: use --g or --file")
    results, out, failures = [], [], []
    for t in texts:
        g = _poly(F, t)
        modulus = SkewPoly.x_n_minus_one(F, args.n)
        q, r = right_divmod(modulus, g)
        entry = {
            "g": format_poly(g),
            "right_divisor": r.is_zero(),
            "cofactor": format_poly(q) if r.is_zero() else None,
            "remainder": format_poly(r),
            "left_divisor": is_left_divisor(g, args.n),
        }
        results.append(entry)
        if r.is_zero():
            out.append(_kv([("g", entry["g"]), ("right_divisor", "true"), ("cofactor", entry["cofactor"]),
                            ("left_divisor", _flag(entry["left_divisor"]))]))
        else:
            failures.append(f"{entry['g']} (remainder {entry['remainder']})")
            out.append(_kv([("g", entry["g"]), ("right_divisor", "false"), ("remainder", entry["remainder"])]))
    result = results[0] if args.g else {"results": results}
    if failures:
        raise _PartialFailure(
            result,
            "\n".join(out),
            NotDivisorError(f"not a right divisor of x^{args.n} + 1: " + "; ".join(failures), None),
        )
    return result, "\n".join(out)


def cmd_reciprocal(args):
    F = _field(args)
    f = _poly(F, args.f)
    fr = skew_reciprocal(f)
    result = {
        "reciprocal": format_poly(fr),
        "self_reciprocal": fr == f,
        "palindromic": is_palindromic(f),
        "theta_palindromic": is_theta_palindromic(f),
    }
    text = _kv([("reciprocal", result["reciprocal"])] + [(k, _flag(result[k])) for k in list(result)[1:]])
    return result, text


def cmd_search(args):
    F = _field(args)
    found = search.find_right_divisors(
        F, search.DivisorQuery(args.n, args.m, args.kind, args.limit), args.search_guard
    )
    polys = [format_poly(g) for g in found]
    return {"n": args.n, "m": args.m, "kind": args.kind, "divisors": polys}, "".join(p + "\n" for p in polys)


def cmd_factor_odd(args):
    F = _field(args)
    factors = [format_poly(f) for f in search.factor_odd_length(F, args.n, args.search_guard)]
    return {"n": args.n, "factors": factors}, "".join(f + "\n" for f in factors)


def cmd_code_info(args):
    rep = code_report(_code(args), args.enum_guard)
    return rep, _report_text(rep)


def cmd_dual(args):
    code = _code(args)
    dual = codes.dual(code)
    rep = code_report(dual, args.enum_guard)
    rep["orthogonal"] = codes.are_orthogonal(code, dual)
    return rep, _report_text(rep) + _kv([("orthogonal", _flag(rep["orthogonal"]))])


def cmd_dna_table(args):
    table = dna.build_table(_field(args))
    rows = [{"word": w, "multiplicative": m, "additive": a} for w, m, a in dna.table_rows(table)]
    return {"table": rows}, dna.table_tsv(table)


def cmd_dna_export(args):
    code = _code(args)
    table = dna.build_table(code.field)
    text = dna.export_codewords(code, table, fasta=args.fasta, guard=args.enum_guard)
    return {"codewords": text.split()}, text


def cmd_verify_reversible(args):
    code = _code(args)
    result = {
        "reversible_dna_structural": dna.is_reversible_dna_by_generator(code),
        "reversible_dna_exhaustive": dna.is_reversible_dna_code(code, guard=args.enum_guard),
        "reversible_classical": codes.is_reversible_classical(code, args.enum_guard),
    }
    result["agree"] = result["reversible_dna_structural"] == result["reversible_dna_exhaustive"]
    return result, _kv((k, _flag(v)) for k, v in result.items())


def cmd_sweep(args):
    F = _field(args)
    report = search.sweep_and_classify(F, args.n, args.enum_guard, args.search_guard)
    return report.as_dict(), search.format_report(report)


class _PartialFailure(Exception):
    def __init__(self, result, text, error):
        super().__init__(str(error))
        self.result, self.text, self.error = result, text, error


def _read_lines(path: str) -> list[str]:
    try:
        with open(path) as fh:
            return [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _int(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=int, default=1, help="field parameter, q = 4^(2s) (default 1)")
    common.add_argument("--modulus", type=_int, default=None, help="primitive modulus as a bitmask, e.g. 0x13")
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--enum-guard", type=_int, default=None, help="max codewords to enumerate")
    common.add_argument("--search-guard", type=_int, default=None, help="max search candidates")

    parser = argparse.ArgumentParser(prog="skewdna", description="Skew cyclic reversible DNA codes over GF(4^(2s)).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *opts):
        p = sub.add_parser(name, parents=[common], help=help_)
        for opt in opts:
            opt(p)
        p.set_defaults(func=fn)
        return p

    f_opt = lambda p: p.add_argument("--f", required=True, help="polynomial f")
    g_opt = lambda p: p.add_argument("--g", required=True, help="polynomial g")
    n_opt = lambda p: p.add_argument("--n", type=int, required=True, help="code length")

    add("field-info", cmd_field_info, "describe the field")
    add("poly-mul", cmd_poly_mul, "skew product f*g", f_opt, g_opt)
    add(
        "poly-divmod",
        cmd_poly_divmod,
        "skew division of f by g",
        f_opt,
        g_opt,
        lambda p: p.add_argument("--side", choices=["right", "left"], default="right"),
    )
    cd = add("check-divisor", cmd_check_divisor, "test g as a right divisor of x^n - 1", n_opt)
    src = cd.add_mutually_exclusive_group(required=True)
    src.add_argument("--g", help="polynomial g")
    src.add_argument("--file", help="file with one polynomial per line")
    add("reciprocal", cmd_reciprocal, "skew reciprocal of f", f_opt)
    add(
        "search",
        cmd_search,
        "find monic right divisors of x^n - 1",
        n_opt,
        lambda p: p.add_argument("--m", type=int, required=True, help="divisor degree"),
        lambda p: p.add_argument("--kind", choices=list(search.KINDS), default=search.ANY),
        lambda p: p.add_argument("--limit", type=int, default=None),
    )
    add("factor-odd", cmd_factor_odd, "factor x^n - 1 over the fixed subfield (odd n)", n_opt)
    add("code-info", cmd_code_info, "parameters and flags of <g>", n_opt, g_opt)
    add("dual", cmd_dual, "dual code of <g>", n_opt, g_opt)
    add("dna-table", cmd_dna_table, "dump the field/DNA correspondence as TSV")
    add(
        "dna-export",
        cmd_dna_export,
        "write every codeword as a DNA string",
        n_opt,
        g_opt,
        lambda p: p.add_argument("--fasta", action="store_true", help="emit >cw<index> headers"),
    )
    add("verify-reversible", cmd_verify_reversible, "structural vs exhaustive reversibility", n_opt, g_opt)
    add("sweep", cmd_sweep, "classify every right divisor of x^n - 1", n_opt)
    return parser


def _emit(args, result, text, out) -> None:
    if args.format == "structured":
        doc = {"schema": SCHEMA, "command": args.command, "s": args.s, "result": result}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, text = args.func(args)
    except _PartialFailure as exc:
        _emit(args, exc.result, exc.text, out)
        err.write(f"error: {type(exc.error).__name__}: {exc.error}\n")
        return 1
    except UsageError as exc:
        err.write(f"error: UsageError: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    _emit(args, result, text, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
