"""Command-line front end.

Subcommands: construct, verify, example, search, repair, coset.  Every run is
deterministic given its flags; randomness only enters through explicit seeds.
Exit codes: 0 success, 1 internal failure, 2 rejected parameters or input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import DEFAULT_SEARCH_BUDGET, build_report, verify_locality
from .constructions import (
    SEARCH_CSV_HEADER,
    binary_construction1,
    binary_construction2,
    parameter_search,
    qary_lrc_lcd_even,
    qary_lrc_lcd_general,
    tamo_barg_cyclic,
)
from .cosets import cyclotomic_coset, defining_set, negate_set
from .cyclic import from_defining_set
from .errors import (
    AssertionFailed,
    CodesError,
    InvariantViolation,
    ParameterViolation,
    ValidationError,
)
from .galois import DEFAULT_TABLE_BUDGET, field_of_size
from .presets import PRESETS, run_preset
from .repair import simulate

_FAMILIES = ("c1", "c2", "tb", "t33", "t34")


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _flatten(obj, prefix="") -> list[tuple[str, str]]:
    items = []
    for key in sorted(obj):
        value = obj[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            items.extend(_flatten(value, prefix=f"{name}."))
        elif isinstance(value, list):
            items.append((name, ",".join(str(v) for v in value)))
        elif isinstance(value, bool):
            items.append((name, "true" if value else "false"))
        elif value is None:
            items.append((name, "none"))
        else:
            items.append((name, str(value)))
    return items


def _text_block(obj) -> str:
    return "".join(f"{k}: {v}\n" for k, v in _flatten(obj))


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, report):
    if args.format == "text":
        body = _text_block(report.to_dict())
        for note in report.notes:
            body += f"note: {note}\n"
        _emit(args, body)
    else:
        for note in report.notes:
            print(f"note: {note}", file=sys.stderr)
        _emit(args, _json_text(report.to_dict()))


def _parse_ints(text: str) -> list[int]:
    """Accepts '36', '1..8', or '3,5,7'."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    if "," in text:
        return [int(v) for v in text.split(",") if v]
    return [int(text)]


def _require_flags(args, names: list[str]):
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise ParameterViolation(
            f"family {args.family!r} needs {', '.join(missing)}")


def _build_family_code(args, table_budget: int):
    """Returns (code, claimed_r, claimed_k) for the selected family."""
    family = args.family
    if family == "c1":
        _require_flags(args, ["m", "r"])
        return binary_construction1(args.m, args.r, table_budget=table_budget), args.r, None
    if family == "c2":
        _require_flags(args, ["m", "r"])
        extras = tuple(_parse_ints(args.extras)) if args.extras else None
        code = binary_construction2(args.m, args.r, extras, table_budget=table_budget)
        return code, args.r, None
    if family == "tb":
        _require_flags(args, ["q", "n", "k", "r"])
        code = tamo_barg_cyclic(args.q, args.n, args.k, args.r,
                                args.ell or 0, args.b or 1, table_budget=table_budget)
        return code, args.r, args.k
    if family == "t33":
        _require_flags(args, ["q", "n", "k", "r"])
        return (qary_lrc_lcd_even(args.q, args.n, args.k, args.r,
                                  table_budget=table_budget), args.r, args.k)
    if family == "t34":
        _require_flags(args, ["q", "n", "k", "r"])
        return (qary_lrc_lcd_general(args.q, args.n, args.k, args.r,
                                     table_budget=table_budget), args.r, args.k)
    raise ParameterViolation(f"unknown family {family!r}")  # pragma: no cover


# -- subcommand handlers

def _cmd_construct(args) -> int:
    code, claimed_r, claimed_k = _build_family_code(args, args.table_budget)
    report = build_report(code, claimed_r=claimed_r, claimed_k=claimed_k,
                          budget=args.budget)
    _emit_report(args, report)
    return 0


def _cmd_verify(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        record = json.load(fh)
    for key in ("q", "n", "defining_set"):
        if key not in record:
            raise ParameterViolation(f"descriptor is missing the {key!r} field")
    field = field_of_size(int(record["q"]), table_budget=args.table_budget)
    n = int(record["n"])
    zeros = defining_set(n, (int(v) for v in record["defining_set"]))
    modulus = record.get("modulus") or None
    code = from_defining_set(field, n, zeros, table_budget=args.table_budget,
                             splitting_modulus=modulus)
    if record.get("m") is not None and int(record["m"]) != code.splitting_degree:
        raise ParameterViolation(
            f"descriptor says m={record['m']} but x^{n}-1 splits in degree "
            f"{code.splitting_degree} over GF({field.q})")
    report = build_report(code, claimed_r=args.r, budget=args.budget)
    _emit_report(args, report)
    return 0


def _cmd_example(args) -> int:
    _, report = run_preset(args.id, table_budget=args.table_budget,
                           search_budget=args.budget)
    _emit_report(args, report)
    return 0


def _cmd_search(args) -> int:
    n_values = _parse_ints(args.n)
    r_values = _parse_ints(args.r)
    rows = parameter_search(args.q, n_values, r_values)
    if args.format == "json":
        _emit(args, _json_text([row.to_dict() for row in rows]))
        return 0
    lines = [SEARCH_CSV_HEADER]
    for row in rows:
        d = row.to_dict()
        lines.append(",".join("" if d[c] is None else str(d[c])
                              for c in SEARCH_CSV_HEADER.split(",")))
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_repair(args) -> int:
    code, claimed_r, _ = _build_family_code(args, args.table_budget)
    profile = verify_locality(code, claimed_r)
    stats = simulate(code, profile, args.trials, args.seed)
    for failure in stats.failures:
        print(f"repair failure: {failure}", file=sys.stderr)
    if args.format == "text":
        _emit(args, _text_block(stats.to_dict()))
    else:
        _emit(args, _json_text(stats.to_dict()))
    return 0


def _cmd_coset(args) -> int:
    coset = cyclotomic_coset(args.a, args.n, args.q)
    negation = negate_set(defining_set(args.n, coset.members))
    neg_coset = cyclotomic_coset(min(negation.exponents), args.n, args.q)
    payload = {
        "a": args.a % args.n,
        "n": args.n,
        "q": args.q,
        "rep": coset.rep,
        "members": list(coset.members),
        "size": len(coset),
        "negation": {"rep": neg_coset.rep, "members": list(negation.exponents)},
        "self_negating": list(negation.exponents) == list(coset.members),
    }
    if args.format == "text":
        _emit(args, _text_block(payload))
    else:
        _emit(args, _json_text(payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrclcd",
        description="Construct and verify cyclic locally recoverable codes "
                    "with complementary duals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "text")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", default=None, help="write to a file instead of stdout")
        p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET,
                       help="cap on q^k for exhaustive distance search")
        p.add_argument("--table-budget", type=int, default=DEFAULT_TABLE_BUDGET,
                       help="cap on field sizes (log/antilog tables)")

    def family_flags(p):
        p.add_argument("--family", choices=_FAMILIES, required=True)
        p.add_argument("--q", type=int, help="field size (q-ary families)")
        p.add_argument("--n", type=int, help="code length (q-ary families)")
        p.add_argument("--k", type=int, help="dimension (q-ary families)")
        p.add_argument("--r", type=int, help="locality")
        p.add_argument("--m", type=int, help="extension degree (binary families)")
        p.add_argument("--ell", type=int, default=None, help="coset offset (tb)")
        p.add_argument("--b", type=int, default=None, help="run stride (tb)")
        p.add_argument("--extras", default=None,
                       help="comma-separated coset representatives (c2)")

    p = sub.add_parser("construct", help="build a code and print its report")
    family_flags(p)
    common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="report on a code given by a descriptor file")
    p.add_argument("--file", required=True,
                   help="JSON {q, m?, n, modulus?, defining_set}")
    p.add_argument("--r", type=int, default=None, help="claimed locality to certify")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("example", help="rebuild a cataloged code and check its facts")
    p.add_argument("id", choices=sorted(PRESETS))
    common(p)
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("search", help="enumerate parameters the families can hit")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", required=True, help="length or range, e.g. 36 or 30..70")
    p.add_argument("--r", required=True, help="locality or range, e.g. 1..8")
    common(p, formats=("csv", "json"))
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("repair", help="simulate seeded single-erasure repairs")
    family_flags(p)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_repair)

    p = sub.add_parser("coset", help="one cyclotomic coset and its negation")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_coset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, AssertionFailed) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except CodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    entry()
