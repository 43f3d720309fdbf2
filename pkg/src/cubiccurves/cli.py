"""Command-line front end.

Classes are written "a;b1,b2,b3,b4,b5,b6".  Output formats: table (default),
json (byte-stable field order), csv.  Exit codes: 0 success, 1 usage or
parse error, 2 precondition failure (invalid class for the operation),
3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .census import census_csv, census_range
from .cohomology import cohomology
from .curve import invariants, has_smooth_member, normality_profile
from .errors import DegeneratePoints, PreconditionError
from .lattice import Cremona, DivisorClass, Perm, reduce_to_standard
from .obstruction import (
    ObstructionVerdict,
    classify,
    gen_obstructed,
    hilbert_dim,
    kleppe_verdict,
)
from .oracle import h0_interpolation
from .verify import run_checks

VISIBLE_COMMANDS = (
    "reduce,invariants,cohomology,normality,classify,hilbert-dim,kleppe,"
    "census,gen-obstructed,verify-paper"
)


class ClassParseError(Exception):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(message)
        self.text = text
        self.pos = pos
        self.message = message

    def render(self) -> str:
        return (
            f"error: invalid class '{self.text}'\n"
            f"  {self.text}\n"
            f"  {' ' * self.pos}^ {self.message}"
        )


_INT = re.compile(r"[+-]?\d+")


def _scan_int(text: str, pos: int) -> tuple[int, int]:
    m = _INT.match(text, pos)
    if not m:
        raise ClassParseError(text, pos, "expected integer")
    return int(m.group()), m.end()


def parse_class_text(text: str, coeffs: int = 6) -> tuple[int, tuple[int, ...]]:
    text = text.strip()
    a, pos = _scan_int(text, 0)
    if pos >= len(text) or text[pos] != ";":
        raise ClassParseError(text, pos, "expected ';'")
    pos += 1
    b = []
    for i in range(coeffs):
        v, pos = _scan_int(text, pos)
        b.append(v)
        if i < coeffs - 1:
            if pos >= len(text) or text[pos] != ",":
                raise ClassParseError(text, pos, f"expected ',' ({coeffs} coefficients)")
            pos += 1
    if pos != len(text):
        raise ClassParseError(text, pos, "unexpected trailing characters")
    return a, tuple(b)


def parse_class(text: str) -> DivisorClass:
    a, b = parse_class_text(text, 6)
    return DivisorClass(a, b)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems, not argparse's 2
        raise _UsageError(f"{self.format_usage()}error: {message}")


def _word_json(word) -> list:
    out = []
    for gen in word:
        if isinstance(gen, Perm):
            out.append({"perm": list(gen.sigma)})
        else:
            out.append({"cremona": [gen.i, gen.j, gen.k]})
    return out


def _verdict_json(v: ObstructionVerdict) -> dict:
    return {
        "kind": v.kind,
        "vanishing": list(v.vanishing),
        "witness_line": str(v.witness_line) if v.witness_line is not None else None,
        "m": v.m,
        "rule": v.rule,
        "reason": v.reason,
        "witnesses": [{"line": str(l), "m": m, "rule": r} for l, m, r in v.witnesses],
    }


def _dim_json(r) -> dict:
    if r.kind == "exact":
        return {"kind": "exact", "value": r.value, "method": r.method}
    return {"kind": "interval", "lo": r.lo, "hi": r.hi, "method": r.method}


def _kleppe_json(k) -> dict:
    return {
        "kind": k.kind,
        "failed_hypothesis": k.failed_hypothesis,
        "dim": k.dim,
        "range_tag": k.range_tag,
    }


# --- per-command payload builders -----------------------------------------


def _cmd_reduce(cls: DivisorClass) -> dict:
    red = reduce_to_standard(cls)
    return {
        "input": str(red.input),
        "standard": str(red.standard),
        "word": _word_json(red.word),
    }


def _cmd_invariants(cls: DivisorClass) -> dict:
    std = reduce_to_standard(cls).standard
    d, g = invariants(cls)
    return {
        "class": str(cls),
        "standard": str(std),
        "d": d,
        "g": g,
        "smooth_member": has_smooth_member(cls),
    }


def _cmd_cohomology(cls: DivisorClass) -> dict:
    t = cohomology(cls)
    return {"class": str(cls), "h0": t.h0, "h1": t.h1, "h2": t.h2, "chi": t.chi}


def _cmd_normality(cls: DivisorClass) -> dict:
    rep = normality_profile(cls)
    return {
        "class": str(cls),
        "standard": str(rep.cls),
        "d": rep.degree,
        "g": rep.genus,
        "abnormality": {str(n): rep.abnormality[n] for n in (1, 2, 3)},
        "s_invariant": rep.s_invariant,
        "s_note": "curve lies on the cubic" if rep.s_invariant == 3 else "",
    }


def _cmd_classify(cls: DivisorClass) -> dict:
    std = reduce_to_standard(cls).standard
    v = classify(cls)
    payload = {"class": str(cls), "standard": str(std)}
    payload.update(_verdict_json(v))
    return payload


def _cmd_hilbert_dim(cls: DivisorClass) -> dict:
    from .curve import abnormality
    from .cohomology import h0
    from .lattice import K

    std = reduce_to_standard(cls).standard
    r = hilbert_dim(cls)
    d, g = invariants(cls)
    return {
        "class": str(cls),
        "standard": str(std),
        "d": d,
        "g": g,
        "h1_ic3": abnormality(std, 3),
        "h2": h0(std + 4 * K),
        "dim": _dim_json(r),
    }


def _cmd_kleppe(cls: DivisorClass) -> dict:
    std = reduce_to_standard(cls).standard
    d, g = invariants(cls)
    return {
        "class": str(cls),
        "standard": str(std),
        "d": d,
        "g": g,
        "kleppe": _kleppe_json(kleppe_verdict(cls)),
    }


def _cmd_oracle(cls: DivisorClass, seed: int) -> dict:
    return {"class": str(cls), "seed": seed, "h0": h0_interpolation(cls, seed)}


CLASS_COMMANDS = {
    "reduce": _cmd_reduce,
    "invariants": _cmd_invariants,
    "cohomology": _cmd_cohomology,
    "normality": _cmd_normality,
    "classify": _cmd_classify,
    "hilbert-dim": _cmd_hilbert_dim,
    "kleppe": _cmd_kleppe,
}


def _record_json(r) -> dict:
    from .census import _kleppe_text

    return {
        "class": str(r.cls),
        "d": r.d,
        "g": r.g,
        "h1_ic3": r.h1_ic3,
        "h2": r.h2,
        "normality": r.normality,
        "verdict": r.verdict.kind,
        "rule": r.verdict.rule or "",
        "dim": _dim_json(r.dim),
        "kleppe": _kleppe_text(r.kleppe),
        "dim_w": r.dim_w,
    }


# --- rendering --------------------------------------------------------------


def _flat(payload: dict, prefix: str = "") -> list[tuple[str, str]]:
    out = []
    for k, v in payload.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.extend(_flat(v, prefix=f"{key}."))
        elif isinstance(v, (list, tuple)):
            out.append((key, " ".join(json.dumps(x, separators=(",", ":")) if isinstance(x, dict) else str(x) for x in v)))
        elif v is None:
            out.append((key, ""))
        else:
            out.append((key, str(v)))
    return out


def _csv_rows(rows: list[list[str]]) -> str:
    import csv as _csv
    import io

    buf = io.StringIO()
    w = _csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _payloads_csv(payloads: list[dict]) -> str:
    flats = [_flat(p) for p in payloads]
    header = [k for k, _ in flats[0]]
    return _csv_rows([header] + [[v for _, v in f] for f in flats])


def _table_lines(payload: dict, indent: int = 0) -> list[str]:
    lines = []
    pad = "  " * indent
    for k, v in payload.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_table_lines(v, indent + 1))
        elif isinstance(v, (list, tuple)) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{k}:")
            for x in v:
                sub = _table_lines(x, 0)
                lines.append(f"{'  ' * (indent + 1)}- {sub[0]}")
                lines.extend(f"{'  ' * (indent + 1)}  {s}" for s in sub[1:])
        elif isinstance(v, (list, tuple)):
            lines.append(f"{pad}{k}: {' '.join(str(x) for x in v)}")
        else:
            lines.append(f"{pad}{k}: {'' if v is None else v}")
    return lines


def _render_payloads(payloads: list[dict], fmt: str, batch: bool) -> str:
    if fmt == "json":
        if batch:
            return "".join(json.dumps(p, separators=(",", ":")) + "\n" for p in payloads)
        return json.dumps(payloads[0], indent=2) + "\n"
    if fmt == "csv":
        return _payloads_csv(payloads)
    blocks = ["\n".join(_table_lines(p)) for p in payloads]
    return "\n\n".join(blocks) + "\n"


def _aligned_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt_row(row):
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
    return "\n".join([fmt_row(header)] + [fmt_row(r) for r in rows]) + "\n"


# --- top-level dispatch -----------------------------------------------------


def _class_inputs(args) -> list[DivisorClass]:
    if args.stdin:
        if args.cls is not None:
            raise _UsageError("error: give CLASS or --stdin, not both")
        lines = [ln.strip() for ln in sys.stdin.read().splitlines()]
        return [parse_class(ln) for ln in lines if ln]
    if args.cls is None:
        raise _UsageError("error: CLASS argument is required (or use --stdin)")
    return [parse_class(args.cls)]


def _dispatch(args) -> tuple[str, int]:
    fmt = args.format
    if args.command in CLASS_COMMANDS:
        classes = _class_inputs(args)
        payloads = [CLASS_COMMANDS[args.command](c) for c in classes]
        return _render_payloads(payloads, fmt, batch=args.stdin), 0

    if args.command == "oracle-h0":
        classes = _class_inputs(args)
        payloads = [_cmd_oracle(c, args.seed) for c in classes]
        return _render_payloads(payloads, fmt, batch=args.stdin), 0

    if args.command == "gen-obstructed":
        a, b = parse_class_text(args.dprime, 5)
        cls = gen_obstructed(args.k, (a, *b))
        d, g = invariants(cls)
        payload = {
            "k": args.k,
            "dprime": args.dprime,
            "class": str(cls),
            "d": d,
            "g": g,
            "verdict": _verdict_json(classify(cls)),
        }
        return _render_payloads([payload], fmt, batch=False), 0

    if args.command == "census":
        records, summary = census_range(
            args.d_min, args.d_max, args.g_min, args.g_max, threads=args.threads
        )
        if fmt == "csv":
            return census_csv(records), 0
        if fmt == "json":
            payload = {
                "params": {
                    "d_min": args.d_min,
                    "d_max": args.d_max,
                    "g_min": args.g_min,
                    "g_max": args.g_max,
                },
                "summary": summary,
                "records": [_record_json(r) for r in records],
            }
            return json.dumps(payload, indent=2) + "\n", 0
        import csv as _csvmod
        import io as _io

        parsed = list(_csvmod.reader(_io.StringIO(census_csv(records))))
        table = _aligned_table(parsed[0], parsed[1:])
        tail = f"\ncells: {summary['cells']}  empty: {summary['empty_cells']}  records: {summary['records']}\n"
        return table + tail, 0

    if args.command == "verify-paper":
        checks = run_checks()
        counts = {
            "passed": sum(c.status == "PASS" for c in checks),
            "failed": sum(c.status == "FAIL" for c in checks),
            "flagged": sum(c.status == "FLAGGED" for c in checks),
        }
        code = 0 if counts["failed"] == 0 else 1
        if fmt == "json":
            payload = {
                "checks": [
                    {"check_id": c.check_id, "status": c.status, "detail": c.detail}
                    for c in checks
                ],
                **counts,
            }
            return json.dumps(payload, indent=2) + "\n", code
        if fmt == "csv":
            rows = [[c.check_id, c.status, c.detail] for c in checks]
            return _csv_rows([["check_id", "status", "detail"]] + rows), code
        table = _aligned_table(
            ["check", "status", "detail"],
            [[c.check_id, c.status, c.detail] for c in checks],
        )
        tail = f"\n{len(checks)} checks: {counts['passed']} passed, {counts['failed']} failed, {counts['flagged']} flagged\n"
        return table + tail, code

    raise _UsageError("error: no command given (see --help)")


def _build_parser() -> _Parser:
    p = _Parser(prog="cubiccurves", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", metavar=f"{{{VISIBLE_COMMANDS}}}", parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", metavar="FILE", help="also write the payload to FILE")

    classarg = _Parser(add_help=False)
    classarg.add_argument("cls", metavar="CLASS", nargs="?", help='divisor class "a;b1,b2,b3,b4,b5,b6"')
    classarg.add_argument("--stdin", action="store_true", help="read one class per line from stdin")

    helps = {
        "reduce": "standard form and the reducing word",
        "invariants": "degree, genus, smooth-member test",
        "cohomology": "h0, h1, h2 and chi of a class",
        "normality": "n-normality defects and the s-invariant",
        "classify": "Unobstructed / Obstructed / Undetermined verdict",
        "hilbert-dim": "local dimension of the Hilbert scheme at [C]",
        "kleppe": "maximal-family status of the class",
    }
    for name, h in helps.items():
        sub.add_parser(name, parents=[common, classarg], help=h)

    sp = sub.add_parser("census", parents=[common], help="sweep families over (d, g) ranges")
    sp.add_argument("--d-min", type=int, required=True)
    sp.add_argument("--d-max", type=int, required=True)
    sp.add_argument("--g-min", type=int, required=True)
    sp.add_argument("--g-max", type=int, required=True)
    sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("gen-obstructed", parents=[common], help="build an obstructed class from (k, seed class)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dprime", default="0;0,0,0,0,0", metavar="CLASS5", help='seed "a;b1,b2,b3,b4,b5"')

    sub.add_parser("verify-paper", parents=[common], help="run the built-in worked-example checks")

    sp = sub.add_parser("oracle-h0", parents=[common, classarg])  # debugging aid, hidden
    sp.add_argument("--seed", type=int, default=0)
    return p


_NEGCLASS = re.compile(r"-\d+;")


def run(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    # classes with negative a would otherwise be eaten as option strings;
    # a leading space keeps them positional and parse_class strips it
    argv = [(" " + a) if _NEGCLASS.match(a) else a for a in argv]
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(e, file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)
    if args.command is None:
        print(parser.format_usage(), file=sys.stderr, end="")
        return 1
    try:
        text, code = _dispatch(args)
    except ClassParseError as e:
        print(e.render(), file=sys.stderr)
        return 1
    except _UsageError as e:
        print(e, file=sys.stderr)
        return 1
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (AssertionError, DegeneratePoints) as e:
        print(f"internal error: {e!r}", file=sys.stderr)
        return 3
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return code


def main() -> None:
    sys.exit(run())
