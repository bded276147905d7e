"""Command line front end.

Exit codes: 0 success, 1 invalid input, 2 consistency failure.  Exactly one
document goes to standard output; diagnostics go to standard error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .castelnuovo import halphen_bound, pi_bound
from .duality import complete_sequence, validate_sequence
from .errors import ConsistencyError, DomainError
from .families import (ci_facts, extremal_facts, halphen_facts, k3_facts,
                       quadric_facts)
from .genera import classify_range, pi_value_scan
from .report import FORMATS, Document
from .sequences import (GonalitySequence, fixture_sequence, general_sequence,
                        pentagonal_sequence, plane_curve_sequence)
from .slope import HypothesisFailure, find_violations, lemma36_check, prop414_check


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_special(text: str) -> dict[int, int]:
    """``"1=4,2=7"`` -> ``{1: 4, 2: 7}``."""
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            r, d = part.split("=")
            r, d = int(r), int(d)
        except ValueError:
            raise DomainError(f"bad pair {part!r}; expected r=d") from None
        if r in out:
            raise DomainError(f"index {r} given twice")
        out[r] = d
    if not out:
        raise DomainError("empty value list")
    return out


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "y"):
        return True
    if t in ("0", "false", "no", "n"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {text!r}")


def sequence_document(seq: GonalitySequence) -> Document:
    viol = find_violations(seq).indices if seq.is_consecutive() else []
    rows = [{"r": r, "d": d, "provenance": seq.provenance[r]} for r, d in seq.entries.items()]
    meta = {"genus": seq.g}
    if seq.family is not None:
        meta["family"] = str(seq.family)
    meta["violations"] = viol
    return Document("sequence", ["r", "d", "provenance"], rows, meta, rows_key="entries",
                    title=f"Gonality sequence, g = {seq.g}", transpose=True)


def _family_sequence(args) -> GonalitySequence:
    fam = args.family
    if fam == "general":
        _need(args, "g")
        return general_sequence(args.g, args.max_r)
    if fam == "plane":
        _need(args, "d")
        return plane_curve_sequence(args.d, args.max_r)
    if fam == "pentagonal":
        _need(args, "g")
        return pentagonal_sequence(args.g, args.max_r)
    if fam.startswith("fixture:"):
        return fixture_sequence(fam.split(":", 1)[1], args.max_r)
    raise DomainError(f"unknown family {fam!r}; use general, plane, pentagonal or fixture:NAME")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise DomainError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _completed(args) -> GonalitySequence:
    _need(args, "g", "special")
    r_max = args.max_r if args.max_r is not None else 2 * args.g
    return complete_sequence(args.g, parse_special(args.special), r_max)


def cmd_pi(args) -> Document:
    c = pi_bound(args.d, args.r)
    cols = ["d", "r", "chi", "epsilon", "pi", "regime"]
    return Document("castelnuovo", cols, [{k: getattr(c, k) for k in cols}],
                    title="Castelnuovo bound")


def cmd_halphen(args) -> Document:
    h = halphen_bound(args.d, args.s)
    cols = ["d", "s", "k", "epsilon_h", "G"]
    return Document("halphen", cols, [{k: getattr(h, k) for k in cols}], title="Halphen bound")


def cmd_seq(args) -> Document:
    return sequence_document(_family_sequence(args))


def cmd_complete(args) -> Document:
    return sequence_document(_completed(args))


def cmd_slope(args) -> Document:
    if args.family is not None:
        seq = _family_sequence(args)
    else:
        seq = _completed(args)
    rep = find_violations(seq)
    rows = [{"r": c.r, "d_r": seq[c.r], "d_next": seq[c.r + 1], "lhs": c.lhs, "rhs": c.rhs}
            for c in rep.evidence]
    return Document("slope", ["r", "d_r", "d_next", "lhs", "rhs"], rows,
                    {"genus": seq.g, "violations": rep.indices}, rows_key="evidence",
                    title="Slope inequality violations",
                    notes=["lhs = (r+1)*d_r, rhs = r*d_(r+1); violated when lhs < rhs"])


def cmd_lemma36(args) -> Document:
    res = lemma36_check(args.g, args.d, args.r, args.dprev)
    cols = ["applies", "r_dual", "d_upper", "d_lower_next", "violation_at", "failed"]
    if isinstance(res, HypothesisFailure):
        row = {"applies": False, "failed": list(res.failed)}
    else:
        ev = res.evidence
        row = {"applies": True, "r_dual": res.r_dual, "d_upper": res.d_upper,
               "d_lower_next": res.d_lower_next, "violation_at": res.violation_at, "failed": []}
        cols += ["lhs", "rhs"]
        row.update(lhs=ev.lhs, rhs=ev.rhs)
    return Document("lemma36", cols, [row], {"g": args.g, "d": args.d, "r": args.r, "dprev": args.dprev},
                    title="Dual-series slope violation check")


def cmd_prop414(args) -> Document:
    seq = _completed(args)
    rep = prop414_check(args.g, args.gamma, args.r, seq)
    rows = [{"condition": name, "holds": ok} for name, ok in rep.hypotheses]
    meta = {"g": rep.g, "gamma": rep.gamma, "r": rep.r,
            "violation_forced": rep.violation_forced, "mismatches": rep.mismatches,
            "violations": rep.violations, "conclusion": rep.conclusion}
    return Document("prop414", ["condition", "holds"], rows, meta, rows_key="hypotheses",
                    title="Clifford-index implication check")


def cmd_family(args) -> Document:
    t = args.type
    if t == "extremal":
        _need(args, "d", "r")
        f = extremal_facts(args.d, args.r)
    elif t == "quadric":
        _need(args, "a", "b")
        f = quadric_facts(args.a, args.b)
    elif t == "ci":
        _need(args, "s", "p")
        f = ci_facts(args.s, args.p)
    elif t == "k3":
        _need(args, "n", "r")
        f = k3_facts(args.n, args.r)
    else:
        _need(args, "d", "s")
        f = halphen_facts(args.d, args.s)
    rows = []
    for r in sorted(f.known_values):
        v = f.known_values[r]
        if isinstance(v, tuple):
            rows.append({"r": r, "d_r": None, "lower": v[0], "upper": v[1], "source": "theorem"})
        else:
            rows.append({"r": r, "d_r": v, "lower": v, "upper": v, "source": "theorem"})
    if f.prediction is not None:
        p = f.prediction
        rows.append({"r": p.r_dual, "d_r": None, "lower": None, "upper": p.d_upper,
                     "source": "dual bound"})
        rows.append({"r": p.r_dual + 1, "d_r": None, "lower": p.d_lower_next, "upper": None,
                     "source": "dual bound"})
    meta = {"family": str(f.descriptor), "degree": f.d, "genus": f.g, "clifford": f.clifford,
            "predicted_violation": f.predicted_violation,
            "hypotheses": [{"condition": c, "holds": ok} for c, ok in f.hypothesis_report]}
    return Document("family", ["r", "d_r", "lower", "upper", "source"], rows, meta, rows_key="values",
                    title=f"Facts for {f.descriptor}", notes=list(f.notes))


def cmd_genera(args) -> tuple[Document, bool]:
    cls = classify_range(args.from_, args.to, workers=args.workers)
    rows = [{"g": r.g, "member": r.member,
             "witnesses": [f"{d}:{rr}" for d, rr in r.witnesses],
             "case": r.case,
             "case_witness": f"{r.case_witness[0]}:{r.case_witness[1]}" if r.case_witness else None,
             "factors": list(r.factors)} for r in cls.rows]
    meta = {"from": args.from_, "to": args.to, "non_members": cls.non_members()}
    ok = True
    if args.verify:
        # every (d, r) with chi >= 3 and bound at most `to` lies in r < to/3, d <= to
        scan = pi_value_scan(max(2, args.to // 3), args.to)
        checks = dict(cls.checks)
        checks["bound_never_prime"] = not scan["prime"]
        checks["bound_never_1_4_8_14"] = not scan["excluded_value"]
        meta["checks"] = checks
        ok = all(checks.values())
        if not ok:
            bad = {k: v for k, v in cls.failures.items() if v}
            print(f"verification failed: {bad} {scan if any(scan.values()) else ''}", file=sys.stderr)
    doc = Document("genera", ["g", "member", "witnesses", "case", "case_witness", "factors"],
                   rows, meta, title="Genera of extremal curves (chi >= 3)")
    return doc, ok


def cmd_validate(args) -> Document:
    if args.input is not None:
        g, entries = _read_sequence_json(args.input)
        if args.g is not None and args.g != g:
            raise DomainError(f"--g {args.g} disagrees with genus {g} in input")
    else:
        _need(args, "g", "special")
        g, entries = args.g, parse_special(args.special)
    seq = GonalitySequence(g, entries)
    viol = validate_sequence(seq, clifford=args.gamma, plane=args.plane)
    rows = [{"rule": v.rule, "indices": list(v.indices), "detail": v.detail} for v in viol]
    return Document("validation", ["rule", "indices", "detail"], rows,
                    {"genus": g, "valid": not viol}, rows_key="violations",
                    title="Sequence validation")


def _read_sequence_json(path: str) -> tuple[int, dict[int, int]]:
    text = sys.stdin.read() if path == "-" else open(path).read()
    try:
        doc = json.loads(text)
        return int(doc["genus"]), {int(e["r"]): int(e["d"]) for e in doc["entries"]}
    except (ValueError, KeyError, TypeError) as exc:
        raise DomainError(f"not a sequence document: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="md")

    p = _Parser(prog="gonality", description="Gonality sequences of algebraic curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("pi", parents=[common], help="Castelnuovo bound pi(d, r)")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_pi)

    s = sub.add_parser("halphen", parents=[common], help="Halphen bound G(d, s)")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.set_defaults(func=cmd_halphen)

    def family_args(s, required):
        s.add_argument("--family", required=required,
                       help="general | plane | pentagonal | fixture:NAME")
        s.add_argument("--g", type=int)
        s.add_argument("--d", type=int)

    s = sub.add_parser("seq", parents=[common], help="closed-form or tabulated sequence")
    family_args(s, True)
    s.add_argument("--max-r", type=int)
    s.set_defaults(func=cmd_seq)

    s = sub.add_parser("complete", parents=[common], help="complete a sub-genus prefix")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--special", required=True, help="r1=d1,r2=d2,...")
    s.add_argument("--max-r", type=int)
    s.set_defaults(func=cmd_complete)

    s = sub.add_parser("slope", parents=[common], help="slope inequality violations")
    family_args(s, False)
    s.add_argument("--special")
    s.add_argument("--max-r", type=int)
    s.set_defaults(func=cmd_slope)

    s = sub.add_parser("check", help="implication checkers")
    chk = s.add_subparsers(dest="check", required=True, parser_class=_Parser)
    c = chk.add_parser("lemma36", parents=[common])
    for name in ("g", "d", "r", "dprev"):
        c.add_argument(f"--{name}", type=int, required=True)
    c.set_defaults(func=cmd_lemma36)
    c = chk.add_parser("prop414", parents=[common])
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--gamma", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--special", required=True)
    c.add_argument("--max-r", type=int)
    c.set_defaults(func=cmd_prop414)

    s = sub.add_parser("family", parents=[common], help="facts for a curve family")
    s.add_argument("--type", required=True, choices=["extremal", "quadric", "ci", "k3", "halphen"])
    for name in ("d", "r", "a", "b", "s", "p", "n"):
        s.add_argument(f"--{name}", type=int)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("genera", parents=[common], help="classify genera in a range")
    s.add_argument("--from", dest="from_", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_genera)

    s = sub.add_parser("validate", parents=[common], help="check a sequence against the axioms")
    s.add_argument("--g", type=int)
    s.add_argument("--special")
    s.add_argument("--input", help="sequence JSON as written by 'complete' ('-' for stdin)")
    s.add_argument("--gamma", type=int)
    s.add_argument("--plane", type=_bool)
    s.set_defaults(func=cmd_validate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "slope" and args.family is None and args.special is None:
            raise DomainError("slope needs --family or --g/--special")
        if getattr(args, "workers", 1) < 1:
            raise DomainError("--workers must be >= 1")
        out = args.func(args)
        ok = True
        if isinstance(out, tuple):
            out, ok = out
        sys.stdout.write(out.render(args.format))
        return 0 if ok else 2
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
