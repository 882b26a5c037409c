"""Command-line front end: ``roughmat approx | compute | verify``.

Exit status: 0 on success, 1 when a verification sweep finds failures, 2 on
usage, parse, validation or guard errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .binrel import is_binary_dependence, relation_from_matrix
from .errors import NotAPartitionMatrix, RoughMatError
from .fields import GF2, parse_field_tag
from .formats import (
    format_family,
    format_matrix,
    format_relation,
    format_set,
    parse_partition,
    parse_set,
    read_input,
)
from .linalg import ExactMatrix, reinterpret
from .matroid import (
    VectorMatroid,
    bases,
    bases_via_ones,
    circuits,
    circuits_via_nullspace,
    independent,
)
from .roughsets import Partition, Universe, encode_matrix, lower_approx, upper_approx

COMPUTATIONS = ("circuits", "bases", "indep-check", "nullspace-min", "ones-min", "relation", "is-bdm", "encode")


class UsageError(RoughMatError):
    pass


def _emit(fmt: str, plain: str, structured: dict, out):
    if fmt == "structured":
        out.write(json.dumps(structured, sort_keys=True) + "\n")
    else:
        out.write(plain)


def _family_payload(F):
    return [list(s.labels) for s in F]


def cmd_approx(args, out) -> int:
    with open(args.file, encoding="utf-8") as fh:
        P = parse_partition(fh.read())
    X = parse_set(P.universe, args.set)
    op = lower_approx if args.which == "lower" else upper_approx
    R = op(P, X)
    plain = format_set(R) + "\n" if len(R) else ""
    _emit(args.format, plain, {"command": "approx", "which": args.which, "result": list(R.labels)}, out)
    return 0


def _matrix_for(obj, field_tag: str | None) -> ExactMatrix:
    spec = parse_field_tag(field_tag) if field_tag else None
    if isinstance(obj, Partition):
        return encode_matrix(obj, spec or GF2)
    return obj if spec is None else reinterpret(obj, spec)


def cmd_compute(args, out) -> int:
    obj = read_input(args.file)
    what = args.what
    payload: dict = {"command": "compute", "what": what}

    if what == "encode":
        if not isinstance(obj, Partition):
            raise UsageError("encode needs a partition file")
        A = _matrix_for(obj, args.field)
        payload.update(field=A.spec.tag, labels=list(A.col_labels), rows=[[str(x) for x in r] for r in A.data])
        _emit(args.format, format_matrix(A), payload, out)
        return 0

    if what == "ones-min" and args.field and parse_field_tag(args.field) != GF2:
        raise NotAPartitionMatrix("ones-min is defined over gf2 only")
    A = _matrix_for(obj, args.field)
    payload["field"] = A.spec.tag
    M = VectorMatroid(A)

    if what in ("circuits", "bases", "nullspace-min", "ones-min"):
        fn = {"circuits": circuits, "bases": bases}.get(what)
        if fn is not None:
            F = fn(M)
        elif what == "nullspace-min":
            F = circuits_via_nullspace(A)
        else:
            F = bases_via_ones(A)
        payload["result"] = _family_payload(F)
        _emit(args.format, format_family(F), payload, out)
    elif what == "indep-check":
        if args.set is None:
            raise UsageError("indep-check needs --set")
        S = parse_set(Universe(A.col_labels), args.set)
        ok = independent(M, S)
        payload.update(set=list(S.labels), result=ok)
        _emit(args.format, ("independent" if ok else "dependent") + "\n", payload, out)
    elif what == "relation":
        pairs = relation_from_matrix(A).label_pairs()
        payload["result"] = [list(p) for p in pairs]
        _emit(args.format, format_relation(pairs), payload, out)
    elif what == "is-bdm":
        v = is_binary_dependence(A)
        payload.update(result=v.is_member, witness=list(v.witness) if v.witness else None, reason=v.reason)
        plain = "member\n" if v.is_member else f"non-member\nwitness {' '.join(v.witness)}\nreason {v.reason}\n"
        _emit(args.format, plain, payload, out)
    return 0


def cmd_verify(args, out) -> int:
    reports = verify_mod.run(args.theorem, max_n=args.max_n, seed=args.seed, samples=args.samples)
    failed = any(not r.ok for r in reports)
    if args.format == "structured":
        payload = {
            "command": "verify",
            "theorem": args.theorem,
            "seed": args.seed,
            "ok": not failed,
            "reports": [
                {
                    "theorem": r.theorem,
                    "instances": r.instances,
                    "failures": r.failures,
                    "wall_time": round(r.wall_time, 3),
                    "ok": r.ok,
                }
                for r in reports
            ],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for r in reports:
            status = "PASS" if r.ok else "FAIL"
            out.write(
                f"{r.theorem:<36} instances={r.instances:<6} failures={len(r.failures):<4} "
                f"seed={args.seed} time={r.wall_time:.2f}s {status}\n"
            )
            for msg in r.failures[:20]:
                out.write(f"    {msg}\n")
            if len(r.failures) > 20:
                out.write(f"    ... {len(r.failures) - 20} more\n")
    return 1 if failed else 0


def _u64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="roughmat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--format", choices=("plain", "structured"), default="plain")

    p = sub.add_parser("approx", help="lower/upper approximation of a set")
    p.add_argument("file", help="partition file")
    p.add_argument("set", help="set literal, e.g. x1,x2,x3 (empty string for the empty set)")
    p.add_argument("--which", choices=("lower", "upper"), default="upper")
    common(p)

    p = sub.add_parser("compute", help="one computation on a matrix or partition file")
    p.add_argument("file", help="matrix or partition file")
    p.add_argument("what", choices=COMPUTATIONS)
    p.add_argument("--field", help="gf2 | gf<p> | q (reinterprets integer matrix entries)")
    p.add_argument("--set", help="set literal for indep-check")
    common(p)

    p = sub.add_parser("verify", help="run the exhaustive / randomized sweeps")
    p.add_argument("theorem", choices=verify_mod.THEOREMS + ("all",))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=_u64, default=42)
    p.add_argument("--samples", type=int, default=None)
    common(p)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    handler = {"approx": cmd_approx, "compute": cmd_compute, "verify": cmd_verify}[args.cmd]
    try:
        return handler(args, out)
    except (RoughMatError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
