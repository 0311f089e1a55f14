"""Command line driver.

Exit codes: 0 success, 1 usage, 2 parse or semantic error, 3 hypothesis
violation, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .derivations import HypothesisError, f2_subspace, span_rank, standard_basis
from .linalg import FieldSpec
from .oracle import inner_rank, oracle_diff_dim, oracle_h1, oracle_hh1, random_instances
from .planar import EmbeddingError, NotPlanarError, face_operator, h1_basis_planar, hh1_basis_planar
from .problem import ParseError, ProblemSpec, analyze, export_dot, parse_input

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def parse_field(text: str) -> FieldSpec:
    t = text.strip().upper().replace("_", "").replace(" ", "")
    if t == "Q":
        return FieldSpec()
    digits = t[1:] if t.startswith("F") else t
    if not digits.isdigit():
        raise argparse.ArgumentTypeError(f"field must be Q or F<prime>, got {text!r}")
    try:
        return FieldSpec(int(digits))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--field", type=parse_field, help="override the field: Q or F<p>")

    parser = _Parser(prog="quiverhh", description="First Hochschild cohomology of quiver algebras")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("analyze", parents=[common], help="dimensions and structural flags")
    p.add_argument("file")
    p = sub.add_parser("basis", parents=[common], help="explicit operator lists")
    p.add_argument("file")
    p.add_argument("--which", choices=["diff", "h1", "hh1"], default="diff")
    p = sub.add_parser("faces", parents=[common], help="faces of the plane embedding")
    p.add_argument("file")
    p = sub.add_parser("oracle", parents=[common], help="cross-check against brute force")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", type=int, default=0, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("export-dot", parents=[common], help="print the quiver as DOT")
    p.add_argument("file")
    return parser


def _load(path: str) -> ProblemSpec:
    if path == "-":
        return parse_input(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read())


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True, default=str))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_analyze(args, spec: ProblemSpec) -> int:
    report = analyze(spec.presentation(args.field))
    _emit(args, report.to_dict(), report.to_text())
    return EXIT_OK


def _f2_fallback(args, p, which: str, reason: str) -> int:
    f2 = f2_subspace(p)
    sb = standard_basis(p)
    dim = sb.dim_h1 if which == "h1" else f2.dim_hh1
    data = {"which": which, "error": reason, "dimension": dim}
    lines = [f"error: {reason}", f"dim {which.upper()} = {dim}"]
    if which == "hh1":
        cols = [str(c) for c in f2.columns]
        vecs = [[str(x) for x in v] for v in f2.vectors]
        data.update(columns=cols, f2_vectors=vecs)
        lines.append(f"F2 columns: {', '.join(cols) if cols else '(none)'}")
        lines.extend("F2 vector: (" + ", ".join(v) + ")" for v in vecs)
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
        print(f"error: {reason}", file=sys.stderr)
    return EXIT_HYPOTHESIS


def _cmd_basis(args, spec: ProblemSpec) -> int:
    p = spec.presentation(args.field)
    if args.which == "diff":
        sb = standard_basis(p)
        ops = [str(o) for o in sb.B1 + sb.B2]
        _emit(
            args,
            {"which": "diff", "B1": [str(o) for o in sb.B1], "B2": [str(o) for o in sb.B2], "dimension": sb.dim_diff},
            "\n".join([f"dim Diff = {sb.dim_diff}", *ops]),
        )
        return EXIT_OK
    if spec.rotation is None:
        return _f2_fallback(args, p, args.which, "no rotation system given; planar basis unavailable")
    try:
        fs = spec.embedding(p.quiver)
        fn = h1_basis_planar if args.which == "h1" else hh1_basis_planar
        ops = fn(p, fs)
    except (HypothesisError, NotPlanarError) as exc:
        return _f2_fallback(args, p, args.which, str(exc))
    names = [str(o) for o in ops]
    _emit(
        args,
        {"which": args.which, "basis": names, "dimension": len(ops)},
        "\n".join([f"dim {args.which.upper()} = {len(ops)}", *names]),
    )
    return EXIT_OK


def _cmd_faces(args, spec: ProblemSpec) -> int:
    if spec.rotation is None:
        print("error: no rotation system given", file=sys.stderr)
        return EXIT_HYPOTHESIS
    q = spec.quiver()
    fs = spec.embedding(q)
    faces = []
    lines = []
    for i, face in enumerate(fs.faces):
        kind = "outer" if i == fs.outer_face_index else "bounded"
        darts = [str(d) for d in face]
        op = str(face_operator(fs, i))
        faces.append({"index": i, "kind": kind, "darts": darts, "operator": op})
        lines.append(f"face {i} ({kind}): {' '.join(darts)}    {op}")
    v, e, f = len(q.vertices), len(q.arrows), len(fs.faces)
    lines.append(f"|V| - |E| + |F| = {v} - {e} + {f} = {fs.euler_characteristic}")
    _emit(args, {"faces": faces, "V": v, "E": e, "F": f, "euler": fs.euler_characteristic}, "\n".join(lines))
    return EXIT_OK


def _check(p) -> dict:
    sb = standard_basis(p)
    f2 = f2_subspace(p)
    rows = {
        "h1": (sb.dim_h1, oracle_h1(p)),
        "hh1": (f2.dim_hh1, oracle_hh1(p)),
        "diff": (sb.dim_diff, oracle_diff_dim(p)),
        "eval_rank": (sb.dim_diff, span_rank(p, sb.B1 + sb.B2)),
        "inner_rank": (sb.dim_inner, inner_rank(p)),
    }
    return {k: {"formula": a, "oracle": b, "ok": a == b} for k, (a, b) in rows.items()}


def _cmd_oracle(args, spec: ProblemSpec | None) -> int:
    results = []
    if spec is not None:
        results.append(("file", _check(spec.presentation(args.field))))
    if args.random:
        kw = {"field": args.field} if args.field else {}
        for i, p in enumerate(random_instances(args.random, args.seed, **kw)):
            results.append((f"random[{i}]", _check(p)))
    bad = [(name, r) for name, r in results if not all(v["ok"] for v in r.values())]
    lines = []
    for name, r in results:
        status = "ok" if all(v["ok"] for v in r.values()) else "MISMATCH"
        detail = ", ".join(f"{k} {v['formula']}/{v['oracle']}" for k, v in r.items())
        lines.append(f"{name}: {status} ({detail})")
    lines.append(f"{len(results) - len(bad)}/{len(results)} instances agree")
    _emit(args, {"instances": dict(results), "mismatches": [n for n, _ in bad], "seed": args.seed}, "\n".join(lines))
    return EXIT_MISMATCH if bad else EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.command == "oracle" and args.file is None and not args.random:
        print("quiverhh oracle: error: give a FILE or --random N", file=sys.stderr)
        return EXIT_USAGE
    try:
        spec = _load(args.file) if args.file else None
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"{args.file}: {exc.kind} error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.command == "analyze":
            return _cmd_analyze(args, spec)
        if args.command == "basis":
            return _cmd_basis(args, spec)
        if args.command == "faces":
            return _cmd_faces(args, spec)
        if args.command == "oracle":
            return _cmd_oracle(args, spec)
        print(export_dot(spec), end="")
        return EXIT_OK
    except (HypothesisError, NotPlanarError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except EmbeddingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())
