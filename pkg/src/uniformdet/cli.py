"""Command line interface.

Exit codes: 0 success (or regular with ``check --strict``), 1 singular with
``check --strict``, 2 invalid input, 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Sequence

from .combinatorics import Partition, gamma_coefficient
from .exact import binomial, format_scalar, parse_scalar_list, scalar_to_json
from .linalg import det_oracle
from .sampling import random_spec, rng_for
from .schur import generalized_vandermonde, schur_eval, schur_expand, vandermonde
from .uniform import (
    UniformMatrixSpec,
    build_matrix,
    classify_regularity,
    column_reduce,
    constant_gap_spec,
    det_expansion,
    finite_diff_leading,
    finite_diff_sum,
)

EXIT_SINGULAR = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3

METHODS = ("oracle", "expansion", "reduction")


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma separated integers, got {text!r}") from None


def _scalars(text: str):
    try:
        return parse_scalar_list(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _table(rows: Sequence[Sequence]) -> str:
    rows = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def _render_rows(fmt: str, header: Sequence[str], rows: Sequence[Sequence]) -> str:
    if fmt == "csv":
        return _csv([header, *rows])
    return _table([header, *rows])


# ---------------------------------------------------------------------------
# spec input


_INLINE_SPEC_FLAGS = ("k", "ell", "x", "y", "r", "N")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _spec_from_args(args) -> UniformMatrixSpec:
    inline = [f for f in _INLINE_SPEC_FLAGS if getattr(args, f, None) is not None] + (
        ["constant-gap"] if args.constant_gap else []
    )
    source = getattr(args, "input", None)
    if source is not None:
        if inline:
            raise InputError(f"--input cannot be combined with inline spec flags ({', '.join(inline)})")
        try:
            obj = json.loads(_read_input(source))
        except json.JSONDecodeError as exc:
            raise InputError(f"input is not valid JSON: {exc.msg}") from None
        if isinstance(obj, dict) and "spec" in obj:
            obj = obj["spec"]
        if not isinstance(obj, dict):
            raise InputError("spec JSON must be an object")
        try:
            return UniformMatrixSpec.from_json(obj)
        except (ValueError, TypeError, KeyError) as exc:
            raise InputError(f"invalid spec: {exc}") from None

    if args.k is None or args.ell is None:
        raise InputError("need --k and --ell (or --input FILE)")
    try:
        if args.constant_gap:
            if any(getattr(args, f) is not None for f in ("x", "y", "r")):
                raise InputError("--constant-gap cannot be combined with --x/--y/--r")
            if args.N is None:
                raise InputError("--constant-gap needs --N")
            return constant_gap_spec(args.N, args.k, args.ell)
        if args.N is not None:
            raise InputError("--N only applies with --constant-gap")
        missing = [f"--{f}" for f in ("x", "y", "r") if getattr(args, f) is None]
        if missing:
            raise InputError(f"missing {', '.join(missing)}")
        return UniformMatrixSpec(
            k=args.k, ell=args.ell, x=_scalars(args.x), y=_scalars(args.y), r=_scalars(args.r)
        )
    except ValueError as exc:
        raise InputError(f"invalid spec: {exc}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_build(args) -> tuple[str, int]:
    spec = _spec_from_args(args)
    m = build_matrix(spec)
    if args.format == "json":
        return _dump_json({**m.to_json(), "spec": spec.to_json()}), 0
    if args.format == "csv":
        return m.to_csv(), 0
    return m.to_table(), 0


def _reduction_applicable(spec: UniformMatrixSpec) -> bool:
    return spec.rs == tuple(range(1, spec.k + 1)) and spec.k >= spec.ell + 1


def _det_by(method: str, spec: UniformMatrixSpec, jobs: int):
    if method == "oracle":
        return det_oracle(build_matrix(spec))
    if method == "expansion":
        return det_expansion(spec, jobs=jobs)
    return det_oracle(column_reduce(spec))


def cmd_det(args) -> tuple[str, int]:
    spec = _spec_from_args(args)
    if args.method == "all":
        methods = [m for m in METHODS if m != "reduction" or _reduction_applicable(spec)]
    else:
        if args.method == "reduction" and not _reduction_applicable(spec):
            raise InputError("method 'reduction' needs r = (1, ..., k) and k >= ell + 1")
        methods = [args.method]
    results = [(m, _det_by(m, spec, args.jobs)) for m in methods]
    code = 0
    if len({d for _, d in results}) > 1:
        print(
            "cross-check failed: " + ", ".join(f"{m}={format_scalar(d)}" for m, d in results),
            file=sys.stderr,
        )
        code = EXIT_MISMATCH
    if args.format == "json":
        docs = [{"det": scalar_to_json(d), "method": m} for m, d in results]
        return _dump_json(docs[0] if args.method != "all" else docs), code
    return _render_rows(args.format, ["method", "det"], [(m, format_scalar(d)) for m, d in results]), code


def cmd_check(args) -> tuple[str, int]:
    spec = _spec_from_args(args)
    verdict = classify_regularity(spec)
    code = 0
    if args.strict:
        code = 0 if verdict.regular else EXIT_SINGULAR
    doc = verdict.to_json()
    if args.format == "json":
        return _dump_json(doc), code
    witness = "" if verdict.witness is None else format_scalar(verdict.witness)
    return _render_rows(args.format, ["status", "witness", "method"], [(doc["status"], witness, doc["method"])]), code


def _partition(text: str, k: int | None = None) -> Partition:
    """Parse ``--lambda``; trailing zeros are filled in up to length ``k``."""
    parts = _int_list(text)
    if k is not None:
        if len(parts) > k:
            raise InputError(f"partition {text!r} has more than k={k} parts")
        parts += [0] * (k - len(parts))
    try:
        return Partition(tuple(parts))
    except ValueError as exc:
        raise InputError(f"malformed partition: {exc}") from None


def _value_out(fmt: str, value) -> str:
    if fmt == "json":
        return _dump_json({"value": value if isinstance(value, int) else scalar_to_json(value)})
    return (str(value) if isinstance(value, int) else format_scalar(value)) + "\n"


def cmd_schur(args) -> tuple[str, int]:
    if args.expand:
        lam = _partition(args.lambda_, args.k)
        poly = schur_expand(lam, len(lam))
        if args.format == "json":
            return _dump_json(poly.to_json()), 0
        rows = [(" ".join(map(str, e)), format_scalar(c)) for e, c in poly.sorted_terms()]
        return _render_rows(args.format, ["exp", "coeff"], rows), 0
    if args.points is None:
        raise InputError("schur needs --points or --expand")
    points = _scalars(args.points)
    if args.k is not None and args.k != len(points):
        raise InputError(f"--k is {args.k} but {len(points)} points were given")
    lam = _partition(args.lambda_, len(points))
    return _value_out(args.format, schur_eval(lam, points)), 0


def cmd_vandermonde(args) -> tuple[str, int]:
    points = _scalars(args.points)
    if args.alpha is None:
        return _value_out(args.format, vandermonde(points)), 0
    alpha = _int_list(args.alpha)
    if len(alpha) != len(points):
        raise InputError(f"{len(points)} points but alpha has length {len(alpha)}")
    try:
        value = generalized_vandermonde(points, alpha)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return _value_out(args.format, value), 0


def cmd_gamma(args) -> tuple[str, int]:
    mu = _int_list(args.mu)
    k = args.k if args.k is not None else len(mu)
    if len(mu) != k:
        raise InputError(f"--mu must have length k={k}")
    lam = _partition(args.lambda_, k)
    try:
        return _value_out(args.format, gamma_coefficient(lam, mu, k)), 0
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_finite_diff(args) -> tuple[str, int]:
    coeffs = _scalars(args.coeffs)
    try:
        total = finite_diff_sum(args.ell, coeffs)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    leading = finite_diff_leading(args.ell, coeffs)
    code = 0
    if total != leading:
        print(f"cross-check failed: sum={format_scalar(total)} leading={format_scalar(leading)}", file=sys.stderr)
        code = EXIT_MISMATCH
    if args.format == "json":
        return _dump_json({"sum": scalar_to_json(total), "leading": scalar_to_json(leading)}), code
    return _render_rows(args.format, ["sum", "leading"], [(format_scalar(total), format_scalar(leading))]), code


def bench_spec(seed: int, k: int, ell: int) -> UniformMatrixSpec:
    return random_spec(rng_for(seed, "bench", k, ell), k, ell)


def bench_grid(suite: str, max_k: int, max_ell: int) -> list[tuple[int, int]]:
    pairs = [(k, ell) for ell in range(max_ell + 1) for k in range(1, max_k + 1)]
    if suite == "expansion":
        pairs = [(k, ell) for k, ell in pairs if k <= ell + 1]
    return pairs


def cmd_bench(args) -> tuple[str, int]:
    if args.max_k < 1 or args.max_ell < 1:
        raise InputError("--max-k and --max-ell must be >= 1")
    rows = []
    for k, ell in bench_grid(args.suite, args.max_k, args.max_ell):
        spec = bench_spec(args.seed, k, ell)
        start = time.perf_counter()
        if args.suite == "expansion":
            det_expansion(spec, jobs=args.jobs)
        else:
            det_oracle(build_matrix(spec))
        elapsed = time.perf_counter() - start
        rows.append((args.suite, k, ell, binomial(ell + 1, k), f"{elapsed:.6f}"))
    return _csv([("suite", "k", "ell", "terms", "seconds"), *rows]), 0


# ---------------------------------------------------------------------------
# parser


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("json", "csv", "table"), default=default)
    p.add_argument("--input", metavar="FILE", default=default, help="spec JSON file, '-' for stdin")
    p.add_argument("--jobs", type=int, metavar="N", default=default)


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--x", help="comma separated scalars")
    p.add_argument("--y", help="comma separated scalars")
    p.add_argument("--r", help="comma separated scalars")
    p.add_argument("--constant-gap", action="store_true", help="use the consecutive-powers spec")
    p.add_argument("--N", type=int, help="starting integer for --constant-gap")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uniformdet", description="Exact determinants and regularity of (x_i + r_j y_i)^ell matrices."
    )
    _add_globals(parser, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_globals(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = command("build", cmd_build, "print the matrix A")
    _add_spec_flags(p)

    p = command("det", cmd_det, "determinant of A")
    _add_spec_flags(p)
    p.add_argument("--method", choices=(*METHODS, "all"), default="oracle")

    p = command("check", cmd_check, "regularity verdict")
    _add_spec_flags(p)
    p.add_argument("--strict", action="store_true", help="exit 0 if regular, 1 if singular")

    p = command("schur", cmd_schur, "evaluate or expand a Schur polynomial")
    p.add_argument("--lambda", dest="lambda_", required=True, metavar="PARTS")
    p.add_argument("--points")
    p.add_argument("--expand", action="store_true")
    p.add_argument("--k", type=int)

    p = command("vandermonde", cmd_vandermonde, "(generalized) Vandermonde determinant")
    p.add_argument("--points", required=True)
    p.add_argument("--alpha")

    p = command("gamma", cmd_gamma, "number of SSYT of shape lambda and content mu")
    p.add_argument("--lambda", dest="lambda_", required=True, metavar="PARTS")
    p.add_argument("--mu", required=True)
    p.add_argument("--k", type=int)

    p = command("finite-diff", cmd_finite_diff, "alternating binomial sum of a polynomial")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--coeffs", required=True, help="a0,a1,... (constant term first)")

    p = command("bench", cmd_bench, "timing table (CSV)")
    p.add_argument("--suite", choices=("expansion", "oracle"), default="expansion")
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--max-ell", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", None) or "json"
    args.input = getattr(args, "input", None)
    args.jobs = getattr(args, "jobs", None) or 1
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        out, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
