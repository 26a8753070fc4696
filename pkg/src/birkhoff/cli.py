"""Command-line entry point.

    birkhoff ehrhart   --n 4 [--cry | --facet i,j | --zeros "i,j;i,j"]
    birkhoff volume    --n 5 --cry
    birkhoff count     --n 3 --t 2 [--method oracle]
    birkhoff mgf       --n 3 --format latex
    birkhoff integrate --n 3 --form form.json --power 2
    birkhoff verify    --n 3

Exit codes: 0 ok, 2 invalid input, 3 empty face, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .ehrhart import (
    count_lattice_points,
    expected_dimension,
    face_ehrhart,
    face_volume,
    generic_vector,
)
from .errors import BirkhoffError, EmptyFace, InvalidInput
from .exactmath import Polynomial, format_rational
from .integration import LinearForm, integrate_power
from .mgf import ZeroPattern, face_terms, terms_to_json
from .oracle import count_semimagic, oracle_ehrhart

SCHEMA = 1
COMMANDS = ("ehrhart", "volume", "count", "mgf", "integrate", "verify")


@dataclass
class RunConfig:
    command: str
    n: int
    zeros: ZeroPattern
    root: int = 1
    t: int | None = None
    power: int = 0
    form: LinearForm | None = None
    format: str = "json"
    threads: int = 1
    method: str = "formula"
    progress: bool = False


def parse_zeros(text: str) -> list[tuple[int, int]]:
    """``"1,1;2,3"`` -> [(1, 1), (2, 3)]."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise InvalidInput(f"bad zero position {chunk!r}; expected 'i,j'")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidInput(f"bad zero position {chunk!r}") from None
    return out


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True)
    face = common.add_mutually_exclusive_group()
    face.add_argument("--zeros", help='forbidden entries, 1-based, "i,j;i,j"')
    face.add_argument("--cry", action="store_true", help="Chan-Robbins-Yuen face")
    face.add_argument("--facet", help="single forbidden entry 'i,j'")
    common.add_argument("--root", type=int, default=1)
    common.add_argument("--format", choices=("json", "text", "latex"), default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--method", choices=("formula", "oracle"), default="formula")
    common.add_argument(
        "--progress",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="progress on stderr (default: when stderr is a terminal)",
    )

    parser = argparse.ArgumentParser(
        prog="birkhoff",
        description="Exact Ehrhart data of Birkhoff polytopes and their faces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ehrhart", parents=[common], help="Ehrhart polynomial")
    sub.add_parser("volume", parents=[common], help="normalized volume")
    p = sub.add_parser("count", parents=[common], help="lattice points of tP")
    p.add_argument("--t", type=int, required=True)
    sub.add_parser("mgf", parents=[common], help="generating-function terms")
    p = sub.add_parser("integrate", parents=[common], help="integral of <y,x>^p")
    p.add_argument("--power", type=int, default=0)
    p.add_argument("--form", required=True, help='JSON file {"n": int, "y": [[...]]}')
    sub.add_parser("verify", parents=[common], help="run the invariant suite")
    return parser


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    args = _build_parser().parse_args(argv)
    n = args.n
    if n < 2:
        raise InvalidInput(f"--n must be >= 2, got {n}")
    if args.cry:
        zeros = ZeroPattern.cry(n)
    elif args.facet:
        zeros = ZeroPattern(n, parse_zeros(args.facet)[:1])
        if len(parse_zeros(args.facet)) != 1:
            raise InvalidInput("--facet takes exactly one position")
    else:
        zeros = ZeroPattern(n, parse_zeros(args.zeros or ""))
    if not 1 <= args.root <= n:
        raise InvalidInput(f"--root must lie in [1, {n}]")
    if args.threads < 1:
        raise InvalidInput("--threads must be >= 1")
    form = None
    if args.command == "integrate":
        if args.power < 0:
            raise InvalidInput("--power must be nonnegative")
        try:
            with open(args.form) as fh:
                form = LinearForm.from_json(fh.read())
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise InvalidInput(f"cannot read linear form: {exc}") from exc
        if form.n != n:
            raise InvalidInput("linear form size does not match --n")
        if args.method == "oracle":
            raise InvalidInput("integrate has no oracle method")
    if args.command == "count" and args.t < 0:
        raise InvalidInput("--t must be nonnegative")
    if args.command == "mgf" and args.format == "latex" and n > 3:
        raise InvalidInput("LaTeX rendering is limited to n <= 3")
    progress = args.progress if args.progress is not None else sys.stderr.isatty()
    return RunConfig(
        command=args.command,
        n=n,
        zeros=zeros,
        root=args.root,
        t=getattr(args, "t", None),
        power=getattr(args, "power", 0),
        form=form,
        format=args.format,
        threads=args.threads,
        method=args.method,
        progress=progress,
    )


# --- rendering -------------------------------------------------------------


def _latex_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_polynomial(poly: Polynomial) -> str:
    parts = []
    for k, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{{{k}}}")
        coef = _latex_rational(c)
        if k and c == 1:
            coef = ""
        parts.append(f"{coef}{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def _latex_monomial(M) -> str:
    out = []
    for i, row in enumerate(M, start=1):
        for j, e in enumerate(row, start=1):
            if e == 1:
                out.append(f"z_{{{i},{j}}}")
            elif e:
                out.append(f"z_{{{i},{j}}}^{{{e}}}")
    return "".join(out) or "1"


def latex_terms(terms) -> str:
    lines = []
    for term in terms:
        vertex = "".join(f"z_{{{i},{s}}}^{{t}}" for i, s in enumerate(term.vertex, start=1))
        factors = " ".join(
            f"\\frac{{1}}{{1-{_latex_monomial(b)}}}" for b in term.rays
        )
        sign = "-" if term.sign < 0 else "+"
        lines.append(f"{sign} {vertex} {factors}")
    body = "\n".join(lines)
    if body.startswith("+ "):
        body = body[2:]
    return f"f(tB, z) = \n{body}"


# --- commands --------------------------------------------------------------


def _compute(cfg: RunConfig) -> tuple[dict, str, str]:
    """Returns (JSON payload fields, text rendering, latex rendering)."""
    n, pattern = cfg.n, cfg.zeros
    if pattern.is_empty_face():
        raise EmptyFace(f"zero pattern {pattern} leaves no permutation")
    fields: dict = {"dimension": None, "term_count": None}

    if cfg.command == "ehrhart":
        if cfg.method == "oracle":
            poly = oracle_ehrhart(n, pattern.zeros, expected_dimension(pattern))
            dim = poly.degree
        else:
            res = face_ehrhart(n, pattern, cfg.root, cfg.threads, progress=cfg.progress)
            poly, dim = res.polynomial, res.dimension
            fields["term_count"] = res.term_count
        lead = poly.coeffs[dim]
        fields["dimension"] = dim
        fields["result"] = {
            "coefficients": poly.to_strings(),
            "lead_coefficient": format_rational(lead),
            "normalized_volume": format_rational(factorial(dim) * lead),
        }
        text = (
            f"e(t) = {poly}\n"
            f"dimension = {dim}\n"
            f"leading coefficient = {format_rational(lead)}\n"
            f"normalized volume = {format_rational(factorial(dim) * lead)}"
        )
        return fields, text, latex_polynomial(poly)

    if cfg.command == "volume":
        if cfg.method == "oracle":
            poly = oracle_ehrhart(n, pattern.zeros, expected_dimension(pattern))
            dim = poly.degree
            vol = factorial(dim) * poly.leading_coefficient
        else:
            vol, dim, count = face_volume(
                n, pattern, cfg.root, cfg.threads, progress=cfg.progress
            )
            fields["term_count"] = count
        lead = vol / factorial(dim)
        fields["dimension"] = dim
        fields["result"] = {
            "normalized_volume": format_rational(vol),
            "lead_coefficient": format_rational(lead),
        }
        text = (
            f"normalized volume = {format_rational(vol)}\n"
            f"leading coefficient = {format_rational(lead)}\n"
            f"dimension = {dim}"
        )
        return fields, text, _latex_rational(vol)

    if cfg.command == "count":
        if cfg.method == "oracle":
            value = count_semimagic(n, cfg.t, pattern.zeros)
        else:
            terms = list(face_terms(n, cfg.root, pattern))
            fields["term_count"] = len(terms)
            fields["dimension"] = max(len(t.rays) for t in terms)
            value = count_lattice_points(terms, cfg.t, generic_vector(n))
        fields["t"] = cfg.t
        fields["result"] = value
        return fields, str(value), str(value)

    if cfg.command == "mgf":
        if cfg.method == "oracle":
            raise InvalidInput("mgf has no oracle method")
        terms = list(face_terms(n, cfg.root, pattern))
        fields["term_count"] = len(terms)
        fields["dimension"] = max(len(t.rays) for t in terms)
        fields["result"] = json.loads(terms_to_json(terms))
        text = "\n".join(
            f"{'+' if t.sign > 0 else '-'} vertex {list(t.vertex)} rays "
            + " ".join(str([x for r in b for x in r]) for b in t.rays)
            for t in terms
        )
        latex = latex_terms(terms) if n <= 3 else ""
        return fields, text, latex

    if cfg.command == "integrate":
        terms = list(face_terms(n, cfg.root, pattern))
        dim = max(len(t.rays) for t in terms)
        if any(len(t.rays) != dim for t in terms):
            raise InvalidInput("face term stream has mixed ray counts; cannot integrate")
        value = integrate_power(terms, dim, cfg.form, cfg.power)
        fields["term_count"] = len(terms)
        fields["dimension"] = dim
        fields["power"] = cfg.power
        fields["result"] = format_rational(value)
        return fields, format_rational(value), _latex_rational(value)

    raise InvalidInput(f"unknown command {cfg.command}")


def _verify(cfg: RunConfig) -> int:
    from .verify import run_checks

    results = []
    for name, ok, detail in run_checks(cfg.n):
        results.append({"check": name, "ok": ok, "detail": detail})
        if cfg.format != "json":
            print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}", flush=True)
    all_ok = all(r["ok"] for r in results)
    if cfg.format == "json":
        print(json.dumps({"schema": SCHEMA, "command": "verify", "n": cfg.n, "result": results, "ok": all_ok}))
    return 0 if all_ok else 1


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute ``cfg``; returns (exit code, serialized output)."""
    start = time.monotonic()
    fields, text, latex = _compute(cfg)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    if cfg.format == "text":
        return 0, text
    if cfg.format == "latex":
        return 0, latex
    payload = {
        "schema": SCHEMA,
        "command": cfg.command,
        "n": cfg.n,
        "root": cfg.root,
        "zero_pattern": [list(p) for p in cfg.zeros.sorted()],
        "method": cfg.method,
        **fields,
        "elapsed_ms": elapsed_ms,
    }
    return 0, json.dumps(payload)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = config_from_args(argv)
        if cfg.command == "verify":
            return _verify(cfg)
        code, out = run(cfg)
    except BirkhoffError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
