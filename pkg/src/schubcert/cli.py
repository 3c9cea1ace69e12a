"""Command-line client over the service layer.

Exit codes follow one contract everywhere: 0 success (certificate verified /
all checks passed), 1 a negative mathematical outcome (criterion failed,
some check failed), 2 unsupported or invalid input.  Reports and
certificates are byte-identical across runs with identical arguments; wall
time goes to stderr only.
"""

import argparse
import json
import sys
from pathlib import Path

from .errors import (
    DivisibilityError,
    EnumerationBudgetError,
    UnsupportedOperationError,
)
from .service import (
    SUITES,
    compose_payload,
    decompose_payload,
    poincare_payload,
    run_suite,
)
from .tableaux import BUDGET_ENV_VAR


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2)


def _format_entry(entry: dict) -> str:
    parts = []
    for key, value in entry.items():
        if key == "coeff":
            continue
        if key.startswith("h"):
            parts.append(f"H^{value}")
        else:
            parts.append("w" + "(" + ",".join(str(p) for p in value) + ")")
    return f"{entry['coeff']} * " + " x ".join(parts)


def _certificate_text(payload: dict) -> str:
    lines = [
        f"decomposition certificate for n={payload['n']} d={payload['d']} r={payload['r']}",
        f"verdict: {payload['verdict']}",
    ]
    if payload["verdict"] == "verified":
        lines.append(f"sign case: {payload['sign_case']}")
        for name in ("alpha", "beta", "composition", "projector"):
            block = payload[name]
            lines.append(f"{name} (codim {block['codim']}):")
            lines.extend(f"  {_format_entry(t)}" for t in block["terms"])
    else:
        lines.append(f"obstruction scan: {payload['obstruction_scan']}")
    return "\n".join(lines)


def cmd_decompose(args: argparse.Namespace) -> int:
    try:
        payload = decompose_payload(args.n, args.d, args.r)
    except (UnsupportedOperationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _json_text(payload) if args.format == "json" else _certificate_text(payload)
    _emit(text, args.output)
    return 0 if payload["verdict"] == "verified" else 1


def _parse_primes(raw: str | None) -> tuple[int, ...] | None:
    if raw is None:
        return None
    try:
        return tuple(int(p) for p in raw.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {raw!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = run_suite(
            args.suite,
            max_d=args.max_d,
            max_m=args.max_m,
            max_n=args.max_n,
            primes=args.primes,
            enumerate_oracle=args.enumerate or None,
        )
    except (EnumerationBudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _json_text(report.to_dict()) if args.format == "json" else report.to_text()
    _emit(text, args.output)
    if report.wall_time_ms is not None:
        print(f"wall time: {report.wall_time_ms:.1f} ms", file=sys.stderr)
    return 0 if report.all_passed else 1


def cmd_compose(args: argparse.Namespace) -> int:
    try:
        left = json.loads(Path(args.left).read_text(encoding="utf-8"))
        right = json.loads(Path(args.right).read_text(encoding="utf-8"))
        payload = compose_payload(left, right)
    except (OSError, json.JSONDecodeError, KeyError, UnsupportedOperationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(_json_text(payload), args.output)
    return 0


def cmd_poincare(args: argparse.Namespace) -> int:
    try:
        payload = poincare_payload(args.n, args.d)
    except (DivisibilityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _emit(_json_text(payload), args.output)
    else:
        lines = [
            f"P(Gr_{args.d}({args.n}), t) = {payload['gaussian']}",
            f"P(P^{args.n - 1}, t)   = {payload['projective']}",
            f"coprime: {payload['coprime']}",
            f"quotient: {payload['quotient']}",
        ]
        _emit("\n".join(lines), args.output)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubcert",
        description=(
            "Exact Schubert-calculus certificates for motivic decompositions "
            "of Severi-Brauer varieties. Set "
            f"{BUDGET_ENV_VAR} to change the tableau enumeration budget."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="build and verify a decomposition certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--output", help="write to file instead of stdout")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-d", dest="max_d", type=int)
    p.add_argument("--max-m", dest="max_m", type=int)
    p.add_argument("--max-n", dest="max_n", type=int)
    p.add_argument("--primes", type=_parse_primes)
    p.add_argument(
        "--enumerate",
        action="store_true",
        help="add brute-force tableau enumeration cross-checks",
    )
    p.add_argument("--output")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compose", help="compose two serialized correspondences (left after right)")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--output")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("poincare", help="Poincare polynomials and divisibility")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--output")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
