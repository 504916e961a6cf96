"""Command-line interface: ``genus``, ``u-series`` and ``verify``.

Exit codes: 0 on success, 1 when a verification has a hard failure or a
computation raises, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .genera import (
    GenusConsistencyError,
    QuasiBasis,
    ahat_genus,
    basis_convert,
    fourier_basis_convert,
    l_genus,
    ramanujan_u,
    trace,
    witten_quasi,
)
from .partitions import PhiKind
from .report import convergence_csv
from .symfun import newton_girard_p_to_s
from .verify import SUITES, Config, run_suite

GENUS_TYPES = ("ahat", "l", "witten")
BASES = ("p", "s", "G", "E")
FORMATS = ("text", "latex", "json")


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {value}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a value >= 1")
    return value


def _pos_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _s_grid(text: str) -> tuple[float, ...]:
    grid = tuple(_pos_float(part) for part in text.split(",") if part.strip())
    if not grid:
        raise argparse.ArgumentTypeError("empty s-grid")
    if list(grid) != sorted(grid, reverse=True) or len(set(grid)) != len(grid):
        raise argparse.ArgumentTypeError("s-grid must be strictly decreasing")
    return grid


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasigenera", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("genus", help="genus coefficient in a chosen basis")
    g.add_argument("--type", dest="genus_type", choices=GENUS_TYPES, required=True)
    g.add_argument("--k", type=_nonneg_int, required=True)
    g.add_argument("--basis", choices=BASES, default="p")
    g.add_argument("--format", choices=FORMATS, default="text")

    u = sub.add_parser("u-series", help="q-expansion of Ramanujan's U_{2k}")
    u.add_argument("--k", type=_nonneg_int, required=True)
    u.add_argument("--order", type=_nonneg_int, default=10)
    u.add_argument("--format", choices=FORMATS, default="text")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--k-max", type=_nonneg_int, default=None,
                   help="largest k for the traces and ramanujan suites (default 10 and 8)")
    v.add_argument("--q-order", type=_nonneg_int, default=60)
    v.add_argument("--z-order", type=_nonneg_int, default=10)
    v.add_argument("--lattice-cutoff", type=_pos_int, default=300, help="cutoff M for the s-regularized sums")
    v.add_argument("--product-cutoff", type=_pos_int, default=400, help="cutoff M for the sigma products")
    v.add_argument("--s-grid", type=_s_grid, default=(1.0, 0.5, 0.25, 0.1), help="comma-separated, decreasing")
    v.add_argument("--tol", type=_pos_float, default=1e-6, help="tier-A tolerance")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--csv", metavar="PATH", help="write the convergence table here")
    return parser


def _genus_object(genus_type: str, k: int, basis: str):
    if genus_type == "witten":
        # Witten coefficients are q-series; E here means the expansion-preserving conversion
        g = witten_quasi(k)
        return g if basis == "G" else fourier_basis_convert(g)
    if basis == "p":
        return ahat_genus(k) if genus_type == "ahat" else l_genus(k)
    if basis == "s":
        return newton_girard_p_to_s(ahat_genus(k) if genus_type == "ahat" else l_genus(k))
    g = trace(PhiKind.AHAT if genus_type == "ahat" else PhiKind.L, k, QuasiBasis.G)
    return g if basis == "G" else basis_convert(g)


def cmd_genus(args: argparse.Namespace) -> str:
    obj = _genus_object(args.genus_type, args.k, args.basis)
    if args.format == "text":
        return obj.to_text()
    if args.format == "latex":
        return obj.to_latex()
    return json.dumps({"type": args.genus_type, "k": args.k, **obj.to_json()}, indent=2)


def cmd_u_series(args: argparse.Namespace) -> str:
    series = ramanujan_u(args.k, args.order)
    if args.format == "text":
        return series.to_text()
    if args.format == "latex":
        return series.to_latex()
    return json.dumps({"k": args.k, **series.to_json()}, indent=2)


def _verify_text(result) -> str:
    lines = [f"quasigenera {__version__}"]
    for rep in result.reports:
        lines.append(rep.summary())
        if not rep.passed:
            lines.extend(f"    {json.dumps(d, sort_keys=True)}" for d in rep.diff)
    counts = result.to_json()["counts"]
    lines.append(
        f"{result.suite}: {counts['passed']}/{counts['total']} passed, "
        f"{counts['hard_failures']} hard failures, {counts['warnings']} warnings"
    )
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    cfg = Config(
        q_order=args.q_order,
        z_order=args.z_order,
        lattice_cutoff=args.lattice_cutoff,
        product_cutoff=args.product_cutoff,
        s_grid=args.s_grid,
        tol_tight=args.tol,
        k_max=args.k_max,
    )
    result = run_suite(args.suite, cfg)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(convergence_csv(result.csv_rows))
    if args.format == "json":
        out = json.dumps(result.to_json(), indent=2)
    else:
        out = _verify_text(result)
    return out, 0 if result.ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "genus" and args.genus_type == "witten" and args.basis not in ("G", "E"):
        parser.error("the Witten genus is available only in the G and E bases")
    try:
        if args.command == "genus":
            out, code = cmd_genus(args), 0
        elif args.command == "u-series":
            out, code = cmd_u_series(args), 0
        else:
            out, code = cmd_verify(args)
    except (GenusConsistencyError, ValueError, OSError) as exc:
        # nothing has been written to stdout yet
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
