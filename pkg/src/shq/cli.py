"""Command line entry points.

Exit codes: 0 on success, 2 when the requested (m, n) falls in the
refused band, 3 on invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blowup import (
    obstruction_bundle_degree,
    pulled_back_constraint,
    universal_curve,
)
from .gw import subdiagonal_entry, tau_table
from .localization import localize_entry, sample_weights
from .novikov import FIELDS
from .pipeline import (
    UnsupportedRegimeError,
    build_r_matrix,
    compute_sh,
    exact_rows,
    minimal_chern,
    result_to_dict,
    result_to_text,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits 2 by default; 2 is reserved for the refused band
        self.exit(3, f"{self.prog}: error: {message}\n")


def _add_field(p):
    p.add_argument("--field", choices=sorted(FIELDS), default="q",
                   help="coefficient field (default: q)")


def _add_mn(p):
    p.add_argument("--m", type=int, required=True, help="base dimension, P^m")
    p.add_argument("--n", type=int, required=True, help="twist, O(-n)")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="shq",
        description="Quantum and symplectic cohomology of O(-n) over P^m "
        "by exact linear algebra over the Novikov field.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="full pipeline for one (m, n)")
    _add_mn(p)
    _add_field(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the sampled localization cross-checks")

    p = sub.add_parser("rmatrix", help="the multiplication matrix alone")
    _add_mn(p)
    _add_field(p)

    p = sub.add_parser("tau", help="degree-one section-count coefficients")
    p.add_argument("--n", type=int, required=True)
    _add_field(p)

    p = sub.add_parser("localize", help="one matrix entry by fixed points")
    _add_mn(p)
    p.add_argument("--a", type=int, required=True, help="column index, 0..n-1")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("grr", help="obstruction bundle degree over the line")

    p = sub.add_parser("table", help="closed forms for every exact-mode pair")
    p.add_argument("--max-m", type=int, required=True, dest="max_m")
    _add_field(p)
    return parser


def _emit(payload) -> int:
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_compute(args) -> int:
    res = compute_sh(args.m, args.n, FIELDS[args.field], seed=args.seed)
    if args.format == "text":
        print(result_to_text(res))
        return 0
    return _emit(result_to_dict(res))


def _cmd_rmatrix(args) -> int:
    r = build_r_matrix(args.m, args.n, FIELDS[args.field])
    return _emit(
        {
            "m": args.m,
            "n": args.n,
            "field": FIELDS[args.field].kind,
            "N": minimal_chern(args.m, args.n),
            "size": r.size,
            "basis": r.basis,
            "entries": r.to_strings(),
            "unknown": [
                {"row": i + 1, "col": j + 1, "t_power": d}
                for (i, j, d) in sorted(r.unknown)
            ],
        }
    )


def _cmd_tau(args) -> int:
    if args.n < 1:
        raise ValueError("need n >= 1")
    field = FIELDS[args.field]
    table = tau_table(args.n)
    reduced = [int(bool(field.of(v))) if field.characteristic else v
               for v in table.coeffs]
    return _emit(
        {
            "n": args.n,
            "field": field.kind,
            "coefficients": reduced,
            "sum": sum(reduced),
        }
    )


def _cmd_localize(args) -> int:
    expected = subdiagonal_entry(args.m, args.n, args.a)
    samples = []
    for k in range(max(1, args.trials)):
        value = localize_entry(
            args.m, args.n, args.a, sample_weights(args.m, args.seed + k)
        )
        samples.append({"seed": args.seed + k, "value": int(value)})
    return _emit(
        {
            "m": args.m,
            "n": args.n,
            "a": args.a,
            "expected": expected,
            "samples": samples,
            "match": all(s["value"] == expected for s in samples),
        }
    )


def _cmd_grr(args) -> int:
    s = universal_curve()
    z = pulled_back_constraint()
    c1 = tuple(-k for k in s.canonical)
    return _emit(
        {
            "surface": "two-point blow-up of a product of two lines",
            "euler": s.euler,
            "k_squared": s.k_squared(),
            "c1_dot_z": s.intersect(c1, z),
            "z_squared": s.intersect(z, z),
            "chi_structure_sheaf": int(s.chi_structure_sheaf()),
            "chi_z": int(s.chi_sheaf(z)),
            "obstruction_degree": obstruction_bundle_degree(),
        }
    )


def _cmd_table(args) -> int:
    return _emit(exact_rows(args.max_m, FIELDS[args.field]))


_COMMANDS = {
    "compute": _cmd_compute,
    "rmatrix": _cmd_rmatrix,
    "tau": _cmd_tau,
    "localize": _cmd_localize,
    "grr": _cmd_grr,
    "table": _cmd_table,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UnsupportedRegimeError as e:
        print(f"shq: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"shq: invalid arguments: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
