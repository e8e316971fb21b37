"""Command-line interface.

Subcommands: info, partition, mult, altset, diagram, verify.
Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction as Q
from typing import List, Optional, Sequence, Tuple

from . import geometry, kostant, render, rootsys, weightlat
from .conditions import alt_set_closed
from .multiplicity import alt_set_oracle
from .multiplicity import multiplicity as compute_multiplicity

_ALG_CHOICES = tuple(a.lower() for a in rootsys.ALGEBRAS)

# Default command-line basis per algebra (the theorems' own conventions).
_DEFAULT_BASIS = {"A2": "root", "B2": "fund", "C2": "fund", "D2": "fund", "G2": "root"}

# mu divisibility hypotheses used by the verify sweeps.
_MU_DIV = {"A2": (1, 1), "B2": (1, 2), "C2": (2, 1), "D2": (2, 2), "G2": (1, 1)}


def _parse_pair(text: str) -> Tuple[Q, Q]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-joined numbers, got {text!r}")
    try:
        return (Q(parts[0]), Q(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _as_root(alg: str, coords: Tuple[Q, Q], basis: str) -> rootsys.Weight:
    return coords if basis == "root" else weightlat.to_root_basis(alg, coords)


def _paper_coords(alg: str, lam_root: rootsys.Weight, mu_root: rootsys.Weight):
    """Coordinates in the convention the condition tables use."""
    if alg == "G2":
        return lam_root, mu_root
    if alg == "A2":
        return weightlat.to_fund_basis(alg, lam_root), mu_root
    return weightlat.to_fund_basis(alg, lam_root), weightlat.to_fund_basis(alg, mu_root)


def _fmt_weight(v: rootsys.Weight) -> str:
    return f"{v[0]} a1 + {v[1]} a2"


def cmd_info(args) -> int:
    alg = args.algebra
    group = rootsys.weyl_group(alg)
    print(f"algebra: {alg}")
    print("positive roots:")
    for r in rootsys.positive_roots(alg):
        print(f"  {_fmt_weight(r)}")
    w1, w2 = rootsys.fundamental_weights(alg)
    print(f"w1 = {_fmt_weight(w1)}")
    print(f"w2 = {_fmt_weight(w2)}")
    print(f"rho = {_fmt_weight(rootsys.rho(alg))}")
    print(f"Weyl group ({len(group)} elements):")
    a1, a2 = rootsys.simple_roots(alg)
    for el in group:
        img1 = rootsys.apply_element(el, a1)
        img2 = rootsys.apply_element(el, a2)
        print(
            f"  {el.name():<14} len={el.length}  "
            f"a1 -> {_fmt_weight(img1)};  a2 -> {_fmt_weight(img2)}"
        )
    return 0


def cmd_partition(args) -> int:
    print(kostant.partition(args.algebra, (Q(args.a1), Q(args.a2))))
    return 0


def cmd_mult(args) -> int:
    alg = args.algebra
    basis = args.basis or _DEFAULT_BASIS[alg]
    lam = _as_root(alg, args.lam, basis)
    mu = _as_root(alg, args.mu, basis)
    value = compute_multiplicity(alg, lam, mu)
    s = alt_set_oracle(alg, lam, mu)
    print(f"multiplicity: {value}")
    print(f"alternation set: {s.describe(identity='e')}")
    return 0


def cmd_altset(args) -> int:
    alg = args.algebra
    basis = args.basis or _DEFAULT_BASIS[alg]
    lam = _as_root(alg, args.lam, basis)
    mu = _as_root(alg, args.mu, basis)
    lam_p, mu_p = _paper_coords(alg, lam, mu)
    closed = alt_set_closed(alg, lam_p, mu_p)
    oracle = alt_set_oracle(alg, lam, mu)
    print(f"closed: {closed.describe(identity='e')}")
    print(f"oracle: {oracle.describe(identity='e')}")
    if closed.indices != oracle.indices:
        print("MISMATCH", file=sys.stderr)
        return 1
    return 0


def cmd_diagram(args) -> int:
    alg = args.algebra
    basis = args.basis or _DEFAULT_BASIS[alg]
    mu_root = _as_root(alg, args.mu, basis)
    # Grids carry mu in the condition-table convention.
    if alg in ("A2", "G2"):
        mu_paper = mu_root
    else:
        mu_paper = weightlat.to_fund_basis(alg, mu_root)
    grid = geometry.diagram(alg, mu_paper, args.window)
    if args.classify:
        print(geometry.classify_shape(alg, mu_paper))
    if args.fmt == "svg":
        data = render.emit_svg(grid)
    elif args.fmt == "csv":
        data = render.emit_csv(grid)
    else:
        data = render.emit_tikz(grid)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(f"wrote {args.out} ({len(data)} bytes)")
    else:
        sys.stdout.buffer.write(data)
    return 0


def _verify_column(
    alg: str, c1: int, w: int, mus: Sequence[Tuple[int, int]]
) -> Tuple[int, int, List[str]]:
    points = 0
    mismatches = 0
    bad: List[str] = []
    for c2 in range(-w, w + 1):
        lam_paper = (Q(c1), Q(c2))
        lam_root = (
            lam_paper if alg == "G2" else weightlat.to_root_basis(alg, lam_paper)
        )
        for (n, m) in mus:
            mu_paper = (Q(n), Q(m))
            mu_root = (
                mu_paper
                if alg in ("A2", "G2")
                else weightlat.to_root_basis(alg, mu_paper)
            )
            closed = alt_set_closed(alg, lam_paper, mu_paper)
            oracle = alt_set_oracle(alg, lam_root, mu_root)
            points += 1
            if closed.indices != oracle.indices:
                mismatches += 1
                bad.append(
                    f"lambda=({c1},{c2}) mu=({n},{m}): "
                    f"closed={closed.describe()} oracle={oracle.describe()}"
                )
    return points, mismatches, bad


def cmd_verify(args) -> int:
    alg = args.algebra
    w = args.lambda_window
    dn, dm = _MU_DIV[alg]
    mus = [
        (n, m)
        for n in range(0, args.mu_max + 1)
        for m in range(0, args.mu_max + 1)
        if n % dn == 0 and m % dm == 0
    ]
    columns = list(range(-w, w + 1)) if w > 0 else []
    results = []
    if args.jobs > 1 and columns:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [
                pool.submit(_verify_column, alg, c1, w, mus) for c1 in columns
            ]
            results = [f.result() for f in futures]
    else:
        results = [_verify_column(alg, c1, w, mus) for c1 in columns]
    points = sum(r[0] for r in results)
    mismatches = sum(r[1] for r in results)
    if args.verbose:
        for r in results:
            for line in r[2]:
                print(line)
    print(f"{mismatches} mismatches / {points} points")
    return 0 if mismatches == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylalt",
        description="Weyl alternation sets and Kostant weight multiplicities "
        "for rank-2 simple Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def alg_arg(p):
        p.add_argument("algebra", choices=_ALG_CHOICES, type=str.lower)

    p = sub.add_parser("info", help="print root-system and Weyl group data")
    alg_arg(p)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("partition", help="Kostant partition function value")
    alg_arg(p)
    p.add_argument("a1", type=int)
    p.add_argument("a2", type=int)
    p.set_defaults(fn=cmd_partition)

    for name, fn, text in (
        ("mult", cmd_mult, "weight multiplicity and its alternation set"),
        ("altset", cmd_altset, "Weyl alternation set (closed form vs oracle)"),
    ):
        p = sub.add_parser(name, help=text)
        alg_arg(p)
        p.add_argument("--lambda", dest="lam", type=_parse_pair, required=True)
        p.add_argument("--mu", type=_parse_pair, required=True)
        p.add_argument("--basis", choices=("fund", "root"), default=None)
        p.set_defaults(fn=fn)

    p = sub.add_parser("diagram", help="emit an alternation diagram")
    alg_arg(p)
    p.add_argument("--mu", type=_parse_pair, required=True)
    p.add_argument("--basis", choices=("fund", "root"), default=None)
    p.add_argument("--window", type=int, default=12)
    p.add_argument("--format", dest="fmt", choices=("svg", "csv", "tikz"), default="svg")
    p.add_argument("--out", default=None)
    p.add_argument("--classify", action="store_true")
    p.set_defaults(fn=cmd_diagram)

    p = sub.add_parser("verify", help="closed-form vs oracle sweep")
    alg_arg(p)
    p.add_argument("--lambda-window", type=int, default=15,
                   help="half-width W of the lambda sweep [-W, W]^2; 0 sweeps nothing")
    p.add_argument("--mu-max", type=int, default=4)
    p.add_argument("--jobs", type=int, default=min(os.cpu_count() or 1, 8))
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    args.algebra = args.algebra.upper()
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
