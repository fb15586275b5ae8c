"""Command-line front end.

Every subcommand prints a short human-readable report, or with ``--json``
a single JSON object::

    {"command": ..., "inputs": {...}, "result": ..., "method": ..., "seed": ...}

Exit status is 0 on success, 1 when a computation fails or two methods
disagree, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Sequence

from . import cells, chern, gw, localization, schubert
from .algebra import SuperSeries

SEED_ENV = "ENUMERICA_SEED"


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: Any
    method: str | None = None
    seed: int | None = None
    ok: bool = True
    text: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "method": self.method,
            "seed": self.seed,
        }
        return json.dumps(payload, sort_keys=True)


def rational(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def series_json(s: SuperSeries) -> dict:
    return {"t_max": s.t_max, "q_max": s.q_max, "terms": s.to_records()}


# ---------------------------------------------------------------------------
# subcommands


def cmd_lines(args) -> OutputRecord:
    inputs = {"n": args.n, "method": args.method}
    result: dict[str, Any] = {}
    seed = None
    if args.method in ("schubert", "both"):
        result["schubert"] = schubert.lines_on_hypersurface(args.n)
    if args.method in ("localization", "both"):
        seed = args.seed
        inputs["trials"] = args.trials
        result["localization"] = localization.lines_via_localization(args.n, args.trials, seed)
    ok = True
    if args.method == "both":
        ok = result["schubert"] == result["localization"]
        result["agree"] = ok
    text = [f"lines on a degree {2 * args.n - 5} hypersurface in P^{args.n - 1}"]
    text += [f"  {k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in result.items()]
    return OutputRecord("lines", inputs, result, args.method, seed, ok, text)


def cmd_kontsevich(args) -> OutputRecord:
    inputs = {"dmax": args.dmax, "method": args.method}
    result: dict[str, Any] = {}
    if args.method in ("recursion", "both"):
        result["recursion"] = gw.kontsevich(args.dmax).as_list()
    if args.method in ("wdvv", "both"):
        result["wdvv"] = gw.recursion_from_wdvv(args.dmax).as_list()
    ok = True
    if args.method == "both":
        ok = result["recursion"] == result["wdvv"]
        result["agree"] = ok
    values = result.get("recursion") or result["wdvv"]
    text = [f"N_{d} = {v}" for d, v in enumerate(values, start=1)]
    if args.method == "both":
        text.append(f"agree: {str(ok).lower()}")
    return OutputRecord("kontsevich", inputs, result, args.method, None, ok, text)


def cmd_betti(args) -> OutputRecord:
    b = cells.betti(args.k, args.n)
    text = [f"Gr({args.k},{args.n}): " + " ".join(map(str, b))]
    return OutputRecord("betti", {"k": args.k, "n": args.n}, b, text=text)


def cmd_euler(args) -> OutputRecord:
    space = args.space.lower()
    inputs: dict[str, Any] = {"space": space}
    if space in ("p^n", "pn", "p"):
        need(args, "n")
        inputs["n"] = args.n
        target = localization.Space("P", n=args.n)
    elif space in ("gr", "grassmannian"):
        need(args, "k", "n")
        inputs.update(k=args.k, n=args.n)
        if not 1 <= args.k < args.n:
            raise ValueError(f"need 1 <= k < n, got Gr({args.k},{args.n})")
        target = localization.Space("Gr", n=args.n, k=args.k)
    elif space in ("flag", "fl"):
        need(args, "n")
        inputs["n"] = args.n
        target = localization.Space("Fl", n=args.n)
    elif space in ("torus", "t2", "t^2"):
        target = localization.Space("T2")
    elif space in ("sigma_g", "sigma", "surface"):
        need(args, "g")
        inputs["g"] = args.g
        chi = cells.euler_from_cells(cells.morse_cells_surface(args.g))
        return OutputRecord("euler", inputs, chi, "cells", text=[f"chi(Sigma_{args.g}) = {chi}"])
    else:
        raise UsageError(f"unknown space {args.space!r}")
    chi = localization.euler_char(target)
    return OutputRecord("euler", inputs, chi, "localization", text=[f"chi({target}) = {chi}"])


def cmd_cells(args) -> OutputRecord:
    if not 1 <= args.k < args.n:
        raise ValueError(f"need 1 <= k < n, got Gr({args.k},{args.n})")
    rows = [
        {"subset": list(I), "dimension": cells.cell_dimension(I, args.k)}
        for I in combinations(range(1, args.n + 1), args.k)
    ]
    text = [f"L_{{{','.join(map(str, r['subset']))}}}: {r['dimension']}" for r in rows]
    return OutputRecord("cells", {"k": args.k, "n": args.n}, rows, text=text)


def _space(args) -> gw.CohBasis:
    tag = args.space.lower()
    if tag in ("sigma_g", "sigmag", "sigma"):
        need(args, "g")
        return gw.surface(args.g)
    if tag in ("p1", "p^1"):
        return gw.P1
    if tag in ("p2", "p^2"):
        return gw.P2
    raise UsageError(f"unknown space {args.space!r}")


def _space_inputs(args, space: gw.CohBasis) -> dict:
    inputs = {"space": args.space.lower()}
    if space.genus:
        inputs["g"] = space.genus
    return inputs


def _basis_arg(space: gw.CohBasis, value: str) -> int:
    try:
        return space.index(int(value))
    except ValueError:
        return space.index(value)


def cmd_qh(args) -> OutputRecord:
    space = _space(args)
    i, j = _basis_arg(space, args.i), _basis_arg(space, args.j)
    inputs = _space_inputs(args, space)
    inputs.update(i=i, j=j, mode="big" if args.big else "small")
    head = f"T_{i} * T_{j} on {space.tag}"
    if not args.big:
        table = gw.small_quantum_product(space, i, j)
        result = {
            space.labels[l]: {str(q): rational(c) for q, c in entry.items()}
            for l, entry in enumerate(table)
            if entry
        }
        text = [head] + [
            f"  {label}: " + " + ".join(f"{c}*q^{q}" for q, c in entry.items())
            for label, entry in result.items()
        ]
        return OutputRecord("qh", inputs, result, "small", text=text)
    inputs.update(t_order=args.t_order, q_order=args.q_order)
    # three derivatives are taken, so the potential needs three more orders
    phi = gw.potential(space, args.t_order + 3, args.q_order)
    coeffs = gw.big_product_basis(space, i, j, phi)
    result = {space.labels[l]: series_json(c) for l, c in enumerate(coeffs) if not c.is_zero()}
    text = [head] + [f"  {space.labels[l]}: {c}" for l, c in enumerate(coeffs) if not c.is_zero()]
    return OutputRecord("qh", inputs, result, "big", text=text)


def cmd_potential(args) -> OutputRecord:
    space = _space(args)
    inputs = _space_inputs(args, space)
    inputs.update(t_order=args.t_order, q_order=args.q_order)
    phi = gw.potential(space, args.t_order, args.q_order)
    return OutputRecord("potential", inputs, series_json(phi), text=[str(phi)])


def cmd_wdvv(args) -> OutputRecord:
    space = _space(args)
    try:
        idx = tuple(int(x) for x in args.indices.split(","))
    except ValueError:
        raise UsageError(f"--indices expects four integers, got {args.indices!r}") from None
    if len(idx) != 4:
        raise UsageError(f"--indices expects four integers, got {args.indices!r}")
    inputs = _space_inputs(args, space)
    inputs.update(q_order=args.q_order, t_order=args.t_order, indices=list(idx))
    phi = gw.potential(space, args.t_order, args.q_order)
    residual = gw.wdvv_residual(space, phi, idx)
    ok = residual.is_zero()
    result = {"zero": ok, "residual": series_json(residual)}
    text = [f"WDVV residual at {idx} on {space.tag}: " + ("0" if ok else str(residual))]
    return OutputRecord("wdvv", inputs, result, "wdvv", ok=ok, text=text)


def cmd_chern(args) -> OutputRecord:
    if (args.sym is None) == (args.hypersurface is None):
        raise UsageError("chern needs exactly one of --sym or --hypersurface")
    if args.sym is not None:
        if args.i is None:
            raise UsageError("--sym needs --i")
        poly = chern.sym_chern(args.sym, args.i)
        terms = [[a, b, c] for (a, b), c in sorted(poly.terms.items(), reverse=True)]
        result = {"polynomial": str(poly), "terms": terms}
        return OutputRecord(
            "chern", {"sym": args.sym, "i": args.i}, result,
            text=[f"c_{args.i}(Sym^{args.sym} E) = {poly}"],
        )
    try:
        r, d = (int(x) for x in args.hypersurface.split(","))
    except ValueError:
        raise UsageError(f"--hypersurface expects r,d, got {args.hypersurface!r}") from None
    c = chern.hypersurface_tangent_chern(r, d)
    return OutputRecord(
        "chern", {"hypersurface": [r, d]}, list(c),
        text=[f"c(TX) for a degree {d} hypersurface in P^{r}: {c}"],
    )


def need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} needs {' '.join(missing)}")


# ---------------------------------------------------------------------------
# parser


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser(seed: int = 0) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    parser = argparse.ArgumentParser(prog="enumerica", description="Exact enumerative geometry computations.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lines", parents=[common], help="lines on a degree 2n-5 hypersurface")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["schubert", "localization", "both"], default="both")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("kontsevich", parents=[common], help="rational plane curve counts N_d")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--method", choices=["recursion", "wdvv", "both"], default="recursion")
    p.set_defaults(func=cmd_kontsevich)

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of Gr(k,n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic")
    p.add_argument("--space", required=True, help="p^n | gr | flag | torus | sigma_g")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--g", type=int)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("cells", parents=[common], help="Schubert cell dimensions of Gr(k,n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("qh", parents=[common], help="quantum product T_i * T_j")
    p.add_argument("--space", required=True, help="p1 | p2 | sigma_g")
    p.add_argument("--g", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--big", action="store_true")
    mode.add_argument("--small", dest="big", action="store_false")
    p.add_argument("--i", required=True, help="basis index or label")
    p.add_argument("--j", required=True, help="basis index or label")
    p.add_argument("--t-order", type=int, default=4)
    p.add_argument("--q-order", type=int, default=2)
    p.set_defaults(func=cmd_qh)

    p = sub.add_parser("potential", parents=[common], help="truncated genus-0 potential")
    p.add_argument("--space", required=True, help="p1 | p2 | sigma_g")
    p.add_argument("--g", type=int)
    p.add_argument("--t-order", type=int, default=4)
    p.add_argument("--q-order", type=int, default=2)
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("wdvv", parents=[common], help="WDVV residual of the potential")
    p.add_argument("--space", default="p2", help="p1 | p2 | sigma_g")
    p.add_argument("--g", type=int)
    p.add_argument("--q-order", type=int, default=4)
    p.add_argument("--t-order", type=int, default=14)
    p.add_argument("--indices", default="1,1,2,2")
    p.set_defaults(func=cmd_wdvv)

    p = sub.add_parser("chern", parents=[common], help="Chern classes")
    p.add_argument("--sym", type=int, help="d for Sym^d of a rank-2 bundle")
    p.add_argument("--i", type=int)
    p.add_argument("--hypersurface", help="r,d")
    p.set_defaults(func=cmd_chern)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        parser = build_parser(default_seed())
    except UsageError as exc:
        print(f"enumerica: error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"enumerica: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"enumerica: {args.command} failed: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(record.to_json())
    else:
        print("\n".join(record.text))
    return 0 if record.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
