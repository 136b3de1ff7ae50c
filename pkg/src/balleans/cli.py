"""Command-line surface: distances, balls, components, saturation, profiles,
exp-ball enumeration, the mu set metric, and the verification suites.

All results go to stdout as JSON; human diagnostics go to stderr. Exit code 0
on success, 1 on a domain error (or a verification suite with violations),
2 on a usage error. Exact integers are authoritative in output; logarithms are
display-only, with the base taken from --base or the BALLEAN_LOG_BASE
environment variable (default: natural log).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional, Sequence, Union

from .ballean import FiniteSubset, exp_ball_enumerate_centered_identity, mu_report
from .groups import (
    FAGSubgroup,
    FiniteAbelianGroup,
    GroupDescriptor,
    PruferSubgroup,
    asdim_classify,
    component_census,
    fag_log_distance,
    iso_points_classify,
    prufer_log_distance,
)
from .lattices import (
    ExtNat,
    Lattice,
    lattice_from_generators,
    log_subgroup_distance,
    saturation,
)
from .suites import SUITES, run_all


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# group and subgroup grammar


GroupCtx = Union[int, FiniteAbelianGroup, tuple]  # int = ambient of Z^n


def parse_group(expr: str) -> GroupCtx:
    """Z | Z^n | Z(m1,m2,...) | Z(m1)xZ(m2)... | prufer@p"""
    s = expr.strip()
    if s == "Z":
        return 1
    if s.startswith("Z^"):
        n = _parse_int(s[2:], "rank")
        if n < 1:
            raise UsageError("rank must be >= 1")
        return n
    if s.startswith("prufer@"):
        return ("prufer", _parse_int(s[len("prufer@"):], "prime"))
    if s.startswith("Z("):
        orders = []
        for piece in s.split("x"):
            piece = piece.strip()
            if not (piece.startswith("Z(") and piece.endswith(")")):
                raise UsageError(f"cannot parse group {expr!r}")
            inner = piece[2:-1]
            orders.extend(_parse_int(tok, "order") for tok in inner.split(","))
        try:
            return FiniteAbelianGroup.from_orders(orders)
        except ValueError as e:
            raise UsageError(str(e)) from None
    raise UsageError(f"cannot parse group {expr!r}")


def parse_subgroup(expr: str, ctx: GroupCtx):
    """kZ | span[(a,b),...] | gen{e1,e2,...} | H_n@p | whole@p"""
    s = expr.strip()
    if isinstance(ctx, tuple) and ctx[0] == "prufer":
        p = ctx[1]
        if s == f"whole@{p}" or s == "whole":
            return PruferSubgroup(p, None)
        if s.startswith("H_"):
            body = s[2:]
            level_str, _, p_str = body.partition("@")
            level = _parse_int(level_str, "level")
            if p_str and _parse_int(p_str, "prime") != p:
                raise ValueError("subgroup prime differs from group context")
            return PruferSubgroup(p, level)
        raise UsageError(f"cannot parse subgroup {expr!r} in a divisible chain")
    if isinstance(ctx, int):
        if s.endswith("Z"):
            k = _parse_int(s[:-1] or "1", "multiplier")
            if ctx != 1:
                raise ValueError("kZ only makes sense with ambient rank 1")
            if k < 0:
                raise UsageError("multiplier must be >= 0")
            return lattice_from_generators(1, [[k]] if k else [])
        if s.startswith("span[") and s.endswith("]"):
            rows = [_parse_vector(tok, ctx)
                    for tok in _split_top(s[len("span["):-1])]
            return lattice_from_generators(ctx, rows)
        raise UsageError(f"cannot parse subgroup {expr!r} in Z^{ctx}")
    if isinstance(ctx, FiniteAbelianGroup):
        if s.startswith("gen{") and s.endswith("}"):
            gens = [_parse_element(tok, ctx)
                    for tok in _split_top(s[len("gen{"):-1])]
            return FAGSubgroup.from_elements(ctx, gens)
        raise UsageError(f"cannot parse subgroup {expr!r} in a finite group")
    raise UsageError("unsupported group context")


def format_subgroup(sub, ctx: GroupCtx) -> str:
    """Canonical printing; output re-parses to the identical value."""
    if isinstance(sub, PruferSubgroup):
        return "whole" if sub.is_whole else f"H_{sub.level}@{sub.prime}"
    if isinstance(sub, Lattice):
        if sub.ambient == 1:
            return f"{sub.basis[0][0]}Z" if sub.rank else "0Z"
        rows = ",".join("(" + ",".join(map(str, r)) + ")" for r in sub.basis)
        return f"span[{rows}]"
    if isinstance(sub, FAGSubgroup):
        elems = sorted(sub.elements())
        body = ",".join("(" + ",".join(map(str, e)) + ")" if len(e) > 1
                        else str(e[0]) for e in elems)
        return f"gen{{{body}}}"
    raise ValueError("unknown subgroup kind")


def _split_top(s: str) -> list[str]:
    """Split on commas outside parentheses; empty input gives no pieces."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UsageError("unbalanced parentheses")
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise UsageError("unbalanced parentheses")
    tail = "".join(cur).strip()
    if tail:
        out.append(tail)
    return [p.strip() for p in out if p.strip()]


def _parse_int(tok: str, what: str) -> int:
    try:
        return int(tok.strip())
    except ValueError:
        raise UsageError(f"cannot parse {what}: {tok!r}") from None


def _parse_vector(tok: str, ambient: int) -> list[int]:
    t = tok.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise UsageError(f"expected a vector like (a,b): {tok!r}")
    coords = [_parse_int(c, "coordinate") for c in t[1:-1].split(",")]
    if len(coords) != ambient:
        raise ValueError("vector arity does not match the ambient rank")
    return coords


def _parse_element(tok: str, g: FiniteAbelianGroup):
    t = tok.strip()
    if t.startswith("(") and t.endswith(")"):
        return tuple(_parse_int(c, "coordinate") for c in t[1:-1].split(","))
    return _parse_int(t, "element")


# ---------------------------------------------------------------------------
# output helpers


def _log_base(args) -> float:
    base = getattr(args, "base", None)
    if base is None:
        env = os.environ.get("BALLEAN_LOG_BASE")
        base = float(env) if env else math.e
    if base <= 1:
        raise ValueError("log base must be > 1")
    return base


def _distance_json(mu: ExtNat, base: float) -> dict:
    # the exact field is authoritative; "inf" keeps the output valid JSON
    log = mu.log(base) if mu.is_finite else "inf"
    return {"mu": mu.to_json(), "log": log, "base": base}


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_dist(args) -> int:
    ctx = parse_group(args.group)
    if len(args.sub) != 2:
        raise UsageError("dist needs exactly two --sub arguments")
    a = parse_subgroup(args.sub[0], ctx)
    b = parse_subgroup(args.sub[1], ctx)
    if isinstance(ctx, tuple):
        mu = prufer_log_distance(a, b)
    elif isinstance(ctx, int):
        mu = log_subgroup_distance(a, b)
    else:
        mu = fag_log_distance(a, b)
    _emit(_distance_json(mu, _log_base(args)))
    return 0


def _cmd_ball(args) -> int:
    from .witnesses import lz_exp_ball, lz_log_ball, prufer_ball

    if args.family == "LZ-exp":
        if args.n is None or args.m is None:
            raise UsageError("LZ-exp needs --n and --m")
        ks = sorted(lz_exp_ball(args.n, args.m))
        _emit({"family": "LZ-exp", "n": args.n, "m": args.m,
               "members": [f"{k}Z" for k in ks]})
    elif args.family == "LZ-log":
        if args.n is None or args.K is None:
            raise UsageError("LZ-log needs --n and --K")
        ms = sorted(lz_log_ball(args.n, args.K))
        _emit({"family": "LZ-log", "n": args.n, "K": args.K,
               "members": [f"{m}Z" for m in ms]})
    elif args.family == "prufer":
        if args.p is None or args.n is None or args.K is None:
            raise UsageError("prufer needs --p, --n and --K")
        levels = sorted(prufer_ball(args.p, args.n, args.K))
        _emit({"family": "prufer", "p": args.p, "level": args.n, "K": args.K,
               "members": [f"H_{j}@{args.p}" for j in levels]})
    else:
        raise UsageError(f"unknown ball family {args.family!r}")
    return 0


def _cmd_component(args) -> int:
    if args.family == "Z^n":
        census = component_census("Z^n", n=args.n)
    elif args.family == "prufer":
        census = component_census("prufer", prime=args.p)
    elif args.family == "finite":
        census = component_census("finite_abelian")
    else:
        raise UsageError(f"unknown component family {args.family!r}")
    _emit(census.to_json())
    return 0


def _cmd_saturate(args) -> int:
    ctx = parse_group(args.group)
    if not isinstance(ctx, int):
        raise ValueError("saturation applies to subgroups of Z^n")
    sub = parse_subgroup(args.sub, ctx)
    sat = saturation(sub)
    _emit({"input": format_subgroup(sub, ctx),
           "saturation": format_subgroup(sat, ctx)})
    return 0


def _cmd_profile(args) -> int:
    with open(args.descriptor) as fh:
        d = GroupDescriptor.from_json(json.load(fh))
    iso = iso_points_classify(d)
    asdim = asdim_classify(d)
    _emit({"asdim": asdim.to_json(),
           "iso_points": {"size": str(iso.size), "witness": iso.witness}})
    return 0


def _cmd_exp_ball(args) -> int:
    ctx = parse_group(args.group)
    if not isinstance(ctx, FiniteAbelianGroup):
        raise ValueError("exp-ball enumeration needs a finite group context")
    radius = [_parse_element(tok, ctx) for tok in _split_top(args.radius)]
    radius = [ctx.normalize(r) for r in radius]
    balls = exp_ball_enumerate_centered_identity(ctx, radius)
    members = sorted(sorted(z) for z in balls)
    _emit({"group": args.group, "radius": args.radius,
           "members": [[list(e) for e in z] for z in members]})
    return 0


def _cmd_mu(args) -> int:
    ctx = parse_group(args.group)
    if not isinstance(ctx, FiniteAbelianGroup):
        raise ValueError("mu needs a finite group context")
    if len(args.set) != 2:
        raise UsageError("mu needs exactly two --set arguments")

    def parse_set(expr: str) -> FiniteSubset:
        s = expr.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise UsageError(f"expected a set like {{0,3}}: {expr!r}")
        elems = [_parse_element(tok, ctx) for tok in _split_top(s[1:-1])]
        return FiniteSubset.of(ctx, elems)

    y, z = parse_set(args.set[0]), parse_set(args.set[1])
    report = mu_report(y, z)
    base = _log_base(args)
    out = _distance_json(report.mu, base)
    out["single_set"] = report.single_set.to_json()
    _emit(out)
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        reports = run_all(seed=args.seed)
    else:
        fn = SUITES.get(args.suite)
        if fn is None:
            raise UsageError(f"unknown suite {args.suite!r}")
        kwargs = {}
        varnames = fn.__code__.co_varnames[:fn.__code__.co_argcount]
        if "seed" in varnames:
            kwargs["seed"] = args.seed
        if args.max_coord is not None and "max_coord" in varnames:
            kwargs["max_coord"] = args.max_coord
        reports = [fn(**kwargs)]
    _emit([r.to_json() for r in reports])
    return 0 if all(r.ok for r in reports) else 1


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balleans",
        description="Exact coarse geometry on subgroup lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distance between two subgroups")
    p.add_argument("--group", required=True)
    p.add_argument("--sub", action="append", default=[], required=True)
    p.add_argument("--base", type=float)
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("ball", help="enumerate a metric or exp ball")
    p.add_argument("--family", required=True,
                   choices=["LZ-exp", "LZ-log", "prufer"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--K", type=int)
    p.add_argument("--p", type=int)
    p.set_defaults(fn=_cmd_ball)

    p = sub.add_parser("component", help="connected-component census")
    p.add_argument("--family", required=True,
                   choices=["Z^n", "prufer", "finite"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.set_defaults(fn=_cmd_component)

    p = sub.add_parser("saturate", help="pure closure of a sublattice")
    p.add_argument("--group", required=True)
    p.add_argument("--sub", required=True)
    p.set_defaults(fn=_cmd_saturate)

    p = sub.add_parser("profile", help="classify a group descriptor file")
    p.add_argument("--descriptor", required=True)
    p.set_defaults(fn=_cmd_profile)

    p = sub.add_parser("exp-ball",
                       help="enumerate the identity-centred exp ball")
    p.add_argument("--group", required=True)
    p.add_argument("--radius", required=True)
    p.set_defaults(fn=_cmd_exp_ball)

    p = sub.add_parser("mu", help="exact covering distance between two sets")
    p.add_argument("--group", required=True)
    p.add_argument("--set", action="append", default=[], required=True)
    p.add_argument("--base", type=float)
    p.set_defaults(fn=_cmd_mu)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-coord", type=int, dest="max_coord")
    p.set_defaults(fn=_cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
