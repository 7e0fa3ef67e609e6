"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import re
import sys

from .errors import NilpiecesError
from .lietype import LieType
from .oracle import TrialPolicy, verify_section
from .orbits import (
    NilpotentOrbit,
    dual,
    is_even,
    is_special,
    orbit,
    parse_orbit,
    render_diagram,
    satisfies_hypotheses,
    special_piece,
    special_rep,
)
from .stable import arthur_count, stable_dimension
from .tableaux import (
    PRESET_NAMES,
    enumerate_tableaux,
    get_preset,
    orthogonal_split,
    symplectic_linear,
    symplectic_quaternionic,
)
from .verify import SUITES, run_suite
from .weyl import springer_trivial


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(args, pairs):
    """Key/value output: aligned in table mode, tab-separated in tsv mode."""
    if args.format == "tsv":
        return "".join(f"{k}\t{v}\n" for k, v in pairs)
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k + ':':<{width + 1}} {v}\n" for k, v in pairs)


def _orbit_arg(args) -> NilpotentOrbit:
    lt = LieType.parse(args.type)
    if (args.partition is None) == (args.label is None):
        raise NilpiecesError("give exactly one of --partition and --label")
    if args.label is not None:
        return orbit(lt, label=args.label)
    return orbit(lt, args.partition, tag=args.tag)


def _orbit_text(text: str, lt: LieType) -> NilpotentOrbit:
    """Full ``B2:3,1,1`` syntax, or a bare name read in type ``lt``."""
    head = text.split(":", 1)[0].strip()
    if ":" in text and re.fullmatch(r"[A-Ga-g]\d+", head):
        o = parse_orbit(text)
        if o.lie_type != lt:
            raise NilpiecesError(f"{o} is not an orbit of {lt}")
        return o
    return parse_orbit(f"{lt}:{text}")


def _pairs_for(name: str, rank):
    m = re.fullmatch(r"so\((\d+),(\d+)\)", name)
    if m:
        return [orthogonal_split(int(m.group(1)), int(m.group(2)))]
    m = re.fullmatch(r"sp\((\d+),R\)", name)
    if m and int(m.group(1)) % 2 == 0:
        return [symplectic_linear(int(m.group(1)) // 2)]
    m = re.fullmatch(r"sp\((\d+),(\d+)\)", name)
    if m:
        return [symplectic_quaternionic(int(m.group(1)), int(m.group(2)))]
    return list(get_preset(name, rank).pairs)


# --- handlers -----------------------------------------------------------------

def cmd_orbit(args) -> str:
    o = _orbit_arg(args)
    if args.action == "dual":
        return f"{dual(o)}\n"
    if args.action == "even":
        return f"{_yes(is_even(o))}\n"
    if args.action == "diagram":
        return f"{render_diagram(o)}\n"
    if args.action == "special-piece":
        if not is_special(o):
            raise NilpiecesError(f"{o} is not special; its special piece is headed by {special_rep(o)}")
        return "".join(f"{m}\n" for m in special_piece(o))
    pairs = [("orbit", str(o)), ("diagram", render_diagram(o)), ("even", _yes(is_even(o))),
             ("special", _yes(is_special(o)))]
    try:
        pairs.append(("dual", str(dual(o))))
        problem = satisfies_hypotheses(o)
        pairs.append(("hypotheses", problem or "satisfied"))
    except NilpiecesError as exc:
        pairs.append(("dual", f"unavailable ({exc})"))
    return _emit(args, pairs)


def cmd_tableaux(args) -> str:
    pairs = _pairs_for(args.pair, args.rank)
    o = _orbit_text(args.orbit, pairs[0].ambient)
    rows = []
    for pair in pairs:
        if pair.kind == "exceptional":
            raise NilpiecesError(f"{pair} has no tableaux; use stable-dim or arthur-count")
        rows += [(pair.name, str(t)) for t in enumerate_tableaux(pair, o)]
    if args.format == "tsv":
        return "".join(f"{o}\t{p}\t{t}\n" for p, t in rows) + f"# count\t{len(rows)}\n"
    width = max([len(p) for p, _ in rows] + [4])
    lines = [f"{p:<{width}}  {t}" for p, t in rows]
    return "\n".join(lines + [f"count: {len(rows)}"]) + "\n"


def cmd_stable_dim(args) -> str:
    ic = get_preset(args.preset, args.rank)
    report = stable_dimension(ic, _orbit_text(args.orbit, ic.dual))
    return report.to_tsv() if args.format == "tsv" else report.to_table()


def cmd_arthur_count(args) -> str:
    ic = get_preset(args.preset, args.rank)
    o = _orbit_text(args.orbit, ic.dual)
    n = arthur_count(ic, o)
    return f"{o}\t{n}\n" if args.format == "tsv" else f"{n}\n"


def cmd_springer(args) -> str:
    o = _orbit_arg(args)
    irrep = springer_trivial(o)
    return f"{o}\t{irrep}\n" if args.format == "tsv" else f"{irrep}\n"


def cmd_oracle(args) -> str:
    o = _orbit_arg(args)
    policy = TrialPolicy(seed=args.seed, trials=args.trials, bound=args.bound)
    section = verify_section(o.lie_type, o, policy)
    if args.format == "tsv":
        return "".join(f"{m}\t{w}\n" for m, w in section.items())
    width = max(len(str(m)) for m in section)
    return "".join(f"{str(m):<{width}}  {w}\n" for m, w in section.items())


def cmd_verify(args) -> tuple[str, int]:
    checks = run_suite(args.suite)
    if args.format == "tsv":
        text = "".join(f"{'pass' if c.ok else 'fail'}\t{c.name}\t{c.detail}\n" for c in checks)
    else:
        text = "".join(c.line() + "\n" for c in checks)
    return text, 0 if all(c.ok for c in checks) else 1


# --- parser -------------------------------------------------------------------

def _orbit_flags(p):
    p.add_argument("--type", required=True, help="Lie type, e.g. B2 or F4")
    p.add_argument("--partition", help="Jordan type, e.g. 3,1,1")
    p.add_argument("--label", help="Bala-Carter label (exceptional types)")
    p.add_argument("--tag", choices=("I", "II"), help="very even type D orbits")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    # subcommand copies suppress their default so a global --format survives
    fmt.add_argument("--format", choices=("table", "tsv"), default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="nilpieces",
        description="Nilpotent orbits, special pieces and stable dimension counts.")
    parser.add_argument("--format", choices=("table", "tsv"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", parents=[fmt], help="orbit invariants")
    p.add_argument("action", choices=("info", "dual", "even", "diagram", "special-piece"))
    _orbit_flags(p)
    p.set_defaults(handler=cmd_orbit)

    p = sub.add_parser("tableaux", parents=[fmt], help="signed tableaux for a pair or preset")
    p.add_argument("--pair", required=True, help="so(p,q), sp(p,q), sp(2n,R) or a preset name")
    p.add_argument("--orbit", required=True)
    p.add_argument("--rank", type=int)
    p.set_defaults(handler=cmd_tableaux)

    for name, handler, text in (("stable-dim", cmd_stable_dim, "stable basis report"),
                                ("arthur-count", cmd_arthur_count, "K-orbits on O ∩ s")):
        p = sub.add_parser(name, parents=[fmt], help=text)
        p.add_argument("--preset", required=True, help=", ".join(PRESET_NAMES))
        p.add_argument("--orbit", required=True)
        p.add_argument("--rank", type=int, help="rank for sp2n-split")
        p.set_defaults(handler=handler)

    p = sub.add_parser("springer", parents=[fmt], help="Springer irrep (trivial local system)")
    _orbit_flags(p)
    p.set_defaults(handler=cmd_springer)

    p = sub.add_parser("oracle", parents=[fmt], help="matrix check of the canonical section")
    p.add_argument("action", choices=("section",))
    _orbit_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--bound", type=int, default=100)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("verify", parents=[fmt], help="run a self-check suite")
    p.add_argument("--suite", required=True, choices=tuple(SUITES))
    p.set_defaults(handler=cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.handler(args)
    except NilpiecesError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    stdout.write(result)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
