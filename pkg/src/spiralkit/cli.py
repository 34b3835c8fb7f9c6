"""Command-line front end.

Subcommands print a report on stdout and exit 0; ``verify`` exits 1 when a
check fails. Bad flags or malformed inputs go to stderr with exit status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .blocks import BlockTriple, ConstraintViolation, blocks_json, blocks_tsv, enumerate_blocks_sl, omega, psi
from .census import DimVector, OrbitPair, census_json, census_rows, census_tsv
from .cocharacter import RationalCocharacter
from .graded import GradedElement, GradedSpace
from .nilpotent import ChainType, chain_type_of, standard_representative
from .spiral import Spiral, canonical_spiral, spiral_report
from .symplectic import SymplecticDims, blocks_sp_json, blocks_sp_tsv, enumerate_blocks_sp
from .verify import SUITES, run_suite


class UsageError(ValueError):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def _load_json_arg(text: str) -> dict:
    """Inline JSON, or a path to a JSON file."""
    src = text if text.lstrip().startswith("{") else Path(text).read_text()
    try:
        return json.loads(src)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_census(args) -> str:
    dv = DimVector.parse(args.m, args.dims)
    if args.format == "json":
        return census_json(dv) + "\n"
    if args.format == "tsv":
        return census_tsv(dv)
    rows = census_rows(dv)
    lines = [f"m={dv.m} dims={','.join(map(str, dv.dims))}: {len(rows)} orbits, "
             f"{sum(r['pairs'] for r in rows)} pairs"]
    lines += [f"  {r['chain']:<24} d'={r['d_prime']}" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_blocks(args) -> str:
    dv = DimVector.parse(args.m, args.dims)
    if args.format == "json":
        return blocks_json(dv) + "\n"
    if args.format == "tsv":
        return blocks_tsv(dv)
    blocks = enumerate_blocks_sl(dv)
    lines = [f"m={dv.m} dims={','.join(map(str, dv.dims))}: {len(blocks)} blocks"]
    lines += [f"  d={b.d} f={list(b.f)} chi={b.chi}" for b in blocks]
    return "\n".join(lines) + "\n"


def cmd_blocks_sp(args) -> str:
    sd = SymplecticDims.parse(args.m, args.dims)
    if args.format == "json":
        return blocks_sp_json(sd, args.count) + "\n"
    if args.format == "tsv":
        return blocks_sp_tsv(sd, args.count)
    blocks = enumerate_blocks_sp(sd, args.count)
    lines = [f"m={sd.m} dims={','.join(map(str, sd.dims))}: {len(blocks)} blocks"]
    lines += [f"  a'={b.a_prime} a''={b.a_dprime}" for b in blocks]
    return "\n".join(lines) + "\n"


def cmd_psi(args) -> str:
    dv = DimVector.parse(args.m, args.dims)
    t = ChainType.parse(args.m, args.chain)
    if t.dims != dv.dims:
        raise UsageError(f"chain type {t.wire()} has dims {t.dims}, not {dv.dims}")
    b = psi(OrbitPair(t, args.char), dv)
    if args.format == "text":
        return f"d={b.d} f={list(b.f)} chi={b.chi}\n"
    if args.format == "tsv":
        return f"d\tf\tchi\n{b.d}\t{','.join(map(str, b.f))}\t{b.chi}\n"
    return _dump(b.to_json())


def cmd_omega(args) -> str:
    f = tuple(int(x) for x in args.f.split(",") if x.strip())
    b = BlockTriple(args.m, args.d, f, args.chi)
    dv = DimVector.parse(args.m, args.dims) if args.dims else None
    p = omega(b, dv)
    if args.format == "text":
        return f"orbit {p.orbit.wire()} char {p.char_exponent}\n"
    if args.format == "tsv":
        return f"chain\tchar\n{p.orbit.wire()}\t{p.char_exponent}\n"
    return _dump(p.to_json())


def _nilpotent_from_json(doc: dict) -> GradedElement:
    space = GradedSpace(int(doc["m"]), tuple(doc["dims"]))
    if "chain" in doc:
        chain = doc["chain"]
        t = (ChainType.parse(space.m, chain) if isinstance(chain, str)
             else ChainType.from_json(space.m, chain))
        return standard_representative(t, space)
    if "blocks" in doc:
        return GradedElement(space, 1, doc["blocks"])
    raise UsageError('nilpotent JSON needs "chain" or "blocks"')


def _spiral_text(doc: dict) -> str:
    lines = [f"epsilon={doc['epsilon']} window={doc['window']}"]
    if "chain" in doc:
        lines.insert(0, f"nilpotent of type {doc['chain']}")
    lines.append("weights: " + " | ".join(",".join(ws) for ws in doc["cocharacter"]["weights"]))
    lines.append("   N  dim_p  dim_u  dim_l")
    lines += [f"{r['N']:>4}  {r['dim_p']:>5}  {r['dim_u']:>5}  {r['dim_l']:>5}" for r in doc["table"]]
    lines.append("chains:")
    lines += ["  " + " -> ".join(f"({v[0]},{v[1]})" for v in ch) for ch in doc["quiver"]["chains"]]
    return "\n".join(lines) + "\n"


def cmd_spiral(args) -> str:
    if args.from_nilpotent:
        x = _nilpotent_from_json(_load_json_arg(args.from_nilpotent))
        s = canonical_spiral(x)
        if args.epsilon == -1:
            s = Spiral(s.mu, -1)
        extra = {"chain": chain_type_of(x).wire()}
    else:
        s = Spiral(RationalCocharacter.from_json(_load_json_arg(args.from_cochar)), args.epsilon)
        extra = {}
    doc = {**spiral_report(s), "cocharacter": s.mu.to_json(), **extra}
    if args.format == "text":
        return _spiral_text(doc)
    if args.format == "tsv":
        lines = ["N\tdim_p\tdim_u\tdim_l"]
        lines += [f"{r['N']}\t{r['dim_p']}\t{r['dim_u']}\t{r['dim_l']}" for r in doc["table"]]
        return "\n".join(lines) + "\n"
    return _dump(doc)


def cmd_verify(args) -> tuple[str, int]:
    outcomes = run_suite(args.suite, args.n_max, args.m_max, args.seed)
    ok = all(o.ok for o in outcomes)
    if args.format == "json":
        text = _dump({"suite": args.suite, "ok": ok,
                      "checks": [{"name": o.name, "ok": o.ok, "detail": o.detail} for o in outcomes]})
    elif args.format == "tsv":
        text = "check\tok\tdetail\n" + "".join(f"{o.name}\t{int(o.ok)}\t{o.detail}\n" for o in outcomes)
    else:
        text = "".join(o.line() + "\n" for o in outcomes)
    return text, 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spiralkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="text"):
        p.add_argument("--format", choices=("json", "tsv", "text"), default=default_format)
        return p

    p = common(sub.add_parser("census", help="graded nilpotent orbits and their component groups"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dims", required=True, help="comma list, one entry per label")

    p = common(sub.add_parser("blocks", help="SL blocks (d, f, chi)"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dims", required=True)

    p = common(sub.add_parser("blocks-sp", help="symplectic blocks (a', a'')"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dims", required=True, help="m/2 entries for labels 1/2, 3/2, ... or all m")
    p.add_argument("--count", choices=("weighted", "window"), default="weighted")

    p = common(sub.add_parser("psi", help="block of an orbit pair"), "json")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dims", required=True)
    p.add_argument("--chain", required=True, help='chain type as "head:len,head:len"')
    p.add_argument("--char", type=int, required=True, help="character exponent r")

    p = common(sub.add_parser("omega", help="primitive pair of a block"), "json")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f", required=True, help="comma list of head labels")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--dims", help="optional; checks the dimension count")

    p = common(sub.add_parser("spiral", help="spiral dimension table and chain quiver"), "json")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--from-nilpotent", metavar="JSON",
                     help='{"m":..,"dims":[..],"chain":"h:l,.."} or with "blocks"; inline or a file path')
    src.add_argument("--from-cochar", metavar="JSON", help='{"m":..,"dims":[..],"weights":[[..],..]}')
    p.add_argument("--epsilon", type=int, choices=(1, -1), default=1)

    p = common(sub.add_parser("verify", help="run a verification sweep"))
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {"census": cmd_census, "blocks": cmd_blocks, "blocks-sp": cmd_blocks_sp, "psi": cmd_psi,
            "omega": cmd_omega, "spiral": cmd_spiral, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except (UsageError, ConstraintViolation, ValueError, KeyError, OSError) as exc:
        print(f"spiralkit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
