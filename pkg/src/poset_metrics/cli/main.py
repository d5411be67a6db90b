"""
poset-metrics command line
Exit codes: 0 success, 1 property violated or counterexample found, 2 input error
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Optional, Sequence

from pydantic import BaseModel

from .. import __version__
from ..config import HarnessSettings, load_settings
from ..core.errors import InvalidParameterError, PosetError
from ..core.poset import Poset
from ..core.predicates import structural_report
from ..enumeration import PosetFilter, check_size, count_posets, enumerate_posets
from ..families import FamilySpec, generate
from ..metrics import (
    DistanceKind,
    KinshipMethod,
    chain_compatibility,
    compare_distances,
    distance,
    kinship,
    maximal_chains,
    triangle_violations,
)
from ..utils import configure_logging
from ..verify import PropositionId, VerifyReport, falsify_chain_compatibility, verify
from .posetfile import read_poset_file, render_poset, write_poset_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2

Handler = Callable[[argparse.Namespace, HarnessSettings], int]


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _emit_json(payload: Any) -> None:
    if isinstance(payload, BaseModel):
        print(payload.model_dump_json(indent=2))
    else:
        print(json.dumps(payload, indent=2))


def _poset_payload(poset: Poset) -> dict[str, Any]:
    return {"elements": list(poset.names), "covers": [list(pair) for pair in poset.cover_pairs]}


# Commands

def cmd_check(args: argparse.Namespace, settings: HarnessSettings) -> int:
    report = structural_report(read_poset_file(args.file))
    if args.json:
        _emit_json(report)
    else:
        for field, value in report.model_dump().items():
            print(f"{field}={_bool(value) if isinstance(value, bool) else value}")
    return EXIT_OK


def cmd_dist(args: argparse.Namespace, settings: HarnessSettings) -> int:
    poset = read_poset_file(args.file)
    kind = DistanceKind.parse(args.kind)
    value = distance(poset, kind, args.x, args.y)
    if args.json:
        _emit_json({"kind": kind.value, "x": args.x, "y": args.y, "distance": value})
    else:
        print(value)
    return EXIT_OK


def cmd_metric(args: argparse.Namespace, settings: HarnessSettings) -> int:
    poset = read_poset_file(args.file)
    kind = DistanceKind.parse(args.kind)
    violations = triangle_violations(poset, kind)
    if args.json:
        _emit_json({
            "kind": kind.value,
            "metric": not violations,
            "violations": [v.model_dump() for v in violations],
        })
    elif not violations:
        print(f"{kind.value} is a metric")
    else:
        print(f"{kind.value} is not a metric: {len(violations)} triangle violations")
        for v in violations:
            print(f"d({v.x}, {v.z}) = {v.lhs} > {v.rhs} = d({v.x}, {v.y}) + d({v.y}, {v.z})")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_chains(args: argparse.Namespace, settings: HarnessSettings) -> int:
    chains = maximal_chains(read_poset_file(args.file))
    if args.json:
        _emit_json({"chains": chains})
    else:
        for chain in chains:
            print(" < ".join(chain))
    return EXIT_OK


def cmd_compat(args: argparse.Namespace, settings: HarnessSettings) -> int:
    poset = read_poset_file(args.file)
    verdict = chain_compatibility(poset, DistanceKind.parse(args.kind))
    if args.json:
        _emit_json(verdict)
    elif verdict.compatible:
        print(f"{verdict.kind.value} is chain-compatible")
    else:
        chain = verdict.chain or []
        print(f"{verdict.kind.value} is not chain-compatible on {' < '.join(chain)}")
        print(
            f"d({chain[verdict.i]}, {chain[verdict.j]}) = {verdict.distance}"
            f" != {verdict.j - verdict.i}"
        )
    return EXIT_OK if verdict.compatible else EXIT_VIOLATION


def cmd_gen(args: argparse.Namespace, settings: HarnessSettings) -> int:
    spec = FamilySpec.parse(args.family)
    if args.seed is not None:
        if spec.family != "random":
            raise InvalidParameterError("--seed only applies to the random family")
        spec = FamilySpec(spec.family, spec.params, args.seed)
    poset = generate(spec)
    if args.output:
        write_poset_file(poset, args.output)
    elif args.json:
        _emit_json(_poset_payload(poset))
    else:
        sys.stdout.write(render_poset(poset))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, settings: HarnessSettings) -> int:
    check_size(args.n, settings.enumeration_cap)
    poset_filter = PosetFilter.parse(args.filter)
    jobs = settings.jobs if args.jobs is None else args.jobs
    if args.count_only:
        count = count_posets(args.n, poset_filter, jobs)
        if args.json:
            _emit_json({"n": args.n, "filter": str(poset_filter), "count": count})
        else:
            print(count)
        return EXIT_OK

    posets = enumerate_posets(args.n, poset_filter, jobs)
    if args.json:
        _emit_json([_poset_payload(poset) for poset in posets])
    else:
        for number, poset in enumerate(posets, start=1):
            sys.stdout.write(f"# poset {number}\n{render_poset(poset)}")
    return EXIT_OK


def render_report(report: VerifyReport) -> str:
    lines = [
        f"proposition: {report.proposition.value}",
        f"n_max: {report.n_max}",
        f"scanned: {report.scanned}",
        f"relevant: {report.relevant}",
        f"holds: {_bool(report.holds)}",
        f"violations: {report.violations}",
        "per size:",
    ]
    lines += [f"  n={t.n} scanned={t.scanned} relevant={t.relevant}" for t in report.per_size]
    if report.observations:
        lines.append("observations:")
        lines += [f"  {key}: {value}" for key, value in report.observations.items()]
    if report.notes:
        lines.append("notes:")
        lines += [f"  - {note}" for note in report.notes]
    lines.append(f"witnesses: {len(report.witnesses)}")
    for number, witness in enumerate(report.witnesses, start=1):
        covers = ", ".join(f"{a} < {b}" for a, b in witness.poset.covers) or "(no covers)"
        lines.append(f"  [{number}] {witness.check} code={witness.canonical_code}")
        lines.append(f"      elements: {' '.join(witness.poset.elements)}")
        lines.append(f"      covers: {covers}")
        lines.append(f"      detail: {json.dumps(witness.detail, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _max_witnesses(raw: Optional[str], settings: HarnessSettings) -> Optional[int]:
    if raw is None:
        return settings.max_witnesses
    if raw.lower() == "all":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameterError(f"--max-witnesses takes a number or 'all', got {raw!r}") from None
    if value < 1:
        raise InvalidParameterError("--max-witnesses must be at least 1")
    return value


def cmd_verify(args: argparse.Namespace, settings: HarnessSettings) -> int:
    report = verify(
        PropositionId.parse(args.prop),
        settings.default_max_n if args.max_n is None else args.max_n,
        jobs=settings.jobs if args.jobs is None else args.jobs,
        max_witnesses=_max_witnesses(args.max_witnesses, settings),
        cap=settings.enumeration_cap,
    )
    if args.json:
        _emit_json(report)
    else:
        sys.stdout.write(render_report(report))
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_kinship(args: argparse.Namespace, settings: HarnessSettings) -> int:
    poset = read_poset_file(args.file)
    method = KinshipMethod(args.method)
    result = kinship(poset, args.ego, args.alter)
    if args.json:
        _emit_json({**result.model_dump(), "method": method.value, "degree": result.degree(method)})
    else:
        print(result.degree(method))
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, settings: HarnessSettings) -> int:
    comparison = compare_distances(read_poset_file(args.file))
    if args.json:
        _emit_json(comparison)
        return EXIT_OK
    print("x y zigzag up_down chebyshev")
    for pair in comparison.pairs:
        chebyshev = "-" if pair.chebyshev is None else pair.chebyshev
        print(f"{pair.x} {pair.y} {pair.zigzag} {pair.up_down} {chebyshev}")
    print(f"zigzag_le_up_down={_bool(comparison.zigzag_le_up_down)}")
    print(f"zigzag_eq_up_down={_bool(comparison.zigzag_eq_up_down)}")
    print(f"chebyshev_le_up_down={_bool(comparison.chebyshev_le_up_down)}")
    print(f"chebyshev_le_zigzag={_bool(comparison.chebyshev_le_zigzag)}")
    print(f"chebyshev_undefined_pairs={comparison.chebyshev_undefined_pairs}")
    return EXIT_OK


def cmd_falsify(args: argparse.Namespace, settings: HarnessSettings) -> int:
    witness = falsify_chain_compatibility(read_poset_file(args.file))
    if args.json:
        _emit_json(witness if witness is not None else {"witness": None})
    elif witness is None:
        print("Jordan-Dedekind condition holds: no falsifying chains")
    else:
        detail = witness.detail
        print(f"interval [{detail['x']}, {detail['y']}]")
        print(f"short ({detail['short_size']}): {' < '.join(detail['short_chain'])}")
        print(f"long ({detail['long_size']}): {' < '.join(detail['long_chain'])}")
    return EXIT_OK if witness is None else EXIT_VIOLATION


# Parser

def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Machine-readable output")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")


def _kind(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--kind",
        required=True,
        help="zigzag, updown, downup or chebyshev",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poset-metrics",
        description="Distances and metrics on finite posets",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="Print the structural report of a poset file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dist", help="Distance between two elements")
    p.add_argument("file")
    _kind(p)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("metric", help="Triangle-inequality scan")
    p.add_argument("file")
    _kind(p)
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("chains", help="List the maximal chains")
    p.add_argument("file")
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("compat", help="Chain-compatibility verdict")
    p.add_argument("file")
    _kind(p)
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("gen", help="Generate a family member, e.g. grid:3x4 or random:8:0.3")
    p.add_argument("family")
    p.add_argument("-o", "--output", default=None, help="Write the poset file here")
    p.add_argument("--seed", type=int, default=None, help="Seed for the random family")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="All posets on n elements up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", default=None, help="Comma-separated predicates, '!' negates")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="Run the verification harness")
    p.add_argument("--prop", required=True, help="P1..P5, cheb-search or sm-equiv")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--max-witnesses", default=None, help="Number or 'all'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kinship", help="Degree of kinship in a child < parent tree file")
    p.add_argument("file")
    p.add_argument("--method", required=True, choices=[m.value for m in KinshipMethod])
    p.add_argument("ego")
    p.add_argument("alter")
    p.set_defaults(func=cmd_kinship)

    p = sub.add_parser("compare", help="Zigzag, up-down and Chebyshev side by side")
    p.add_argument("file")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("falsify", help="Two maximal chains of one interval with different sizes")
    p.add_argument("file")
    p.set_defaults(func=cmd_falsify)

    for subparser in sub.choices.values():
        _common(subparser)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
        configure_logging(args.log_level or settings.log_level)
        if getattr(args, "jobs", None) is not None and args.jobs < 1:
            raise InvalidParameterError("--jobs must be at least 1")
        handler: Handler = args.func
        return handler(args, settings)
    except (PosetError, OSError) as e:
        logger.debug(f"{args.cmd} failed: {e!r}")
        if args.json:
            _emit_json({"error": str(e)})
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
