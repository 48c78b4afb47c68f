import argparse
import inspect
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import orjson
from loguru import logger
from pydantic import BaseModel

from core.bounds.checks import theorem_consistency, theorem_grid
from core.bounds.formulas import BOUNDS
from core.carving.carve import carve, verify_decomposition
from core.carving.model import decomposition_from_json, decomposition_to_json
from core.carving.recursive import level_bound, recursive_color
from core.coloring.model import serialize_coloring
from core.coloring.solver import (
    ball_chromatic_profile,
    optimal_coloring,
    verify_coloring,
)
from core.config import get_settings
from core.errors import LocalChiError, LocalChromaticExceeded
from core.graphs import generators
from core.graphs.dimacs import read_dimacs, serialize_dimacs
from core.graphs.model import Graph
from core.oracle.search import f_oracle
from core.utils import format_rational
from models import (
    BoundResponse,
    ChiResponse,
    ColorResponse,
    LocalChiResponse,
    OracleResponse,
    TheoremResponse,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def configure_logging(level: str) -> None:
    # stdout carries results only.
    logger.remove()
    logger.add(sys.stderr, level=level.upper())


def emit_json(payload: BaseModel) -> None:
    print(
        orjson.dumps(
            payload.model_dump(mode="json"),
            option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS,
        ).decode("utf-8")
    )


def cmd_chi(args: argparse.Namespace) -> int:
    G = read_dimacs(args.file)
    coloring = optimal_coloring(G)
    if args.json:
        emit_json(
            ChiResponse(
                vertices=G.n,
                edges=G.num_edges,
                chi=coloring.k,
                coloring=list(coloring.colors),
            )
        )
    else:
        print(coloring.k)
    return EXIT_OK


def cmd_lchi(args: argparse.Namespace) -> int:
    G = read_dimacs(args.file)
    profile = ball_chromatic_profile(G, args.r, args.workers)
    value = max(profile, default=0)
    if args.json:
        emit_json(
            LocalChiResponse(
                r=args.r,
                vertices=G.n,
                value=value,
                profile=profile if args.profile else None,
            )
        )
    else:
        print(value)
        if args.profile:
            print(" ".join(str(x) for x in profile))
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    G = read_dimacs(args.file)
    D = carve(G, args.r)
    logger.info(
        f"Decomposition: {len(D.parts)} parts, separator of {len(D.separator)} vertices"
    )
    print(decomposition_to_json(D))
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    G = read_dimacs(args.file)
    report = recursive_color(G, args.r, args.c, args.workers)
    proper = verify_coloring(G, report.coloring)
    if args.json:
        emit_json(
            ColorResponse(
                r=args.r,
                c=args.c,
                levels=report.levels,
                level_bound=level_bound(G.n, args.r),
                level_sizes=list(report.level_sizes),
                colors_used=report.coloring.k,
                proper=proper,
                coloring=list(report.coloring.colors),
            )
        )
    else:
        sys.stdout.write(serialize_coloring(report.coloring))
        print(f"levels: {report.levels}")
        print(f"colors: {report.coloring.k}")
    if not proper:
        logger.error("Recursive coloring is not proper")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _bound_arguments(name: str, args: argparse.Namespace) -> Dict[str, object]:
    wanted = inspect.signature(BOUNDS[name]).parameters
    values: Dict[str, object] = {}
    for param in wanted:
        value = getattr(args, param, None)
        if value is None:
            raise UsageError(f"bound {name} needs --{param}")
        values[param] = value
    return values


def cmd_bound(args: argparse.Namespace) -> int:
    bound = BOUNDS[args.name](**_bound_arguments(args.name, args))
    if not bound.valid_unconditionally:
        logger.warning(f"bound {bound.name}: {bound.note}")
    if args.json:
        emit_json(BoundResponse(bound=bound, rendered=bound.render()))
    else:
        print(bound.render())
    return EXIT_OK


def _int_params(kind: str, params: Sequence[str], count: int) -> List[int]:
    if len(params) != count:
        raise UsageError(f"gen {kind} takes {count} parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"gen {kind} parameters must be integers: {list(params)}")


GENERATORS: Dict[str, Callable[[Sequence[str]], Graph]] = {
    "cycle": lambda p: generators.cycle(*_int_params("cycle", p, 1)),
    "path": lambda p: generators.path(*_int_params("path", p, 1)),
    "complete": lambda p: generators.complete(*_int_params("complete", p, 1)),
    "empty": lambda p: generators.empty(*_int_params("empty", p, 1)),
    # mycielski N and gmyc N LEVELS start from the cycle C_N.
    "mycielski": lambda p: generators.mycielski(
        generators.cycle(*_int_params("mycielski", p, 1))
    ),
    "gmyc": lambda p: _gmyc(p),
    "kneser": lambda p: generators.kneser(*_int_params("kneser", p, 2)),
    "petersen": lambda p: _no_params("petersen", p, generators.petersen),
    "grotzsch": lambda p: _no_params("grotzsch", p, generators.grotzsch),
    "gnp": lambda p: _gnp(p),
}


def _gmyc(params: Sequence[str]) -> Graph:
    n, levels = _int_params("gmyc", params, 2)
    return generators.generalized_mycielski(generators.cycle(n), levels)


def _no_params(kind: str, params: Sequence[str], build: Callable[[], Graph]) -> Graph:
    _int_params(kind, params, 0)
    return build()


def _gnp(params: Sequence[str]) -> Graph:
    if len(params) != 3:
        raise UsageError(f"gen gnp takes N P SEED, got {list(params)}")
    try:
        n, seed = int(params[0]), int(params[2])
    except ValueError:
        raise UsageError(f"gen gnp needs integer N and SEED, got {list(params)}")
    return generators.gnp(n, params[1], seed)


def cmd_gen(args: argparse.Namespace) -> int:
    G = GENERATORS[args.kind](args.params)
    comment = " ".join([args.kind, *args.params])
    sys.stdout.write(serialize_dimacs(G, comments=[comment]))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    result = f_oracle(args.n, args.r, args.c, args.vmax, args.prune, args.workers)
    witness = serialize_dimacs(result.witness) if result.witness is not None else None
    if args.json:
        emit_json(OracleResponse(result=result, witness_dimacs=witness))
    else:
        print(result.summary())
        if witness is not None:
            sys.stdout.write(witness)
    return EXIT_OK


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    if args.grid:
        reports = theorem_grid()
    else:
        missing = [flag for flag in ("n", "r", "c") if getattr(args, flag) is None]
        if missing:
            raise UsageError(f"verify-theorem needs --grid or --{', --'.join(missing)}")
        reports = [theorem_consistency(args.n, args.r, args.c)]
    passed = all(report.passed for report in reports)
    if args.json:
        emit_json(TheoremResponse(reports=reports, passed=passed))
    else:
        for report in reports:
            verdict = "PASS" if report.passed else "FAIL"
            if report.vacuous:
                verdict += " (vacuous)"
            print(
                f"n={report.n} r={report.r} c={report.c} "
                f"bound={format_rational(report.bound)} v<={report.v_max} "
                f"min_slack={report.min_slack} violations={len(report.violations)} {verdict}"
            )
    if not passed:
        logger.error("Theorem consistency check failed")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_verify_decomp(args: argparse.Namespace) -> int:
    G = read_dimacs(args.file)
    if args.decomposition:
        with open(args.decomposition, "r", encoding="utf-8") as f:
            D = decomposition_from_json(f.read())
    else:
        D = carve(G, args.r)
    report = verify_decomposition(G, args.r, D)
    if args.json:
        emit_json(report)
    else:
        for check in report.checks:
            verdict = "PASS" if check.passed else "FAIL"
            detail = f" ({check.detail})" if check.detail else ""
            print(f"{check.name}: {verdict}{detail}")
    if not report.passed:
        logger.error("Decomposition failed verification")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localchi",
        description="Local chromatic number, ball carving and bounds on f_c(n, r)",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--log-level", help="override LOCALCHI_LOG_LEVEL")
    parser.add_argument("--workers", type=int, help="process pool size")
    sub = parser.add_subparsers(dest="command", required=True)

    chi = sub.add_parser("chi", help="chromatic number of a DIMACS graph")
    chi.add_argument("file")
    chi.set_defaults(handler=cmd_chi)

    lchi = sub.add_parser("lchi", help="r-local chromatic number")
    lchi.add_argument("-r", type=int, required=True)
    lchi.add_argument("--profile", action="store_true", help="also print chi of every ball")
    lchi.add_argument("file")
    lchi.set_defaults(handler=cmd_lchi)

    decompose = sub.add_parser("decompose", help="ball-carving decomposition as JSON")
    decompose.add_argument("-r", type=int, required=True)
    decompose.add_argument("file")
    decompose.set_defaults(handler=cmd_decompose)

    color = sub.add_parser("color", help="recursive coloring from ball carving")
    color.add_argument("-r", type=int, required=True)
    color.add_argument("-c", type=int, required=True)
    color.add_argument("file")
    color.set_defaults(handler=cmd_color)

    bound = sub.add_parser("bound", help="exact value of a bound formula")
    bound.add_argument("name", choices=sorted(BOUNDS))
    for flag in ("n", "r", "c", "k", "m"):
        bound.add_argument(f"--{flag}", type=int)
    bound.add_argument("--a", type=Fraction, help="seed of the inductive estimate, e.g. 3/2")
    bound.set_defaults(handler=cmd_bound)

    gen = sub.add_parser("gen", help="generate a graph as DIMACS")
    gen.add_argument("kind", choices=sorted(GENERATORS))
    gen.add_argument("params", nargs="*")
    gen.set_defaults(handler=cmd_gen)

    oracle = sub.add_parser("oracle", help="brute-force f_c(n, r) on small graphs")
    for flag in ("n", "r", "c", "vmax"):
        oracle.add_argument(f"--{flag}", type=int, required=True)
    oracle.add_argument(
        "--prune",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="enumerate one graph per isomorphism class (always on above 6 vertices)",
    )
    oracle.set_defaults(handler=cmd_oracle)

    theorem = sub.add_parser("verify-theorem", help="carving levels against the main bound")
    for flag in ("n", "r", "c"):
        theorem.add_argument(f"--{flag}", type=int)
    theorem.add_argument("--grid", action="store_true", help="n <= 60, r in 1..3, c in 2..4")
    theorem.set_defaults(handler=cmd_verify_theorem)

    decomp = sub.add_parser("verify-decomp", help="check a decomposition against its graph")
    decomp.add_argument("-r", type=int, required=True)
    decomp.add_argument("--decomposition", help="JSON from decompose; carved afresh if omitted")
    decomp.add_argument("file")
    decomp.set_defaults(handler=cmd_verify_decomp)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    configure_logging(args.log_level or get_settings().log_level)
    try:
        return args.handler(args)
    except UsageError as e:
        logger.error(str(e))
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except LocalChromaticExceeded as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_CHECK_FAILED
    except (LocalChiError, ValueError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(run())
