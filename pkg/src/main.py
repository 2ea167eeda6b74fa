"""Main application entry point."""
import json
import sys
from argparse import ArgumentParser
from typing import List, Optional, Sequence

from .config import config
from .errors import CoxeterError, InternalError, JobError
from .models import BraidWord, Factorization, JobSpec
from .services import (
    HurwitzConnector, HurwitzEngine, JobLoader, PathRewriter, RootSystem,
    SelfTest, odd_components,
)
from .services.selftest import SELFTEST_SYSTEMS
from .utils import setup_logger


logger = setup_logger(__name__, config.LOGS_DIR / "cli.log", config.LOG_LEVEL, config.LOG_TO_FILE)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3


def build_parser() -> ArgumentParser:
    """Build the command line parser."""
    parser = ArgumentParser(
        prog="python -m src.main",
        description="Hurwitz orbits of reflection factorizations in Coxeter groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, coxeter=True):
        p.add_argument("--diagram", help="Diagram DSL/JSON text, a file, or a built-in name (A2, B2, ...)")
        p.add_argument("--job", help="JSON job file supplying any of the other arguments")
        if coxeter:
            p.add_argument("--coxeter", help='Coxeter word as a permutation, e.g. "1 2 3"')
        return p

    common(sub.add_parser("classes", help="Conjugacy classes of the simple reflections"), coxeter=False)

    for name, text in (
        ("decide", "Decide Hurwitz equivalence by class multisets"),
        ("connect", "Decide equivalence and print a verified witness braid"),
    ):
        p = common(sub.add_parser(name, help=text))
        p.add_argument("--f", help="First factorization (JSON list of reflection words)")
        p.add_argument("--g", help="Second factorization")

    p = common(sub.add_parser("normalize", help="Rewrite into strictly increasing core plus equal pairs"))
    p.add_argument("--f", help="Factorization to normalize")

    p = common(sub.add_parser("orbit", help="Breadth-first Hurwitz orbit"), coxeter=False)
    p.add_argument("--f", help="Starting factorization")
    p.add_argument("--cap", type=int, default=None, help=f"State cap (default {config.ORBIT_CAP})")
    p.add_argument("--threads", type=int, default=None, help=f"Worker threads (default {config.THREADS})")
    p.add_argument("--dump", action="store_true", help="Print every state of the orbit")

    p = common(sub.add_parser("verify", help="Replay a braid and compare with an expected factorization"),
               coxeter=False)
    p.add_argument("--f", help="Starting factorization")
    p.add_argument("--braid", help="Braid word (JSON list of signed generator indices)")
    p.add_argument("--expect", help="Expected factorization")

    p = sub.add_parser("selftest", help="Check the engine against brute force on small finite groups")
    p.add_argument("--systems", nargs="*", default=list(SELFTEST_SYSTEMS), help="Built-in systems to check")
    p.add_argument("--samples", type=int, default=None, help="Witness samples per orbit length")
    p.add_argument("--seed", type=int, default=None, help="Random seed for witness samples")
    p.add_argument("--no-progress", action="store_true", help="Hide the progress bar")
    return parser


def emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _require(spec: JobSpec, *names: str) -> None:
    for name in names:
        if getattr(spec, name) is None:
            raise JobError(f"--{name} is required", {"argument": f"--{name}"})


def words_of(system: RootSystem, f: Factorization) -> List[List[int]]:
    return [list(system.word_of_reflection(t)) for t in f.factors]


def cmd_classes(spec: JobSpec) -> int:
    labeling = odd_components(spec.diagram)
    emit({"diagram": spec.diagram.to_json(), "labeling": labeling.to_json()})
    return EXIT_OK


def _connector(spec: JobSpec):
    system = RootSystem(spec.diagram)
    connector = HurwitzConnector(system, odd_components(spec.diagram))
    f = system.factorization_of_words(spec.f)
    g = system.factorization_of_words(spec.g)
    connector.validate_coxeter_target(spec.coxeter, f)
    connector.validate_coxeter_target(spec.coxeter, g)
    return system, connector, f, g


def cmd_decide(spec: JobSpec) -> int:
    _require(spec, "f", "g")
    _, connector, f, g = _connector(spec)
    decision = connector.decide(f, g)
    emit(decision.to_json())
    return EXIT_OK if decision.equivalent else EXIT_NEGATIVE


def cmd_connect(spec: JobSpec) -> int:
    _require(spec, "f", "g")
    _, connector, f, g = _connector(spec)
    decision = connector.connect(f, g, spec.coxeter)
    if decision.witness is not None and connector.hurwitz.replay(f, decision.witness).key != g.key:
        raise InternalError("witness failed re-verification")
    emit(decision.to_json())
    return EXIT_OK if decision.equivalent else EXIT_NEGATIVE


def cmd_normalize(spec: JobSpec) -> int:
    _require(spec, "f")
    system = RootSystem(spec.diagram)
    rewriter = PathRewriter(system, HurwitzEngine(system))
    f = system.factorization_of_words(spec.f)
    normal = rewriter.normalize(f, coxeter=spec.coxeter)
    emit({
        "core": words_of(system, normal.core),
        "pairs": [list(system.word_of_reflection(t)) for t in normal.pairs],
        "braid": normal.braid.to_json(),
        "flat": words_of(system, normal.flat()),
        "resolutions": [
            {"index": r.index, "power": r.power, "sum_before": r.sum_before, "sum_after": r.sum_after}
            for r in normal.resolutions
        ],
    })
    return EXIT_OK


def cmd_orbit(spec: JobSpec) -> int:
    _require(spec, "f")
    system = RootSystem(spec.diagram)
    f = system.factorization_of_words(spec.f)
    result = HurwitzEngine(system).orbit_bfs(
        f, cap=spec.options.get("cap"), threads=spec.options.get("threads")
    )
    payload = {"size": result.size, "truncated": result.truncated}
    if spec.options.get("dump"):
        payload["states"] = [words_of(system, state) for state in result.states]
    emit(payload)
    return EXIT_OK


def cmd_verify(spec: JobSpec) -> int:
    _require(spec, "f", "braid", "expect")
    system = RootSystem(spec.diagram)
    f = system.factorization_of_words(spec.f)
    expect = system.factorization_of_words(spec.expect)
    result = HurwitzEngine(system).replay(f, BraidWord(tuple(spec.braid)))
    match = result.key == expect.key
    emit({"match": match, "result": words_of(system, result)})
    return EXIT_OK if match else EXIT_NEGATIVE


def cmd_selftest(args) -> int:
    reports = SelfTest(seed=args.seed, samples=args.samples).run(args.systems, progress=not args.no_progress)
    ok = all(report.ok for report in reports.values())
    emit({"ok": ok, "systems": {name: report.to_json() for name, report in reports.items()}})
    return EXIT_OK if ok else EXIT_NEGATIVE


COMMANDS = {
    "classes": cmd_classes,
    "decide": cmd_decide,
    "connect": cmd_connect,
    "normalize": cmd_normalize,
    "orbit": cmd_orbit,
    "verify": cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns the exit code."""
    args = build_parser().parse_args(argv)
    try:
        config.validate()
    except ValueError as e:
        emit({"error": {"code": "invalid_config", "message": str(e), "location": None}})
        return EXIT_INVALID
    try:
        if args.command == "selftest":
            return cmd_selftest(args)
        options = {
            key: getattr(args, key) for key in ("cap", "threads", "dump") if hasattr(args, key)
        }
        spec = JobLoader().load(
            diagram=args.diagram,
            coxeter=getattr(args, "coxeter", None),
            f=getattr(args, "f", None),
            g=getattr(args, "g", None),
            braid=getattr(args, "braid", None),
            expect=getattr(args, "expect", None),
            job=args.job,
            parabolic=args.command == "normalize",
            coxeter_required=args.command in ("decide", "connect"),
            **options,
        )
        return COMMANDS[args.command](spec)
    except InternalError as e:
        logger.error(f"Internal error: {e.message}", exc_info=True)
        emit({"error": e.to_dict()})
        return EXIT_INTERNAL
    except CoxeterError as e:
        logger.warning(f"Invalid input: {e.message}")
        emit({"error": e.to_dict()})
        return EXIT_INVALID


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
