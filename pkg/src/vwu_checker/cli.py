"""Command-line interface for the very-weak-unipotence checker."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import structlog

from vwu_checker.checker.processor import CheckProcessor
from vwu_checker.combinatorics.lemmas import run_lemma_suites
from vwu_checker.combinatorics.partitions import Partition
from vwu_checker.config import get_settings, settings_dict
from vwu_checker.errors import InadmissibleTypeError, UnsupportedFactorError, VWUError
from vwu_checker.hecke.algebra import AffineHeckeAlgebra
from vwu_checker.hecke.syntax import parse_element
from vwu_checker.hecke.verification import (
    VerificationReport,
    verify_inverse_pairs,
    verify_presentation,
)
from vwu_checker.lie.cartan import CartanType
from vwu_checker.lie.normalization import (
    COORDINATE_KINDS,
    MODES,
    WeightNormalizer,
    parse_rational_list,
)
from vwu_checker.lie.weightgeom import enumerate_d_circ_plus, euclidean_norm_sq
from vwu_checker.logs import configure_logging
from vwu_checker.metrics import record_dcirc, write_metrics
from vwu_checker.orbits.induction import (
    bv_dual,
    closure_leq,
    induce_zero,
    levi_from_nodes,
    orbit_from_coordinates,
)
from vwu_checker.orbits.models import LeviDatum, OrbitLabel
from vwu_checker.orbits.richardson import richardson_oracle
from vwu_checker.orbits.tables import TableRegistry, load_tables
from vwu_checker.reports import (
    DCircMember,
    DCircReport,
    HeckeCheckModel,
    HeckeReport,
    LemmaModel,
    LemmaReport,
    OrbitReport,
    ReportBase,
    rationals,
)

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def load_records_from_file(path: Path) -> list[dict[str, Any]]:
    """Read a JSON array of check records, or one JSON object per line."""

    text = path.read_text(encoding="utf-8")
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
    else:
        data = [json.loads(line) for line in stripped.splitlines() if line.strip()]
    if not all(isinstance(item, dict) for item in data):
        raise ValueError("Batch file must contain JSON objects")
    return data


def _integers(text: str) -> list[int]:
    return [int(piece) for piece in text.replace(",", " ").split()]


def _tables(args: argparse.Namespace) -> TableRegistry:
    directory = args.tables if args.tables is not None else get_settings().resolved_tables_dir
    return load_tables(directory)


def _seed(args: argparse.Namespace) -> int:
    return args.seed if args.seed is not None else get_settings().seed


def _config(args: argparse.Namespace) -> dict[str, Any]:
    config = settings_dict()
    config["seed"] = _seed(args)
    if args.tables is not None:
        config["tables_dir"] = str(args.tables)
    return config


def _inputs(args: argparse.Namespace) -> dict[str, Any]:
    skipped = ("handler", "json")
    return {k: v for k, v in vars(args).items() if k not in skipped and v is not None}


def _emit(args: argparse.Namespace, reports: Sequence[ReportBase]) -> None:
    if args.json:
        payload: Any = [r.model_dump(mode="json") for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        print("\n\n".join(report.render_text() for report in reports))


def _classical_type(text: str, partition: Optional[Partition] = None) -> CartanType:
    """Parse a type, inferring the rank of a bare family from a partition size."""

    label = text.strip().upper()
    if len(label) == 1 and partition is not None:
        size = partition.size
        rank = {"A": size - 1, "B": (size - 1) // 2, "C": size // 2, "D": size // 2}.get(label)
        if rank is None:
            raise InadmissibleTypeError(f"cannot infer a rank for family {label!r}")
        return CartanType(label, rank)
    return CartanType.parse(label)


# -- check / dcirc -----------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    processor = CheckProcessor(tables=_tables(args), first_failure=args.first_failure or None)
    if args.batch is not None:
        reports = []
        code = EXIT_OK
        for record in load_records_from_file(args.batch):
            try:
                report = processor.run_record(record)
            except VWUError as exc:
                print(f"error: {exc}", file=sys.stderr)
                code = EXIT_ERROR
                continue
            report.config = _config(args)
            reports.append(report)
            code = max(code, report.exit_code)
        _emit(args, reports)
        return code
    if args.type is None or args.lam is None:
        raise VWUError("check needs --type and --lambda, or --batch")
    report = processor.run_text(args.type, args.lam, coordinates=args.coords, mode=args.mode)
    report.config = _config(args)
    _emit(args, [report])
    return report.exit_code


def cmd_dcirc(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    request = WeightNormalizer().normalize(args.type, args.lam, coordinates=args.coords).request
    system = request.system
    dominant, _ = system.dominant_representative(request.weight)
    dcirc = enumerate_d_circ_plus(system, dominant)
    record_dcirc(system.label, len(dcirc))
    members = [
        DCircMember(
            gamma=rationals(cls.dominant),
            member=rationals(cls.member),
            root_coefficients=rationals(cls.root_coefficients),
            coset=cls.coset,
            norm_sq=(
                str(euclidean_norm_sq(system, cls.dominant))
                if system.is_classical_bourbaki
                else None
            ),
        )
        for cls in dcirc
    ]
    report = DCircReport(
        command="dcirc",
        inputs={"type": args.type, "lambda": args.lam, "coords": request.coordinates},
        elapsed_seconds=time.perf_counter() - started,
        config=_config(args),
        system=system.label,
        dominant=rationals(dominant),
        count=len(members),
        cosets=dcirc.cosets,
        members=members,
    )
    _emit(args, [report])
    return EXIT_OK


# -- orbit -------------------------------------------------------------------


def _levi(args: argparse.Namespace, ambient: CartanType) -> LeviDatum:
    if args.nodes is not None:
        nodes = frozenset(i - 1 for i in _integers(args.nodes))
        return levi_from_nodes(ambient, nodes)
    if not ambient.is_classical:
        raise InadmissibleTypeError(f"{ambient} Levi subalgebras are given by --nodes")
    blocks = tuple(sorted(_integers(args.blocks or ""), reverse=True))
    return LeviDatum(ambient, blocks, args.remainder)


def _orbit_report(
    args: argparse.Namespace, query: str, result: str | bool, **details: Any
) -> OrbitReport:
    return OrbitReport(
        command=f"orbit {query}",
        inputs=_inputs(args),
        config=_config(args),
        query=query,
        result=result,
        details=details,
    )


def cmd_orbit_induce(args: argparse.Namespace) -> int:
    tables = _tables(args)
    levi = _levi(args, CartanType.parse(args.type))
    orbit = induce_zero(levi, tables)
    report = _orbit_report(args, "induce", str(orbit), levi=str(levi))
    report.tables = tables.provenance()
    _emit(args, [report])
    return EXIT_OK


def cmd_orbit_dual(args: argparse.Namespace) -> int:
    partition = Partition.parse(args.partition)
    orbit = OrbitLabel(_classical_type(args.type, partition), partition)
    dual = bv_dual(orbit)
    report = _orbit_report(
        args, "dual", str(dual), source=str(orbit), dual_type=dual.cartan_type.label
    )
    _emit(args, [report])
    return EXIT_OK


def _orbit_from_text(cartan_type: CartanType, text: str) -> OrbitLabel:
    if cartan_type.is_classical:
        return OrbitLabel(cartan_type, Partition.parse(text))
    return OrbitLabel(cartan_type, name=text.strip())


def cmd_orbit_leq(args: argparse.Namespace) -> int:
    tables = _tables(args)
    cartan_type = CartanType.parse(args.type)
    a, b = _orbit_from_text(cartan_type, args.a), _orbit_from_text(cartan_type, args.b)
    _emit(args, [_orbit_report(args, "leq", closure_leq(a, b, tables), a=str(a), b=str(b))])
    return EXIT_OK


def cmd_orbit_coords(args: argparse.Namespace) -> int:
    cartan_type = CartanType.parse(args.type)
    orbit = orbit_from_coordinates(cartan_type, parse_rational_list(args.values))
    _emit(args, [_orbit_report(args, "coords", str(orbit))])
    return EXIT_OK


def cmd_orbit_oracle(args: argparse.Namespace) -> int:
    levi = _levi(args, CartanType.parse(args.type))
    trials = args.trials if args.trials is not None else get_settings().oracle_trials
    sampled = richardson_oracle(levi, trials=trials, seed=_seed(args))
    formula = induce_zero(levi)
    agree = sampled == formula
    report = _orbit_report(
        args, "oracle", str(sampled), formula=str(formula), agree=agree, trials=trials
    )
    _emit(args, [report])
    return EXIT_OK if agree else EXIT_FAILED


# -- hecke -------------------------------------------------------------------


def _hecke_report(
    args: argparse.Namespace,
    command: str,
    algebra: AffineHeckeAlgebra,
    verification: VerificationReport,
) -> HeckeReport:
    return HeckeReport(
        command=command,
        inputs=_inputs(args),
        config=_config(args),
        system=algebra.label,
        passed=verification.passed,
        checks=[
            HeckeCheckModel(check=o.check, passed=o.passed, detail=o.detail)
            for o in verification.outcomes
        ],
        summary=verification.summary(),
    )


def cmd_hecke_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    algebra = AffineHeckeAlgebra.from_label(args.type)
    samples = args.samples if args.samples is not None else get_settings().hecke_samples
    verification = verify_presentation(
        algebra, depth=args.depth, samples=samples, mu_bound=args.mu_bound, seed=_seed(args)
    )
    report = _hecke_report(args, "hecke verify", algebra, verification)
    report.elapsed_seconds = time.perf_counter() - started
    _emit(args, [report])
    return report.exit_code


def cmd_hecke_inverse(args: argparse.Namespace) -> int:
    algebra = AffineHeckeAlgebra.from_label(args.type)
    if algebra.rank and not 1 <= args.alpha <= algebra.rank:
        raise InadmissibleTypeError(f"--alpha must lie in 1..{algebra.rank}")
    verification, _ = verify_inverse_pairs(algebra, args.alpha - 1, range(args.kmin, args.kmax + 1))
    report = _hecke_report(args, "hecke inverse", algebra, verification)
    _emit(args, [report])
    return report.exit_code


def cmd_hecke_multiply(args: argparse.Namespace) -> int:
    algebra = AffineHeckeAlgebra.from_label(args.type)
    product = parse_element(algebra, args.a) * parse_element(algebra, args.b)
    empty = VerificationReport(system=algebra.label)
    report = _hecke_report(args, "hecke multiply", algebra, empty)
    report.product = str(product)
    _emit(args, [report])
    return EXIT_OK


# -- lemmas ------------------------------------------------------------------


def cmd_lemmas(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    results = run_lemma_suites(quick=args.quick)
    report = LemmaReport(
        command="lemmas",
        inputs={"quick": args.quick},
        elapsed_seconds=time.perf_counter() - started,
        config=_config(args),
        passed=all(r.passed for r in results),
        lemmas=[
            LemmaModel(name=r.name, cases=r.cases, passed=r.passed, violations=r.violations)
            for r in results
        ],
    )
    _emit(args, [report])
    return report.exit_code


# -- parser ------------------------------------------------------------------


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the report as JSON")
    common.add_argument("--tables", type=Path, default=None, help="Directory of closure tables")
    common.add_argument("--seed", type=int, default=None, help="Seed for sampled checks")
    common.add_argument("--log-level", default=None, help="structlog level (default from settings)")
    common.add_argument(
        "--metrics-file", type=Path, default=None, help="Write Prometheus metrics here"
    )
    return common


def _add_weight_arguments(parser: argparse.ArgumentParser, *, required: bool) -> None:
    parser.add_argument("--type", required=required, help="Cartan type, e.g. B3 or A1xA1")
    parser.add_argument(
        "--lambda", dest="lam", required=required, help="Rational coordinates, e.g. 1,1/2,1/4"
    )
    parser.add_argument("--coords", choices=COORDINATE_KINDS, default=None)


def _add_levi_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--type", required=True)
    parser.add_argument("--blocks", default=None, help="gl block sizes, e.g. 2,1")
    parser.add_argument("--remainder", type=int, default=0, help="rank m of the classical factor")
    parser.add_argument("--nodes", default=None, help="1-based simple roots of the Levi")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="vwu", description="Very weak unipotence checker")
    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check", parents=[common], help="Decide very weak unipotence")
    _add_weight_arguments(check, required=False)
    check.add_argument("--mode", choices=MODES, default=None)
    check.add_argument("--first-failure", action="store_true", help="Stop at the first witness")
    check.add_argument("--batch", type=Path, default=None, help="JSON file of check records")
    check.set_defaults(handler=cmd_check)

    dcirc = subparsers.add_parser("dcirc", parents=[common], help="List D°(λ)_+")
    _add_weight_arguments(dcirc, required=True)
    dcirc.set_defaults(handler=cmd_dcirc)

    orbit = subparsers.add_parser("orbit", help="Nilpotent orbit queries")
    orbit_commands = orbit.add_subparsers(dest="orbit_command", required=True)
    induce = orbit_commands.add_parser("induce", parents=[common], help="Induce the zero orbit")
    _add_levi_arguments(induce)
    induce.set_defaults(handler=cmd_orbit_induce)
    dual = orbit_commands.add_parser("dual", parents=[common], help="Barbasch-Vogan dual")
    dual.add_argument("--type", required=True, help="Type, or a bare family such as A")
    dual.add_argument("--partition", required=True)
    dual.set_defaults(handler=cmd_orbit_dual)
    leq = orbit_commands.add_parser("leq", parents=[common], help="Closure order")
    leq.add_argument("--type", required=True)
    leq.add_argument("--a", required=True)
    leq.add_argument("--b", required=True)
    leq.set_defaults(handler=cmd_orbit_leq)
    coords = orbit_commands.add_parser(
        "coords", parents=[common], help="Orbit from factor coordinates"
    )
    coords.add_argument("--type", required=True)
    coords.add_argument("--values", required=True)
    coords.set_defaults(handler=cmd_orbit_coords)
    oracle = orbit_commands.add_parser("oracle", parents=[common], help="Matrix Richardson oracle")
    _add_levi_arguments(oracle)
    oracle.add_argument("--trials", type=int, default=None)
    oracle.set_defaults(handler=cmd_orbit_oracle)

    hecke = subparsers.add_parser("hecke", help="Affine Hecke algebra checks")
    hecke_commands = hecke.add_subparsers(dest="hecke_command", required=True)
    verify = hecke_commands.add_parser("verify", parents=[common], help="Check the presentation")
    verify.add_argument("--type", required=True)
    verify.add_argument("--depth", type=int, default=4)
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--mu-bound", type=int, default=3)
    verify.set_defaults(handler=cmd_hecke_verify)
    inverse = hecke_commands.add_parser(
        "inverse", parents=[common], help="Intertwiner inverse pairs"
    )
    inverse.add_argument("--type", required=True)
    inverse.add_argument("--alpha", type=int, default=1, help="1-based simple root")
    inverse.add_argument("--kmin", type=int, default=-5)
    inverse.add_argument("--kmax", type=int, default=5)
    inverse.set_defaults(handler=cmd_hecke_inverse)
    multiply = hecke_commands.add_parser("multiply", parents=[common], help="Multiply two elements")
    multiply.add_argument("--type", required=True)
    multiply.add_argument("--a", required=True)
    multiply.add_argument("--b", required=True)
    multiply.set_defaults(handler=cmd_hecke_multiply)

    lemmas = subparsers.add_parser("lemmas", parents=[common], help="Run the lemma suites")
    lemmas.add_argument("--quick", action="store_true")
    lemmas.set_defaults(handler=cmd_lemmas)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()
    configure_logging(args.log_level or settings.log_level, json=settings.log_json)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        code = handler(args)
    except UnsupportedFactorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_ERROR
    except (VWUError, ValueError, OSError) as exc:
        logger.error("command_failed", command=args.command, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_ERROR
    metrics_file = args.metrics_file or settings.metrics_file
    if metrics_file is not None:
        write_metrics(metrics_file)
    return code


if __name__ == "__main__":
    sys.exit(main())
