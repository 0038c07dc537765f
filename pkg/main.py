import argparse
import sys
import time
from collections import Counter
from pathlib import Path
from typing import Callable, Dict, List, Optional

from joblib import Parallel, delayed
from logzero import logger

from core import cubic, quintic
from core.errors import FanoPoissonError, InputError, MathematicalFailure, NotPoisson
from core.exact_algebra import format_rational
from core.plucker import CUBIC_INDICES, QUINTIC_INDICES, BivectorCoefficients
from core.reports import RunReport, input_digest
from core.sampling import Sampler
from utils.helpers import FanoPoissonHelpers
from utils.settings import Settings, load_settings

ROOT_DIR = Path(__file__).resolve().parent

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2


def _load_cubic(path: Optional[str]) -> tuple:
    if path is None:
        fermat = cubic.CubicForm.fermat()
        return fermat, fermat.to_json()
    payload = FanoPoissonHelpers.load_json(path)
    return cubic.CubicForm.from_json(payload), payload


def _load_omega(path: Optional[str], indices) -> tuple:
    if path is None:
        raise InputError("--omega is required for this command")
    payload = FanoPoissonHelpers.load_json(path)
    return BivectorCoefficients.from_json(payload, indices), payload


def _run_check(report: RunReport, name: str, check: Callable[[], bool]) -> bool:
    """Record a check; mathematical failures count as a failed check with an error detail."""
    try:
        passed = bool(check())
    except MathematicalFailure as e:
        logger.warning(f"Check {name} failed: {e}")
        report.details.setdefault("failures", {})[name] = str(e)
        passed = False
    report.record(name, passed)
    return passed


def _record_cohomology(report: RunReport, result) -> None:
    report.ranks = dict(result.ranks)
    report.dims = list(result.dims)
    for name, passed in result.checks.items():
        report.record(name, passed)
    details = result.to_dict()
    report.details["euler_characteristic"] = details["euler_characteristic"]
    report.details["kernel_basis"] = details["kernel_basis"]


def cmd_cubic_verify(args: argparse.Namespace, settings: Settings, report: RunReport) -> RunReport:
    form, payload = _load_cubic(args.input)
    report.input_digest = input_digest({"F": payload})
    rank = form.partials_rank()
    report.details["partials_rank"] = rank
    report.details["plucker_shortcut_disabled"] = rank < len(CUBIC_INDICES)
    if rank < len(CUBIC_INDICES):
        logger.warning(f"Partials of F have rank {rank}: the Pluecker shortcut is disabled")
    report.record("partials_independent", rank == len(CUBIC_INDICES))
    verification = cubic.verify_bracket_table_chart(form, chart_order=settings.cubic.chart_order, n_jobs=settings.verification.n_jobs)
    for entry in verification.entries:
        report.record(entry.label, entry.passed)
    report.details["chart"] = verification.notes.get("chart")
    return report


def cmd_cubic_cohomology(args: argparse.Namespace, settings: Settings, report: RunReport) -> RunReport:
    form, cubic_payload = _load_cubic(args.input)
    a, omega_payload = _load_omega(args.omega, CUBIC_INDICES)
    report.input_digest = input_digest({"F": cubic_payload, "omega": omega_payload})
    report.details["alphas"] = [format_rational(x) for x in cubic.plucker_alphas(a)]
    try:
        result = cubic.cohomology_dims_cubic(form, a)
    except NotPoisson as e:
        report.residuals = e.residuals
        report.record("poisson", False)
        raise
    report.record("poisson", True)
    _record_cohomology(report, result)
    return report


def cmd_quintic_verify(args: argparse.Namespace, settings: Settings, report: RunReport) -> RunReport:
    report.input_digest = input_digest({})
    model = quintic.QuinticModel()
    _run_check(report, "model_consistency", model.is_consistent)

    def tangency() -> bool:
        basis = quintic.vector_basis_quintic(model)
        report.details["tangency"] = dict(basis.tangency)
        return basis.rank == len(quintic.VECTOR_INDICES)

    _run_check(report, "vector_fields", tangency)
    _run_check(report, "bivector_basis", lambda: len(quintic.bivector_basis_quintic()) == len(quintic.EPSILON_PAIRS))
    _run_check(report, "anticanonical_basis", lambda: len(quintic.anticanonical_basis_quintic()) == len(quintic.Z_PAIRS))

    def displayed() -> bool:
        mismatches = quintic.displayed_epsilon_mismatches()
        if mismatches:
            report.details["displayed_mismatches"] = mismatches
        return not mismatches

    _run_check(report, "displayed_epsilon", displayed)
    verification = quintic.verify_tables_quintic(n_jobs=settings.verification.n_jobs)
    report.record("table_A", all(e.passed for e in verification.entries if e.label.startswith("A")))
    report.record("table_B", all(e.passed for e in verification.entries if e.label.startswith("B")))
    if verification.failures:
        report.details["table_failures"] = verification.failures
    report.details["table_entries_checked"] = len(verification.entries)
    return report


def _quintic_cohomology_into(report: RunReport, a: BivectorCoefficients) -> None:
    report.details["equations"] = {label: format_rational(v) for label, v in quintic.poisson_equations_quintic(a)}
    try:
        result = quintic.cohomology_dims_quintic(a)
    except NotPoisson as e:
        report.residuals = e.residuals
        report.record("poisson", False)
        raise
    report.record("poisson", True)
    report.record(
        "chart_bracket",
        quintic.bracket_square_on_chart(a) == quintic.tabulated_bracket_square_on_chart(a),
    )
    _record_cohomology(report, result)


def cmd_quintic_cohomology(args: argparse.Namespace, settings: Settings, report: RunReport) -> RunReport:
    a, payload = _load_omega(args.omega or args.input, QUINTIC_INDICES)
    report.input_digest = input_digest({"omega": payload})
    _quintic_cohomology_into(report, a)
    return report


def cmd_quintic_conic(args: argparse.Namespace, settings: Settings, report: RunReport) -> RunReport:
    if args.input is None:
        raise InputError("--input with a conic point is required")
    payload = FanoPoissonHelpers.load_json(args.input)
    point = quintic.ConicPoint.from_json(payload)
    report.input_digest = input_digest({"conic": payload})
    a = quintic.conic_embed(point)
    report.details["omega"] = a.to_json()
    diagnostics = quintic.conic_diagnostics(point)
    report.details["diagnostics"] = diagnostics.to_json()
    report.record("separated_from_grassmannian", any(diagnostics.as_tuple()))
    _quintic_cohomology_into(report, a)
    return report


def _sweep_count(args: argparse.Namespace, settings: Settings) -> int:
    count = args.count if args.count is not None else settings.sampling.count
    if count < 1:
        raise InputError(f"--count must be at least 1, got {count}")
    return count


def _sampler(args: argparse.Namespace, settings: Settings) -> Sampler:
    seed = args.seed if args.seed is not None else settings.sampling.seed
    return Sampler(seed, settings.sampling.max_height, settings.sampling.max_attempts)


def _cubic_sample(form: cubic.CubicForm, a: BivectorCoefficients) -> Dict:
    poisson = cubic.is_poisson_cubic(form, a)
    result = cubic.cohomology_dims_cubic(form, a) if poisson else None
    return {"poisson": poisson, "rank_C": result.ranks["C"] if result else None, "euler": result.euler_characteristic if result else None}


def _bracket_identity_holds(form: cubic.CubicForm, a: BivectorCoefficients) -> bool:
    return cubic.bracket_square_cubic(form, a) == cubic.plucker_expansion_cubic(form, a)


def cmd_sweep_cubic(args: argparse.Namespace, settings: Settings, report: RunReport) -> RunReport:
    form, payload = _load_cubic(args.input)
    count, sampler = _sweep_count(args, settings), _sampler(args, settings)
    report.input_digest = input_digest({"F": payload, "seed": sampler.seed, "count": count})
    points = [sampler.decomposable(CUBIC_INDICES) for _ in range(count)]
    generic = [sampler.random_coeffs(CUBIC_INDICES) for _ in range(count)]
    n_jobs = settings.verification.n_jobs
    samples = Parallel(n_jobs=n_jobs, prefer="threads")(delayed(_cubic_sample)(form, a) for a in points)
    identities = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_bracket_identity_holds)(form, a) for a in generic
    )
    report.record("all_poisson", all(s["poisson"] for s in samples))
    report.record("euler_characteristic_6", all(s["euler"] == 6 for s in samples if s["poisson"]))
    report.record("bracket_identity", all(identities))
    strata = Counter(f"rank_C={s['rank_C']}" for s in samples if s["poisson"])
    report.details["strata"] = dict(sorted(strata.items()))
    report.details["samples"] = count
    return report


def _quintic_sample(a: BivectorCoefficients) -> Dict:
    result = quintic.cohomology_dims_quintic(a)
    return {"rA": result.ranks["A"], "rB": result.ranks["B"], "euler": result.euler_characteristic}


def _conic_sample(point: quintic.ConicPoint) -> Dict:
    diagnostics = quintic.conic_diagnostics(point)
    sample = _quintic_sample(quintic.conic_embed(point))
    sample["separated"] = any(diagnostics.as_tuple())
    return sample


def cmd_sweep_quintic(args: argparse.Namespace, settings: Settings, report: RunReport) -> RunReport:
    count, sampler = _sweep_count(args, settings), _sampler(args, settings)
    report.input_digest = input_digest({"seed": sampler.seed, "count": count, "conic": bool(args.conic)})
    n_jobs = settings.verification.n_jobs
    points = [sampler.decomposable(QUINTIC_INDICES) for _ in range(count)]
    samples = Parallel(n_jobs=n_jobs, prefer="threads")(delayed(_quintic_sample)(a) for a in points)
    report.record("euler_characteristic_-4", all(s["euler"] == -4 for s in samples))
    strata = Counter(f"rA={s['rA']},rB={s['rB']}" for s in samples)
    report.details["grassmannian_strata"] = dict(sorted(strata.items()))
    if args.conic:
        conic_points = [sampler.conic_point() for _ in range(count)]
        conic_samples = Parallel(n_jobs=n_jobs, prefer="threads")(delayed(_conic_sample)(c) for c in conic_points)
        report.record("conic_separated", all(s["separated"] for s in conic_samples))
        report.record("conic_euler_characteristic_-4", all(s["euler"] == -4 for s in conic_samples))
        conic_strata = Counter(f"rA={s['rA']},rB={s['rB']}" for s in conic_samples)
        report.details["conic_strata"] = dict(sorted(conic_strata.items()))
        report.details["conic_points"] = [c.to_json() for c in conic_points[:5]]
    report.details["samples"] = count
    return report


COMMANDS = {
    ("cubic", "verify"): cmd_cubic_verify,
    ("cubic", "cohomology"): cmd_cubic_cohomology,
    ("quintic", "verify"): cmd_quintic_verify,
    ("quintic", "cohomology"): cmd_quintic_cohomology,
    ("quintic", "conic"): cmd_quintic_conic,
    ("sweep", "cubic"): cmd_sweep_cubic,
    ("sweep", "quintic"): cmd_sweep_quintic,
}


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON input file (cubic form or conic point)")
    common.add_argument("--omega", help="JSON bivector file {\"a\": {\"01\": \"p/q\", ...}}")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--seed", type=int, help="sampling seed (overrides settings)")
    common.add_argument("--count", type=int, help="number of samples (overrides settings)")
    common.add_argument("--jobs", type=int, help="parallel workers (overrides settings)")
    common.add_argument("--timing", action="store_true", help="include wall-clock duration")
    common.add_argument("--config", help="settings YAML file")
    common.add_argument("--conic", action="store_true", help="sweep quintic: also sample conic points")

    parser = argparse.ArgumentParser(description="Poisson structures on cubic and quintic Fano threefolds")
    groups = parser.add_subparsers(dest="group", required=True)
    for group, actions in (("cubic", ("verify", "cohomology")), ("quintic", ("verify", "cohomology", "conic")), ("sweep", ("cubic", "quintic"))):
        group_parser = groups.add_parser(group)
        sub = group_parser.add_subparsers(dest="action", required=True)
        for action in actions:
            sub.add_parser(action, parents=[common])
    return parser.parse_args(argv)


def _emit(report: RunReport, args: argparse.Namespace, settings: Optional[Settings]) -> None:
    indent = settings.reports.indent if settings is not None else 2
    if args.json:
        print(report.to_json(indent))
    else:
        print("\n".join(report.summary_lines()))


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    command = COMMANDS[(args.group, args.action)]
    started = time.perf_counter()
    settings = None
    report = RunReport(f"{args.group} {args.action}", "")
    code = EXIT_OK
    try:
        settings = load_settings(args.config)
        if args.jobs is not None:
            if args.jobs == 0:
                raise InputError("--jobs must be nonzero")
            settings.verification.n_jobs = args.jobs
        FanoPoissonHelpers.setup_logging("fano_poisson", settings, ROOT_DIR)
        logger.info(f"Running {report.command}")
        command(args, settings, report)
        code = EXIT_OK if report.ok else EXIT_FAILURE
    except InputError as e:
        logger.error(f"Input error: {e}")
        report.fail(str(e))
        code = EXIT_INPUT
    except MathematicalFailure as e:
        logger.error(f"{type(e).__name__}: {e}")
        if isinstance(e, NotPoisson) and not report.residuals:
            report.residuals = e.residuals
        report.fail(f"{type(e).__name__}: {e}")
        code = EXIT_FAILURE
    except FanoPoissonError as e:
        logger.error(f"Unexpected algebra error: {e}")
        report.fail(f"{type(e).__name__}: {e}")
        code = EXIT_FAILURE
    if args.timing:
        report.duration = time.perf_counter() - started
    _emit(report, args, settings)
    return code


if __name__ == "__main__":
    sys.exit(main())
