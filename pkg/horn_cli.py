import argparse
import logging
import sys
from typing import Callable, List, Optional, Tuple

from combinatorics.json_payload_parser import (
    KirwanPointPayloadParser,
    SubsetPayloadParser,
    TuplePayloadParser,
    WeightsPayloadParser,
)
from combinatorics.subset_ops import bruhat_below, enumerate_tuples
from core.combinatorics_model import CardSubset
from core.config import DEFAULT_BUDGET, DEFAULT_PRIME, DEFAULT_SAMPLES, FIELD_CHOICES, OUTPUT_FORMATS, RunConfig
from core.errors import DomainError, InvariantViolation, PayloadError, ResourceError, ShapeError
from core.report_generator import Report
from horn.horn_engine import HornTable, horn0, horn_classes, horn_enumerate, horn_member
from horn.horn_table_generator import classes_report, enumeration_report, horn0_report, verdict_report
from kirwan.kirwan_cone import kirwan_check, kirwan_inequality_set, lr_verdict, tuple_from_weights
from kirwan.kirwan_table_generator import inequalities_report, kirwan_report, lr_report, variational_report
from kirwan.variational import DEFAULT_TOLERANCE, random_spectrum, variational_check
from linalg.fields import PrimeField
from linalg.flags import Flag, SubspaceBasis, cell_coordinates, degenerate_cell_point, position, position_by_rank, sample_cell_point
from linalg.harder_narasimhan import random_trial
from linalg.linalg_table_generator import cell_report, degenerate_report, hn_report, position_report
from linalg.matrix import Mat
from linalg.matrix_file_parser import MatrixFileParser
from reports.report_generators import generator_for
from tables.appendix_tables import appendix_a_report, appendix_b_report
from tables.two_point import two_point_report
from tangent.certifier import certify_intersecting, cross_validate
from tangent.determinant import delta_determinant, diagonal_identity_holds, right_borel_identity_holds
from tangent.tangent_table_generator import crossval_report, delta_report, intersect_report

logger = logging.getLogger("horn_cli")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

Outcome = Tuple[Report, int]
Handler = Callable[[argparse.Namespace, RunConfig, HornTable], Outcome]


def _verdict(report: Report, ok: bool) -> Outcome:
    return report, EXIT_OK if ok else EXIT_NEGATIVE


def _read_file(path: str) -> str:
    with open(path, encoding="utf-8") as f:
        return f.read()


# -- horn ------------------------------------------------------------------

def cmd_horn_enumerate(args, config, cache) -> Outcome:
    if args.classes:
        return classes_report(args.r, args.n, args.s, horn_classes(args.r, args.n, args.s, cache)), EXIT_OK
    return enumeration_report(args.r, args.n, args.s, horn_enumerate(args.r, args.n, args.s, cache)), EXIT_OK


def cmd_horn_check(args, config, cache) -> Outcome:
    T = TuplePayloadParser(args.n).parse(args.tuple)
    verdict = horn_member(T, cache)
    return _verdict(verdict_report(verdict), verdict.member)


def cmd_horn0(args, config, cache) -> Outcome:
    return horn0_report(args.d, args.r, args.s, horn0(args.d, args.r, args.s, cache)), EXIT_OK


# -- intersect -------------------------------------------------------------

def cmd_intersect_certify(args, config, cache) -> Outcome:
    T = TuplePayloadParser(args.n).parse(args.tuple)
    verdict = certify_intersecting(T, config.make_field(), config.samples, config.rng())
    return _verdict(intersect_report(verdict), verdict.intersecting)


def cmd_intersect_crossval(args, config, cache) -> Outcome:
    tuples = list(enumerate_tuples(args.r, args.n, args.s))
    logger.info("cross-validating %d tuples with %d jobs", len(tuples), config.jobs)
    report = cross_validate(tuples, config, cache)
    return _verdict(crossval_report(args.r, args.n, args.s, report), report.consistent)


# -- kirwan / lr -----------------------------------------------------------

def cmd_kirwan_ineqs(args, config, cache) -> Outcome:
    return inequalities_report(args.r, args.s, kirwan_inequality_set(args.r, args.s, cache)), EXIT_OK


def cmd_kirwan_check(args, config, cache) -> Outcome:
    xi = KirwanPointPayloadParser().parse(args.xi)
    verdict = kirwan_check(xi, cache)
    return _verdict(kirwan_report(verdict), verdict.member)


def cmd_lr_nonzero(args, config, cache) -> Outcome:
    lambdas = WeightsPayloadParser().parse(args.lambdas)
    verdict = lr_verdict(lambdas, cache)
    _, T = tuple_from_weights(lambdas)
    return _verdict(lr_report(lambdas, verdict, T), verdict.member)


# -- positions, cells, HN --------------------------------------------------

def cmd_pos_compute(args, config, cache) -> Outcome:
    parser = MatrixFileParser()
    E = Flag(parser.parse(_read_file(args.flag)).single())
    S = SubspaceBasis(parser.parse(_read_file(args.subspace)).single())
    J = position(S, E)
    J_by_rank = position_by_rank(S, E)
    if J != J_by_rank:
        raise InvariantViolation(f"position {J} disagrees with the rank formula {J_by_rank}")
    return position_report(S, E, J, J_by_rank), EXIT_OK


def _subset(args) -> CardSubset:
    return SubsetPayloadParser(args.n).parse(args.subset)


def cmd_cell_sample(args, config, cache) -> Outcome:
    I = _subset(args)
    rng = config.rng()
    E = Flag.random(config.make_field(), args.n, rng)
    S = sample_cell_point(I, E, rng)
    return cell_report(I, E, S, position(S, E)), EXIT_OK


def cmd_pos_degenerate(args, config, cache) -> Outcome:
    I = _subset(args)
    rng = config.rng()
    E = Flag.random(config.make_field(), args.n, rng)
    coords = cell_coordinates(I, E.field, rng)
    results = []
    for a in range(1, I.cardinality + 1):
        S = degenerate_cell_point(I, E, coords, a)
        if S is None:
            results.append({"a": a, "position": None, "below": None})
            continue
        J = position(S, E)
        below = J != I and J in bruhat_below(I)
        if not below:
            raise InvariantViolation(f"degenerating column {a} of a point at {I} gave position {J}")
        results.append({"a": a, "position": list(J.elements), "below": below})
    return degenerate_report(I, results), EXIT_OK


def cmd_hn_search(args, config, cache) -> Outcome:
    F = PrimeField(args.q)
    rng = config.rng()
    results = [random_trial(F, args.r, args.s, rng, config.budget) for _ in range(args.trials)]
    return _verdict(hn_report(results, args.q), all(r.multiplicity == 1 for r in results))


# -- delta -----------------------------------------------------------------

def cmd_delta_eval(args, config, cache) -> Outcome:
    T = TuplePayloadParser(args.n).parse(args.tuple)
    F = config.make_field()
    rng = config.rng()
    r, q = T.r, T.n - T.r
    samples = []
    for _ in range(args.trials):
        g_vec = [Mat.random_invertible(F, r, rng) for _ in range(T.s)]
        h_vec = [Mat.random_invertible(F, q, rng) for _ in range(T.s)]
        delta = delta_determinant(T, g_vec, h_vec)
        b_vec = [Mat.random_upper_triangular(F, r, rng) for _ in range(T.s)]
        bp_vec = [Mat.random_upper_triangular(F, q, rng) for _ in range(T.s)]
        borel_ok = right_borel_identity_holds(T, g_vec, h_vec, b_vec, bp_vec)
        diagonal_ok = diagonal_identity_holds(T, g_vec, h_vec, Mat.random_invertible(F, r, rng), Mat.random_invertible(F, q, rng))
        if not (borel_ok and diagonal_ok):
            raise InvariantViolation(f"equivariance of δ fails for {T}: right Borel {borel_ok}, diagonal {diagonal_ok}")
        samples.append({"delta": F.format(delta), "right_borel": borel_ok, "diagonal": diagonal_ok})
    return delta_report(f"δ for {T} over {F.tag}", samples), EXIT_OK


# -- variational -----------------------------------------------------------

DEFAULT_VARIATIONAL_SUBSETS = ("[2,4,6]", "[1,6]", "[6]")


def cmd_variational_demo(args, config, cache) -> Outcome:
    rng = config.rng()
    subsets = args.J or list(DEFAULT_VARIATIONAL_SUBSETS)
    Js = [SubsetPayloadParser(args.r).parse(text) for text in subsets]
    reports = []
    for _ in range(args.count):
        xi = random_spectrum(args.r, rng)
        for J in Js:
            reports.append(variational_check(xi, J, args.trials, args.tolerance, rng))
    return _verdict(variational_report(reports), all(rep.passed for rep in reports))


# -- tables / fixtures -----------------------------------------------------

def cmd_tables_appendix_a(args, config, cache) -> Outcome:
    return appendix_a_report(cache), EXIT_OK


def cmd_tables_appendix_b(args, config, cache) -> Outcome:
    return appendix_b_report(cache), EXIT_OK


def cmd_fixtures_two_point(args, config, cache) -> Outcome:
    report = two_point_report()
    return _verdict(report, report.payload["all_at_target"])


# -- parser ----------------------------------------------------------------

def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool):
    """Global flags; on subcommands they default to SUPPRESS so values given before the subcommand survive."""
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--seed", type=int, default=default(0), help="master seed of all random streams")
    parser.add_argument("--prime", type=int, default=default(DEFAULT_PRIME), help="modulus of the prime field")
    parser.add_argument("--field", choices=FIELD_CHOICES, default=default(None), help="exact field for random sampling")
    parser.add_argument("--samples", type=int, default=default(DEFAULT_SAMPLES), help="random flag tuples per certification")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=default("json"), help="output format")
    parser.add_argument("--jobs", type=int, default=default(1), help="worker processes for batch commands")
    parser.add_argument("--budget", type=int, default=default(DEFAULT_BUDGET), help="subspace enumeration budget")
    parser.add_argument("-v", "--verbose", action="count", default=default(0), help="-v info, -vv debug")


def _leaf(group, name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
    parser = group.add_parser(name, help=help_text, allow_abbrev=False)
    _add_global_flags(parser, suppress=True)
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horn_cli",
        allow_abbrev=False,
        description="Horn inequalities, intersecting Schubert tuples, Kirwan cones and LR nonvanishing.",
    )
    _add_global_flags(parser, suppress=False)
    commands = parser.add_subparsers(dest="command", required=True)

    horn = commands.add_parser("horn", allow_abbrev=False, help="Horn sets").add_subparsers(dest="action", required=True)
    p = _leaf(horn, "enumerate", cmd_horn_enumerate, "list Horn(r, n, s)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--classes", action="store_true", help="canonical representatives only")
    p = _leaf(horn, "check", cmd_horn_check, "decide membership of one tuple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple", required=True, help="JSON, e.g. [[1,4],[2,3]]")

    p = _leaf(commands, "horn0", cmd_horn0, "edim-zero slice of Horn(d, r, s)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    intersect = commands.add_parser("intersect", allow_abbrev=False, help="randomized certification").add_subparsers(dest="action", required=True)
    p = _leaf(intersect, "certify", cmd_intersect_certify, "certify one tuple through the true dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple", required=True)
    p = _leaf(intersect, "crossval", cmd_intersect_crossval, "certifier against the Horn recursion on all tuples")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    kirwan = commands.add_parser("kirwan", allow_abbrev=False, help="Kirwan cones").add_subparsers(dest="action", required=True)
    p = _leaf(kirwan, "ineqs", cmd_kirwan_ineqs, "Horn inequalities of Kirwan(r, s)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p = _leaf(kirwan, "check", cmd_kirwan_check, "cone membership of a rational point")
    p.add_argument("--xi", required=True, help="JSON, e.g. [[1,-1],[\"1/2\",\"-1/2\"],...]")

    lr = commands.add_parser("lr", allow_abbrev=False, help="Littlewood-Richardson coefficients").add_subparsers(dest="action", required=True)
    p = _leaf(lr, "nonzero", cmd_lr_nonzero, "decide c(λ) > 0")
    p.add_argument("--lambda", dest="lambdas", required=True, help="JSON, e.g. [[1,-1],[1,-1],[1,-1]]")

    pos = commands.add_parser("pos", allow_abbrev=False, help="Schubert positions").add_subparsers(dest="action", required=True)
    p = _leaf(pos, "compute", cmd_pos_compute, "position of a subspace relative to a flag")
    p.add_argument("--flag", required=True, help="matrix file with the adapted basis")
    p.add_argument("--subspace", required=True, help="matrix file with a basis of the subspace")
    p = _leaf(pos, "degenerate", cmd_pos_degenerate, "degenerate a cell point column by column")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subset", required=True)

    cell = commands.add_parser("cell", allow_abbrev=False, help="Schubert cells").add_subparsers(dest="action", required=True)
    p = _leaf(cell, "sample", cmd_cell_sample, "random point of a Schubert cell")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subset", required=True)

    hn = commands.add_parser("hn", allow_abbrev=False, help="Harder-Narasimhan subspaces").add_subparsers(dest="action", required=True)
    p = _leaf(hn, "search", cmd_hn_search, "exhaustive search over GF(q)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--q", type=int, default=3, help="small prime for the exhaustive search")
    p.add_argument("--trials", type=int, default=1)

    delta = commands.add_parser("delta", allow_abbrev=False, help="determinant function").add_subparsers(dest="action", required=True)
    p = _leaf(delta, "eval", cmd_delta_eval, "evaluate δ and check its equivariance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple", required=True)
    p.add_argument("--trials", type=int, default=1)

    variational = commands.add_parser("variational", allow_abbrev=False, help="variational principle").add_subparsers(dest="action", required=True)
    p = _leaf(variational, "demo", cmd_variational_demo, "floating-point check with random Hermitian matrices")
    p.add_argument("--r", type=int, default=6)
    p.add_argument("--J", action="append", help="JSON subset of [r]; repeatable")
    p.add_argument("--count", type=int, default=10, help="random spectra")
    p.add_argument("--trials", type=int, default=50, help="cell samples per spectrum and subset")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)

    tables = commands.add_parser("tables", allow_abbrev=False, help="appendix tables").add_subparsers(dest="action", required=True)
    _leaf(tables, "appendix-a", cmd_tables_appendix_a, "Horn triples for d < r <= 4")
    _leaf(tables, "appendix-b", cmd_tables_appendix_b, "Kirwan inequalities for r <= 4")

    fixtures = commands.add_parser("fixtures", allow_abbrev=False, help="worked examples").add_subparsers(dest="action", required=True)
    _leaf(fixtures, "two-point", cmd_fixtures_two_point, "two subspaces over Q(√5) at {2,4,6}")
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse: 0 after --help, 2 on usage errors
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        config = RunConfig.from_namespace(args)
        report, code = args.handler(args, config, HornTable())
        text = generator_for(config.output_format).generate(report)
    except PayloadError as e:
        logger.error("%s", e.describe())
        return EXIT_USAGE
    except (ShapeError, DomainError, ResourceError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except OSError as e:
        logger.error("cannot read input: %s", e)
        return EXIT_USAGE
    except InvariantViolation as e:
        logger.error("internal check failed: %s", e)
        return EXIT_INTERNAL
    except Exception:
        # любая другая ошибка - внутренний сбой, не отрицательный ответ
        logger.exception("unexpected failure")
        return EXIT_INTERNAL
    out.write(text + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
