"""Command-line interface for prerad-lab."""
import sys
import argparse
import json
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .logger import setup_logger
from .calculus import FAMILIES, quantifier_family
from .classes import boolean_lattice_violations, conatural_classes, to_dot
from .cofirst import (
    is_co_first,
    is_dihollow,
    is_family_co_first,
    is_family_fully_co_first,
    is_family_second,
    is_fully_co_first,
    is_second,
)
from .config import WorkbenchConfig, load_config
from .errors import ConfigError, PreradLabError
from .module import (
    FiniteModule,
    enumerate_submodules,
    hom_set,
    projective_cover,
    radical,
    socle,
    is_semisimple,
    is_simple,
)
from .preradical import evaluate, ideal_t_radical, parse_preradical, to_text
from .products import box_product, comultiplication, coprime_verdict, totalizer
from .report import run, universe_summary, write_report
from .ring import make_ring
from .suites import SUITES
from .universe import (
    ModuleUniverse,
    build_universe,
    format_element,
    format_submodule,
    parse_module,
    parse_submodule,
)

CHECK_TARGETS = ("suites", "coprime", "cofirst", "second", "dihollow", "conat")
EXIT_ERROR = 1
EXIT_ASSERTED_FAILURE = 2


def _setup(args: argparse.Namespace) -> logging.Logger:
    log_file = Path(args.log_file) if getattr(args, "log_file", None) else None
    return setup_logger(log_file=log_file, verbose=getattr(args, "verbose", False))


def _print_json(data) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def config_from_args(args: argparse.Namespace) -> WorkbenchConfig:
    """
    Build a run configuration from ``--config`` and the command-line overrides.

    Raises:
        ConfigError: Neither a config file nor a ring was given, or an invalid field
    """
    if args.config:
        config = load_config(Path(args.config))
        if args.ring:
            config.ring = args.ring
    elif args.ring:
        config = WorkbenchConfig(ring=args.ring)
    else:
        raise ConfigError("either --config or --ring is required")
    if args.suite:
        config.suites = list(args.suite)
    if args.max_order is not None:
        config.max_order = args.max_order
    if args.sum_arity is not None:
        config.sum_arity = args.sum_arity
    if args.out:
        config.out = Path(args.out)
    if args.text_out:
        config.text_out = Path(args.text_out)
    if args.dot:
        config.dot_out = Path(args.dot)
    if args.timings:
        config.timings = True
    return config.validate()


def _universe(config: WorkbenchConfig, log: logging.Logger) -> ModuleUniverse:
    return build_universe(
        make_ring(config.ring),
        seeds=config.seeds,
        max_order=config.max_order,
        sum_arity=config.sum_arity,
        max_classes=config.max_classes,
        submodule_closure=config.submodule_closure,
        log=log,
    )


def _selected_modules(universe: ModuleUniverse, specs: Optional[Sequence[str]]) -> List[Tuple[str, FiniteModule]]:
    if specs:
        return [(spec, parse_module(universe.ring, spec)) for spec in specs]
    return [(universe.name(i), universe[i]) for i in universe.indices if not universe[i].is_zero]


def _run_suites(config: WorkbenchConfig, logger: logging.Logger) -> int:
    logger.info("=" * 60)
    logger.info(f"prerad-lab - suites {', '.join(config.suites) or '(none)'} over {config.ring_label}")
    logger.info("=" * 60)
    report = run(config, logger)
    write_report(report, config.out, config.text_out)
    if config.out is None and config.text_out is None:
        print(report.to_text(), end="")
    summary = report.as_dict()["summary"]
    logger.info(f"{summary['total']} propositions: {summary['counts']}")
    if report.asserted_failures:
        logger.warning(f"Asserted failures: {', '.join(report.asserted_failures)}")
    return report.exit_code


def _check_coprime(universe: ModuleUniverse, args: argparse.Namespace) -> int:
    records = []
    for name, module in _selected_modules(universe, args.module):
        record = coprime_verdict(module, universe).as_dict()
        record["module"] = name
        records.append(record)
    _print_json(records)
    return 0


def _check_predicate(universe: ModuleUniverse, args: argparse.Namespace, config: WorkbenchConfig,
                     logger: logging.Logger) -> int:
    if args.sigma:
        sigma = parse_preradical(universe.ring, args.sigma)
        quantifier = {"sigma": to_text(sigma), "regime": None}
        predicates = {
            "co_first": lambda m: is_co_first(m, sigma),
            "fully_co_first": lambda m: is_fully_co_first(m, sigma),
            "second": lambda m: is_second(m, sigma),
        }
    else:
        family, regime = quantifier_family(universe, args.family, config.max_assignments, logger)
        quantifier = {"family": args.family, "regime": regime.value, "size": len(family)}
        predicates = {
            "co_first": lambda m: is_family_co_first(m, family),
            "fully_co_first": lambda m: is_family_fully_co_first(m, family),
            "second": lambda m: is_family_second(m, family),
        }
    names = ("co_first", "fully_co_first") if args.target == "cofirst" else ("second",)
    modules = []
    for name, module in _selected_modules(universe, args.module):
        modules.append({"module": name, **{p: predicates[p](module).value for p in names}})
    _print_json({**quantifier, "modules": modules})
    return 0


def _check_dihollow(universe: ModuleUniverse, args: argparse.Namespace) -> int:
    _print_json([
        {"module": name, "dihollow": is_dihollow(module)}
        for name, module in _selected_modules(universe, args.module)
    ])
    return 0


def _check_conat(universe: ModuleUniverse, config: WorkbenchConfig, logger: logging.Logger) -> int:
    classes = conatural_classes(universe, config.max_down_sets, logger)
    for cls in classes:
        print(cls)
    problems = boolean_lattice_violations(classes)
    for problem in problems:
        print(f"violation: {problem}")
    if config.dot_out is not None:
        config.dot_out.parent.mkdir(parents=True, exist_ok=True)
        config.dot_out.write_text(to_dot(classes), encoding="utf-8")
        logger.info(f"DOT lattice written: {config.dot_out}")
    return EXIT_ASSERTED_FAILURE if problems else 0


def run_check(args: argparse.Namespace) -> int:
    """
    Run the proposition suites, or one of the module checks.

    Args:
        args: Parsed command-line arguments

    Returns:
        Exit code (0 for success, 1 for errors, 2 for asserted failures)
    """
    try:
        logger = _setup(args)
        config = config_from_args(args)
        if args.target == "suites":
            return _run_suites(config, logger)
        universe = _universe(config, logger)
        if args.target == "coprime":
            return _check_coprime(universe, args)
        if args.target in ("cofirst", "second"):
            return _check_predicate(universe, args, config, logger)
        if args.target == "dihollow":
            return _check_dihollow(universe, args)
        return _check_conat(universe, config, logger)
    except (PreradLabError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


def run_compute(args: argparse.Namespace) -> int:
    """
    Compute one product, totalizer or preradical value and print its generators.

    Returns:
        Exit code (0 for success, non-zero for error)
    """
    try:
        _setup(args)
        ring = make_ring(args.ring)
        module = parse_module(ring, args.module)
        if args.operation in ("box", "comult"):
            a, b = parse_submodule(module, args.a), parse_submodule(module, args.b)
            result = box_product(a, b) if args.operation == "box" else comultiplication(a, b)
        elif args.operation == "tot":
            result = totalizer(parse_submodule(module, args.n))
        else:
            result = evaluate(parse_preradical(ring, args.expr), module)
        print(format_submodule(result))
        return 0
    except PreradLabError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


def _render_ring(spec: str) -> List[str]:
    ring = make_ring(spec)
    return [
        f"Ring: {spec} (order {ring.order}, characteristic {ring.characteristic})",
        f"Commutative: {ring.is_commutative}",
        f"Semisimple: {ring.is_semisimple}",
        f"Jacobson radical: {{{', '.join(ring.label(a) for a in sorted(ring.jacobson_radical))}}}",
        f"Idempotents: {', '.join(ring.label(e) for e in ring.idempotents)}",
        f"Two-sided ideals: {len(ring.two_sided_ideals)}",
    ]


def _render_module(module: FiniteModule) -> List[str]:
    return [
        f"Module: {module.label} (order {module.order}, {module.rank} generators)",
        f"Submodules: {len(enumerate_submodules(module))}",
        f"Radical: {format_submodule(radical(module))}",
        f"Socle: {format_submodule(socle(module))}",
        f"Simple: {is_simple(module)}",
        f"Semisimple: {is_semisimple(module)}",
    ]


def _render_lattice(module: FiniteModule) -> List[str]:
    """Hasse-diagram edges of the submodule lattice."""
    subs = enumerate_submodules(module)
    lines = [f"Submodule lattice of {module.label}: {len(subs)} submodules"]
    for a in subs:
        for b in subs:
            if a < b and not any(a < c < b for c in subs):
                lines.append(f"{format_submodule(a)} < {format_submodule(b)}")
    return lines


def _render_homs(source: FiniteModule, target: FiniteModule) -> List[str]:
    homs = hom_set(source, target)
    lines = [f"Hom({source.label}, {target.label}): {len(homs)} morphisms"]
    for f in homs:
        images = "; ".join(
            f"{format_element(source.unit(i))} -> {format_element(img)}"
            for i, img in enumerate(f.generator_images)
        )
        lines.append(f"  [{images}]")
    return lines


def _render_universe(universe: ModuleUniverse) -> List[str]:
    lines = [f"Universe over {universe.ring.preset_tag}: {len(universe)} classes"]
    for i in universe.indices:
        below = ", ".join(universe.name(j) for j in sorted(universe.proper_quotients(i)))
        lines.append(f"  {i:3} {universe.name(i):12} order {universe[i].order:3}  quotients: {below or '-'}")
    return lines


def _render_ideals(spec: str) -> List[str]:
    ring = make_ring(spec)
    lines = []
    for ideal in ring.two_sided_ideals:
        lines.append(f"{{{', '.join(ring.label(a) for a in sorted(ideal))}}}  {to_text(ideal_t_radical(ring, ideal))}")
    return lines


def _render_cover(module: FiniteModule) -> List[str]:
    cover, epi = projective_cover(module)
    return [f"Projective cover of {module.label}: {cover.label}", f"Kernel: {format_submodule(epi.kernel())}"]


def run_inspect(args: argparse.Namespace) -> int:
    """
    Print a ring, module, lattice, hom-set, value, universe, ideal list or cover.

    Returns:
        Exit code (0 for success, non-zero for error)
    """
    try:
        _setup(args)
        ring = make_ring(args.ring)
        if args.object == "ring":
            lines = _render_ring(args.ring)
        elif args.object == "ideals":
            lines = _render_ideals(args.ring)
        elif args.object == "universe":
            config = WorkbenchConfig(ring=args.ring)
            lines = _render_universe(_universe(config.validate(), logging.getLogger(__name__)))
        elif args.object == "hom":
            lines = _render_homs(parse_module(ring, args.source), parse_module(ring, args.target))
        elif args.object == "eval":
            module = parse_module(ring, args.module)
            lines = [format_submodule(evaluate(parse_preradical(ring, args.expr), module))]
        else:
            module = parse_module(ring, args.module)
            render = {"module": _render_module, "lattice": _render_lattice, "cover": _render_cover}
            lines = render[args.object](module)
        print("\n".join(lines))
        return 0
    except PreradLabError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


def run_universe(args: argparse.Namespace) -> int:
    """
    Print the universe parameters and class names as JSON.

    Returns:
        Exit code (0 for success, non-zero for error)
    """
    try:
        logger = _setup(args)
        config = WorkbenchConfig(ring=args.ring)
        if args.max_order is not None:
            config.max_order = args.max_order
        if args.sum_arity is not None:
            config.sum_arity = args.sum_arity
        _print_json(universe_summary(_universe(config.validate(), logger)))
        return 0
    except PreradLabError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


def _add_logging_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--log-file', type=str, help='Enable file logging to specified path')
    parser.add_argument('--verbose', action='store_true', help='Log at DEBUG level')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prerad-lab",
        description="Check preradical, co-first and conatural-class statements on finite rings",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Run every suite over Z/4
  prerad-lab check --ring zn:4 --suite all --out report.json

  # Run the suites described by a config file
  prerad-lab check --config run.json

  # Coprimeness verdicts of Z4 over Z/4
  prerad-lab check coprime --ring zn:4 --module Z4

  # Conatural classes over Z/6 with a DOT lattice
  prerad-lab check conat --ring zn:6 --dot conat.dot

  # Comultiplication of two submodules
  prerad-lab compute comult zn:4 Z4 2 2

  # Hom-set and preradical value
  prerad-lab inspect hom zn:6 Z2 Z6
  prerad-lab inspect eval zn:6 "reject(Z6)" Z2
        """
    )

    subparsers = parser.add_subparsers(dest='command', help='Command to execute')

    # Check command
    check_parser = subparsers.add_parser('check', help='Run proposition suites or a module check')
    check_parser.add_argument('target', nargs='?', choices=CHECK_TARGETS, default='suites',
                              help='What to check (default: suites)')
    check_parser.add_argument('--config', type=str, help='JSON configuration file')
    check_parser.add_argument('--ring', type=str, help='Ring preset, e.g. zn:4 or product(zn:2,zn:3)')
    check_parser.add_argument('--suite', action='append',
                              help=f"Suite name, repeatable ({', '.join(SUITES)}, all)")
    check_parser.add_argument('--max-order', type=int, help='Largest module order in the universe')
    check_parser.add_argument('--sum-arity', type=int, help='Largest number of summands in added direct sums')
    check_parser.add_argument('--out', type=str, help='Write the JSON report to this path')
    check_parser.add_argument('--text-out', type=str, help='Write the text report to this path')
    check_parser.add_argument('--timings', action='store_true', help='Include runtimes in the report')
    check_parser.add_argument('--dot', type=str, help='Write the conatural-class lattice as DOT (conat)')
    check_parser.add_argument('--module', action='append', help='Module spec to check, repeatable')
    check_parser.add_argument('--sigma', type=str, help='Preradical expression (cofirst, second)')
    check_parser.add_argument('--family', choices=sorted(FAMILIES), default='pr',
                              help='Preradical family to quantify over (default: pr)')
    _add_logging_arguments(check_parser)

    # Compute command
    compute_parser = subparsers.add_parser('compute', help='Compute a product, totalizer or value')
    operations = compute_parser.add_subparsers(dest='operation', required=True)
    for name, help_text in (('box', 'Box product of A and B'), ('comult', 'Comultiplication (A:B)')):
        op = operations.add_parser(name, help=help_text)
        op.add_argument('ring')
        op.add_argument('module')
        op.add_argument('a', help='Generators of A, e.g. 2 or 1,0;0,2')
        op.add_argument('b', help='Generators of B')
    op = operations.add_parser('tot', help='Totalizer of N')
    op.add_argument('ring')
    op.add_argument('module')
    op.add_argument('n', help='Generators of N')
    op = operations.add_parser('eval', help='Value of a preradical on a module')
    op.add_argument('ring')
    op.add_argument('expr', help='Preradical expression, e.g. reject(Z6)')
    op.add_argument('module')
    for op in operations.choices.values():
        _add_logging_arguments(op)

    # Inspect command
    inspect_parser = subparsers.add_parser('inspect', help='Print an object')
    objects = inspect_parser.add_subparsers(dest='object', required=True)
    for name in ('ring', 'ideals', 'universe'):
        objects.add_parser(name).add_argument('ring')
    for name in ('module', 'lattice', 'cover'):
        op = objects.add_parser(name)
        op.add_argument('ring')
        op.add_argument('module')
    op = objects.add_parser('hom')
    op.add_argument('ring')
    op.add_argument('source')
    op.add_argument('target')
    op = objects.add_parser('eval')
    op.add_argument('ring')
    op.add_argument('expr')
    op.add_argument('module')
    for op in objects.choices.values():
        _add_logging_arguments(op)

    # Universe command
    universe_parser = subparsers.add_parser('universe', help='Print the module universe of a ring')
    universe_parser.add_argument('--ring', type=str, required=True)
    universe_parser.add_argument('--max-order', type=int)
    universe_parser.add_argument('--sum-arity', type=int)
    _add_logging_arguments(universe_parser)

    return parser


def main(argv: Optional[Sequence[str]] = None):
    """
    Main entry point for the CLI.
    Parses arguments and executes the appropriate command.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    commands = {
        'check': run_check,
        'compute': run_compute,
        'inspect': run_inspect,
        'universe': run_universe,
    }
    if args.command in commands:
        sys.exit(commands[args.command](args))
    parser.print_help()
    sys.exit(1)


if __name__ == '__main__':
    main()
