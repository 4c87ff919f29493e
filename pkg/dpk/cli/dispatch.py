# dpk/cli/dispatch.py
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from ..config import configure_logging, get_settings
from ..errors import DpkError, NumericalConsistencyError, PrecisionError
from .commands import COMMANDS
from .output import RunConfig, emit, load_run_config
from .verify import suite_failed

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2

# Options that are part of the invocation rather than of a command's parameters.
_RUN_KEYS = {"command", "output", "output_path", "config", "tolerance", "log_level"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=["hermite", "sine", "airy", "bessel"])
    p.add_argument("--n", type=int, help="particle count N for the hermite kind")
    p.add_argument("--nu", type=float, help="Bessel index, nu > -1")
    p.add_argument("--t", type=float)
    p.add_argument("--ta", type=float)
    p.add_argument("--xa", type=float)
    p.add_argument("--tb", type=float)
    p.add_argument("--xb", type=float)
    p.add_argument("--grid", help="a:b:count")
    p.add_argument("--paths", type=int)
    p.add_argument("--dt", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--output", choices=["csv", "json", "svg"])
    p.add_argument("--output-path", dest="output_path")
    p.add_argument("--config", help="JSON or YAML run config; flags given here override it")
    p.add_argument("--tolerance", type=float, help="overrides the quadrature and kernel tolerances")
    p.add_argument("--log-level", dest="log_level")


def build_parser() -> _Parser:
    parser = _Parser(prog="dpk", description="Noncolliding Brownian motion kernels, correlations and simulators")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    for name in COMMANDS:
        p = sub.add_parser(name)
        _common(p)
        if name == "corr":
            p.add_argument("--block", action="append", help="t:x1,x2,... (repeatable)")
        elif name == "fredholm":
            p.add_argument("--chi", action="append", help="t:a:b:value (repeatable)")
            p.add_argument("--nodes", type=int)
            p.add_argument("--mode", choices=["symmetric", "nystrom"])
        elif name == "gap":
            p.add_argument("--a", type=float)
            p.add_argument("--b", type=float)
            p.add_argument("--nodes", type=int)
            p.add_argument("--mode", choices=["symmetric", "nystrom"])
        elif name == "simulate":
            p.add_argument("--times", help="comma-separated increasing times")
            p.add_argument("--scheme", choices=["matrix", "sde"])
            p.add_argument("--x", help="comma-separated start configuration")
            p.add_argument("--binary", metavar="PATH", help="also write the ensemble as a DPKE file")
        elif name == "survival":
            p.add_argument("--x", help="comma-separated start configuration")
            p.add_argument("--method", choices=["quadrature", "montecarlo", "asymptotic"])
        elif name == "limits":
            p.add_argument("--which", choices=["bulk", "edge"])
            p.add_argument("--n-list", dest="n_list")
            p.add_argument("--probe", action="append", help="sa:xa:sb:xb (repeatable)")
        elif name == "specfun":
            p.add_argument("--fn")
        elif name == "verify":
            p.add_argument("--suite", choices=["fast", "full"])
    return parser


def normalize_argv(argv: Sequence[str]) -> List[str]:
    """Glue values that start with '-' (e.g. `--grid -15:15:301`) onto their flag."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if arg.startswith("--") and "=" not in arg and nxt is not None and nxt.startswith("-") and _numberish(nxt):
            out.append(f"{arg}={nxt}")
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


def _numberish(text: str) -> bool:
    return len(text) > 1 and (text[1].isdigit() or text[1] == ".")


def _run_config(args: argparse.Namespace) -> RunConfig:
    given = {k: v for k, v in vars(args).items() if v is not None}
    params: Dict[str, Any] = {k: v for k, v in given.items() if k not in _RUN_KEYS}
    seed = params.get("seed")
    if args.config:
        base = load_run_config(args.config)
        if base.command != args.command:
            raise UsageError(f"config {args.config} is for command {base.command!r}, not {args.command!r}")
        merged = {**base.parameters, **params}
        return RunConfig(
            command=args.command,
            parameters=merged,
            output=args.output or base.output,
            output_path=args.output_path or base.output_path,
            seed=merged.get("seed", base.seed),
            tolerance=args.tolerance if args.tolerance is not None else base.tolerance,
        )
    return RunConfig(
        command=args.command,
        parameters=params,
        output=args.output or "csv",
        output_path=args.output_path,
        seed=seed,
        tolerance=args.tolerance,
    )


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(normalize_argv(argv))
        try:
            configure_logging(args.log_level)
        except ValueError:
            raise UsageError(f"unknown log level {args.log_level!r}") from None
        if args.tolerance is not None and not args.tolerance > 0:
            raise UsageError("--tolerance must be positive")
        run = _run_config(args)
        if run.tolerance is not None:
            settings = get_settings()
            settings.QUAD_TOL = settings.KERNEL_TOL = run.tolerance
        logger.debug("running %s with %s", run.command, run.parameters)
        table = COMMANDS[run.command](dict(run.parameters))
        emit(table, run)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"invalid parameters: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionError, NumericalConsistencyError) as e:
        print(f"⚠ numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except DpkError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if run.command == "verify" and suite_failed(table):
        print("⚠ verify: at least one check failed", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK
