"""Command-line entry point.

Data (CSV, printed results) goes to stdout or ``--out``; logs go to stderr.
Exit codes: 0 success, 1 configuration error, 2 any other failure.
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import config
from .errors import ConfigError
from .harness.analysis import calibrate_blend, chsh_check, latency_compare
from .harness.models import LatencyParams, make_config, read_config_file
from .harness.output import emit_csv
from .harness.runner import run_adversary, run_sweep
from .protocol.adversary import AdversaryStrategy
from .utils import configure_logging

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrelay", description="Entanglement-keyed relay simulator")
    parser.add_argument("--log-level", default=None, help="overrides QRELAY_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def experiment(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON experiment config")
        p.add_argument("--out", default="-", help="CSV destination, '-' for stdout")
        p.add_argument("--seed", type=int)
        p.add_argument("--trials", type=_positive_int)
        p.add_argument("--workers", type=_positive_int, default=None, help="defaults to QRELAY_WORKERS")
        return p

    experiment("sweep", "fidelity against the degradation axis")
    adversary = experiment("adversary", "interception without key qubits")
    adversary.add_argument("--strategy", choices=[s.value for s in AdversaryStrategy], default=AdversaryStrategy.TRACE_OUT.value)

    latency = sub.add_parser("latency", help="modeled latency against a handshake baseline")
    latency.add_argument("--config", help="JSON experiment config; only its 'latency' object is read")

    calibrate = sub.add_parser("calibrate", help="blend fraction from an anchor point")
    calibrate.add_argument("--anchor-x", type=float, default=0.25)
    calibrate.add_argument("--anchor-f", type=float, default=0.972)

    chsh = sub.add_parser("chsh", help="CHSH value of an aged Werner pair")
    chsh.add_argument("--x", type=float, required=True)
    chsh.add_argument("--elapsed", type=float, default=0.0)
    chsh.add_argument("--t2", type=float, default=10.0)

    serve = sub.add_parser("serve", help="JSON-RPC experiment service")
    serve.add_argument("--host", default=config.HOST)
    serve.add_argument("--port", type=int, default=config.PORT)
    return parser


def _experiment_config(args: argparse.Namespace):
    raw = read_config_file(args.config) if args.config else {}
    return make_config(raw, seed=args.seed, trials=args.trials)


def _write_csv(records, out: str) -> None:
    if out == "-":
        emit_csv(records, sys.stdout)
    else:
        emit_csv(records, out)


def _dispatch(args: argparse.Namespace) -> None:
    if args.command == "sweep":
        _write_csv(run_sweep(_experiment_config(args), args.workers), args.out)
    elif args.command == "adversary":
        _write_csv([run_adversary(_experiment_config(args), args.strategy, args.workers)], args.out)
    elif args.command == "latency":
        raw = read_config_file(args.config).get("latency", {}) if args.config else {}
        report = latency_compare(LatencyParams(**raw))
        print(f"proposed={report.proposed:.6f} baseline={report.baseline:.6f} reduction={report.reduction:.6f}")
    elif args.command == "calibrate":
        print(f"{calibrate_blend(args.anchor_x, args.anchor_f):.6f}")
    elif args.command == "chsh":
        result = chsh_check(args.x, args.elapsed, args.t2)
        print(f"chsh={result['chsh']:.6f} closed_form={result['closed_form']:.6f}")
    elif args.command == "serve":
        from .server import run

        run(args.host, args.port)


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        _dispatch(args)
    except (ConfigError, ValidationError) as e:
        logging.error("config_error command=%s error=%s", args.command, e)
        return EXIT_CONFIG
    except Exception as e:
        logging.exception("runtime_error command=%s error=%s", args.command, e)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
