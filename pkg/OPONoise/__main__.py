import argparse
import logging
import sys
from typing import Dict, List

import pandas

from OPONoise.cli import (LoadConfigAction, RunConfig, SelectModeAction, TARGETS, run_criteria, run_fit,
                          run_reproduce, run_spectra, run_trace, write_artifacts, write_metadata)
from OPONoise.errors import OPONoiseError, ValidationError
from OPONoise.fit import FREE_PARAMETERS, ObservationTable
from OPONoise.utils import parse_frequency

logger = logging.getLogger("OPONoise")


def frequency(value: str) -> float:
    """ argparse type for frequencies such as '20e6' or '3.5 MHz'. """
    return parse_frequency(value, "frequency")


def create_parser():
    common = argparse.ArgumentParser(add_help=False)
    required = common.add_argument_group("required arguments")
    required.add_argument("--config",
                          required=True,
                          type=str,
                          action=LoadConfigAction,
                          help="YAML run configuration.")
    common.add_argument("--out",
                        type=str,
                        default=None,
                        help="Output CSV filename. Defaults to stdout.")
    common.add_argument("--verbose",
                        action="store_true",
                        help="Log progress on stderr.")

    parser = argparse.ArgumentParser(prog="OPONoise")
    subparsers = parser.add_subparsers(dest="command", required=True)

    spectra = subparsers.add_parser("spectra", parents=[common], help="Sweep the detected noise spectra.")
    spectra.add_argument("--min", type=frequency, default=None, help="Lowest analysis frequency.")
    spectra.add_argument("--max", type=frequency, default=None, help="Highest analysis frequency.")
    spectra.add_argument("--points", type=int, default=None, help="Number of frequencies.")
    spectra.set_defaults(handler=_spectra)

    criteria = subparsers.add_parser("criteria", parents=[common], help="Evaluate the criteria at one frequency.")
    criteria.add_argument("--freq", type=frequency, default=None, help="Analysis frequency.")
    criteria.add_argument("--source", choices=["measured", "model"], default=None,
                          help="Take the variances from the measurements or from the model.")
    criteria.set_defaults(handler=_criteria)

    trace = subparsers.add_parser("trace", parents=[common], help="Scan the local-oscillator phase.")
    trace.add_argument("--freq", type=frequency, default=None, help="Analysis frequency.")
    trace.add_argument("--mode", type=str, action=SelectModeAction, choices=["plus", "minus"], default=None,
                       help="Rotated mode to detect.")
    trace.set_defaults(handler=_trace)

    fit = subparsers.add_parser("fit", parents=[common], help="Fit model parameters to observations.")
    fit.add_argument("--free", nargs="+", choices=list(FREE_PARAMETERS), default=None,
                     help="Free parameters.")
    fit.add_argument("--observations", type=str, default=None,
                     help="CSV or TSV file with observations; all of them are fitted.")
    fit.set_defaults(handler=_fit)

    reproduce = subparsers.add_parser("reproduce", parents=[common], help="Reproduce a published figure or table.")
    reproduce.add_argument("target", nargs="?", choices=list(TARGETS), default=None)
    reproduce.add_argument("--target", dest="target_option", choices=list(TARGETS), default=None)
    reproduce.add_argument("--source", choices=["measured", "model"], default=None,
                           help="Take the criteria variances from the measurements or from the model.")
    reproduce.set_defaults(handler=_reproduce)
    return parser


def _spectra(config: RunConfig, args) -> Dict[str, pandas.DataFrame]:
    return {"spectra": run_spectra(config, args.min, args.max, args.points)}


def _criteria(config: RunConfig, args) -> Dict[str, pandas.DataFrame]:
    return {"criteria": run_criteria(config, args.freq, args.source)}


def _trace(config: RunConfig, args) -> Dict[str, pandas.DataFrame]:
    return {"trace": run_trace(config, args.freq, args.mode).to_dataframe()}


def _fit(config: RunConfig, args) -> Dict[str, pandas.DataFrame]:
    observations = None if args.observations is None else ObservationTable.read(args.observations)
    return {"fit": run_fit(config, args.free, observations)}


def _reproduce(config: RunConfig, args) -> Dict[str, pandas.DataFrame]:
    if args.target is not None and args.target_option is not None and args.target != args.target_option:
        raise ValidationError(f"Conflicting targets '{args.target}' and '{args.target_option}'.", "target")
    target = args.target or args.target_option
    if target is None:
        raise ValidationError(f"A target is required, one of {list(TARGETS)}.", "target")
    return run_reproduce(config, target, args.source)


def main(argv: List[str]) -> int:
    """Command line interface for the OPONoise library.

    Args:
        argv (List[string]): Arguments passed to the program

    Returns:
        int: 0 on success, 1 on a failed run. Usage errors exit with 2.
    """
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
        logger.setLevel(logging.INFO if args.verbose else logging.NOTSET)
        artifacts = args.handler(args.config, args)
        written = write_artifacts(artifacts, args.out)
        if args.out is not None:
            arguments = {key: value for key, value in vars(args).items() if key not in ("config", "config_path", "handler")}
            write_metadata(args.out, args.command, arguments, args.config_path, written)
    except OPONoiseError as error:
        message = " ".join(str(error).split())
        print(f"error: {type(error).__name__}: {message}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
