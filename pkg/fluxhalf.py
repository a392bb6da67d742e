#!/usr/bin/env python3
"""
FluxHalf command line
Parameter sweeps of vacuum field fluctuations near a dielectric half-space,
and the data behind the two standard figures.
"""

import sys
import argparse
from typing import List, Optional

from pydantic import ValidationError

from src.config import get_config, print_config_summary, validate_config
from src.figures import emit_figure_data
from src.models import SweepSpec, ZGrid
from src.sweep_runner import SweepRunner, write_records
from src.units import cutoff_frequency_to_eta

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ROWS_FAILED = 2  # some row non_converged or invalid_domain


class UsageErrorParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"❌ Error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = UsageErrorParser(
        prog="fluxhalf",
        description="Vacuum E/B fluctuations next to a dielectric half-space with an exponential cutoff",
    )
    parser.add_argument('--n', action='append', dest='n_values', metavar='N',
                        help='Refractive index (repeatable; "inf" for the ideal conductor, default: inf)')

    cutoff = parser.add_mutually_exclusive_group()
    cutoff.add_argument('--eta', action='append', type=float, dest='eta_values', metavar='ETA',
                        help='Cutoff timescale (repeatable; seconds with --units si, default: 1)')
    cutoff.add_argument('--cutoff-frequency', action='append', type=float, dest='cutoff_frequencies',
                        metavar='HZ', help='Cutoff frequency 1/eta (repeatable)')

    parser.add_argument('--z-min', type=float, default=0.0, help='Smallest height (default: 0)')
    parser.add_argument('--z-max', type=float, help='Largest height (default: --z-min)')
    parser.add_argument('--z-count', type=int, default=1, help='Number of heights (default: 1)')
    parser.add_argument('--z-log', action='store_true', help='Logarithmic height spacing')
    parser.add_argument('--field', choices=['E', 'B', 'both'], default='E', help='Field (default: E)')
    parser.add_argument('--renormalize', action='store_true', help='Subtract the free-vacuum value')
    parser.add_argument('--units', choices=['natural', 'si'], help='Unit system (default: FLUXHALF_UNITS)')
    parser.add_argument('--rel-tol', type=float, help='Quadrature relative tolerance')
    parser.add_argument('--output', choices=['csv', 'json'], help='Output format (default: FLUXHALF_OUTPUT_FORMAT)')
    parser.add_argument('--out', metavar='PATH', help='Write to PATH instead of stdout')
    parser.add_argument('--figure', type=int, choices=[1, 2], help='Emit the data of figure 1 or 2 and exit')
    parser.add_argument('--show-config', action='store_true', help='Print the configuration and exit')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    overrides = {}
    if args.rel_tol is not None:
        overrides["rel_tol"] = args.rel_tol
    if args.units:
        overrides["units"] = args.units
    if args.output:
        overrides["output_format"] = args.output

    try:
        config = get_config(**overrides)
    except ValidationError as e:
        parser.error(f"invalid configuration: {e}")

    if args.show_config:
        print_config_summary(config)
        return EXIT_OK if validate_config(config) else EXIT_USAGE

    if not validate_config(config, verbose=False):
        parser.error("invalid configuration (run with --show-config for details)")

    if args.figure:
        frame = emit_figure_data(args.figure, args.out, config)
        if args.out:
            print(f"✅ Figure {args.figure} data written: {args.out}", file=sys.stderr)
        else:
            frame.to_csv(sys.stdout, index=False, float_format="%.16e", lineterminator="\n")
        return EXIT_OK

    if args.cutoff_frequencies:
        try:
            eta_values = [cutoff_frequency_to_eta(f) for f in args.cutoff_frequencies]
        except ValueError as e:
            parser.error(str(e))
    else:
        eta_values = args.eta_values or [1.0]

    try:
        spec = SweepSpec(
            z_grid=ZGrid(
                min=args.z_min,
                max=args.z_max if args.z_max is not None else args.z_min,
                count=args.z_count,
                spacing="log" if args.z_log else "linear",
            ),
            n_values=args.n_values or ["inf"],
            eta_values=eta_values,
            field=args.field,
            renormalize=args.renormalize,
            units=config.units,
        )
    except (ValidationError, ValueError) as e:
        parser.error(f"invalid sweep: {e}")

    runner = SweepRunner(config)
    records = list(runner.run_sweep(spec))
    text = write_records(records, args.out, config.output_format)
    if args.out:
        print(f"📄 {len(records)} row(s) written: {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)

    if runner.failed_rows:
        return EXIT_ROWS_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
