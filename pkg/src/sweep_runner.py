import sys
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple

import pandas as pd

from src.analysis import compute_fluctuation
from src.config import AppConfig, get_config
from src.exceptions import FluxHalfError, NonConvergence
from src.models import (
    FIELD_LABELS,
    OUTPUT_COLUMNS,
    FieldKind,
    Medium,
    Method,
    OutputRecord,
    QuadratureConfig,
    RefractiveIndex,
    RowStatus,
    SweepSpec,
    is_infinite_index,
)
from src.units import convert_units

GridPoint = Tuple[float, RefractiveIndex, float, FieldKind]


class SweepRunner:
    """
    Orchestrates parameter sweeps over (z, n, eta, field).

    Rows are evaluated in a thread pool and emitted in grid order
    (z outer, then n, then eta, then field) whatever order they finish in.
    """

    def __init__(self, config: Optional[AppConfig] = None):
        """
        Initialize the runner.

        Args:
            config: Optional configuration object. If None, loads from environment.
        """
        self.config = config or get_config()
        self.quadrature_config = self.config.quadrature_config()
        self.failed_rows = 0
        self.status_counts: Counter = Counter()

    def grid(self, spec: SweepSpec) -> List[GridPoint]:
        return list(product(spec.z_grid.points(), spec.n_values, spec.eta_values, spec.fields()))

    def evaluate_point(self, point: GridPoint, spec: SweepSpec,
                       config: Optional[QuadratureConfig] = None) -> OutputRecord:
        """
        Evaluate one grid point, turning library errors into a row status.

        Args:
            point: (z, n, eta, field) in the sweep's units
            spec: The sweep being run (units and renormalization)
            config: Quadrature settings; defaults to the runner's

        Returns:
            OutputRecord in the sweep's units
        """
        z, n, eta, field = point
        config = config or self.quadrature_config
        si = spec.units == "si"
        z_natural = convert_units(z, "length", "to_natural") if si else z
        eta_natural = convert_units(eta, "time", "to_natural") if si else eta
        closed = is_infinite_index(n) or eta == 0.0 or n == 1.0

        row = {"z": z, "n": n, "eta": eta, "field": FIELD_LABELS[field]}
        try:
            medium = Medium(n=n, eta=eta_natural)
            result, method = compute_fluctuation(medium, z_natural, field, spec.renormalize, config)
        except NonConvergence as e:
            print(f"⚠️ Not converged at z={z:g}, n={n}, eta={eta:g}, field={row['field']}: {e}", file=sys.stderr)
            value = e.value if e.value is not None else math.nan
            error = e.error_estimate if e.error_estimate is not None else math.nan
            return OutputRecord(
                **row,
                value=self._to_output(value, si),
                error_estimate=self._to_output(error, si),
                channel_traveling=math.nan,
                channel_evanescent=math.nan,
                method=Method.QUADRATURE,
                status=RowStatus.NON_CONVERGED,
            )
        except FluxHalfError as e:
            print(f"❌ Invalid point z={z:g}, n={n}, eta={eta:g}, field={row['field']}: {e}", file=sys.stderr)
            return OutputRecord(
                **row,
                value=math.nan,
                error_estimate=math.nan,
                channel_traveling=math.nan,
                channel_evanescent=math.nan,
                method=Method.CLOSED_FORM if closed else Method.QUADRATURE,
                status=RowStatus.INVALID_DOMAIN,
            )

        return OutputRecord(
            **row,
            value=self._to_output(result.value, si),
            error_estimate=self._to_output(result.error_estimate, si),
            channel_traveling=self._to_output(result.channels.traveling, si),
            channel_evanescent=self._to_output(result.channels.evanescent, si),
            method=method,
            status=RowStatus.OK,
        )

    @staticmethod
    def _to_output(value: float, si: bool) -> float:
        return convert_units(value, "fluctuation", "to_si") if si else value

    def run_sweep(self, spec: SweepSpec, config: Optional[QuadratureConfig] = None) -> Iterator[OutputRecord]:
        """
        Run a sweep, yielding one record per grid point in grid order.

        Args:
            spec: Sweep specification
            config: Quadrature settings; defaults to the runner's

        Yields:
            OutputRecord per grid point
        """
        points = self.grid(spec)
        threads = max(1, self.config.threads)
        print(f"🚀 Sweeping {len(points)} point(s) on {threads} thread(s)", file=sys.stderr)

        if threads == 1:
            records = [self.evaluate_point(point, spec, config) for point in points]
        else:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                # map yields in submission order
                records = list(executor.map(lambda p: self.evaluate_point(p, spec, config), points))

        self.status_counts = Counter(record.status for record in records)
        self.failed_rows = len(records) - self.status_counts[RowStatus.OK]
        if self.failed_rows:
            print(f"⚠️ {self.status_counts[RowStatus.NON_CONVERGED]} row(s) did not converge, "
                  f"{self.status_counts[RowStatus.INVALID_DOMAIN]} row(s) outside the domain", file=sys.stderr)
        else:
            print(f"✅ Sweep complete: {len(points)} row(s)", file=sys.stderr)
        yield from records


def records_to_frame(records: Iterable[OutputRecord]) -> pd.DataFrame:
    """Collect records into a DataFrame with the fixed output column order."""
    rows = [{**record.model_dump(), "method": record.method.value, "status": record.status.value}
            for record in records]
    return pd.DataFrame(rows, columns=OUTPUT_COLUMNS)


def write_records(records: Iterable[OutputRecord], path: Optional[str] = None, fmt: str = "csv") -> str:
    """
    Serialize records as CSV (17 significant digits) or a JSON array.

    Args:
        records: Output records
        path: File to write; if None only the text is returned
        fmt: "csv" or "json"

    Returns:
        The serialized text
    """
    frame = records_to_frame(records)
    if fmt == "csv":
        text = frame.to_csv(index=False, float_format="%.16e", lineterminator="\n")
    elif fmt == "json":
        text = frame.to_json(orient="records", indent=2, double_precision=15) + "\n"
    else:
        raise ValueError(f"unknown output format '{fmt}'")

    if path:
        Path(path).write_text(text, encoding="utf-8")
    return text
