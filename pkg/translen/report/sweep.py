"""
Parameter sweeps over the generated families.

Each row pairs the lower bound of the family's group with the upper
certificate of the family and the dilatation of its word. Rows are
computed on a thread pool and emitted in parameter order.
"""

import csv
import io
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Union

from tqdm import tqdm

from translen.bounds.certificates import format_fraction
from translen.bounds.interval import interval
from translen.configuration.families import (
    FAMILY_KINDS,
    PUREBRAID_MIN_PUNCTURES,
    TORELLI_MIN_GENUS,
    generate_family,
)
from translen.exceptions import RangeError
from translen.logger_utils.logger_utils import setup_logger
from translen.report.config_loader import load_config
from translen.spectral.spectral import word_dilatation
from translen.utils.file_tools import write_text

logger = setup_logger("sweep", module="report")

MIN_PARAMETER = {
    "purebraid": PUREBRAID_MIN_PUNCTURES,
    "torelli": TORELLI_MIN_GENUS,
}


@dataclass(frozen=True)
class SweepRow:
    parameter: int
    lower_bound: Fraction
    upper_bound: Fraction
    j: int
    dilatation: float
    normalized_upper: float
    normalized_lower: float


def sweep_row(kind: str, parameter: int, max_j: Optional[int] = None, tol: Optional[float] = None) -> SweepRow:
    inst = generate_family(kind, parameter)
    bounds = interval(inst, max_j=max_j)
    spectral = word_dilatation(inst.config, inst.word, tol=tol)
    lower = bounds.lower.bound
    upper = bounds.upper.bound
    return SweepRow(
        parameter=parameter,
        lower_bound=lower,
        upper_bound=upper,
        j=bounds.upper.j,
        dilatation=spectral.dilatation,
        normalized_upper=float(parameter * upper),
        normalized_lower=float(parameter * lower),
    )


def check_range(kind: str, start: int, stop: int, force: bool = False, cap: Optional[int] = None) -> List[int]:
    """
    Parameters of the sweep, start..stop inclusive; empty when start > stop.

    Raises:
        RangeError: If the family is unknown, start is below the family
            minimum, or stop exceeds the cap without force
    """
    if kind not in FAMILY_KINDS:
        raise RangeError(f"Unknown family '{kind}', expected one of {', '.join(FAMILY_KINDS)}")
    if start > stop:
        return []
    minimum = MIN_PARAMETER[kind]
    if start < minimum:
        raise RangeError(f"{kind} sweep needs parameters >= {minimum}, got {start}")
    cap = load_config()["sweep"]["parameter_cap"] if cap is None else cap
    if stop > cap and not force:
        raise RangeError(f"{kind} sweep up to {stop} exceeds the parameter cap {cap}; use --force to run it")
    return list(range(start, stop + 1))


def run_sweep(kind: str, start: int, stop: int, force: bool = False, workers: Optional[int] = None,
              progress: Optional[bool] = None, max_j: Optional[int] = None,
              tol: Optional[float] = None) -> List[SweepRow]:
    """One row per parameter in start..stop, in parameter order."""
    settings = load_config()["sweep"]
    parameters = check_range(kind, start, stop, force=force, cap=settings["parameter_cap"])
    workers = workers or settings["workers"]
    progress = settings["progress"] if progress is None else progress

    logger.info(f"Sweeping {kind} over {start}..{stop} ({len(parameters)} rows, {workers} workers)")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        results = executor.map(lambda p: sweep_row(kind, p, max_j=max_j, tol=tol), parameters)
        rows = list(tqdm(results, total=len(parameters), desc=f"{kind} sweep",
                         file=sys.stderr, disable=not progress or not parameters))
    return rows


def _csv_value(value, precision: int) -> str:
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, float):
        return format(value, f".{precision}g")
    return str(value)


def rows_to_csv(rows: Sequence[SweepRow], precision: Optional[int] = None) -> str:
    """Comma separated, header row, LF line endings, columns in SweepRow field order."""
    precision = load_config()["csv"]["float_precision"] if precision is None else precision
    names = [f.name for f in fields(SweepRow)]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(names)
    for row in rows:
        writer.writerow([_csv_value(getattr(row, name), precision) for name in names])
    return buffer.getvalue()


def write_csv(rows: Sequence[SweepRow], csv_path: Union[str, Path], precision: Optional[int] = None) -> Path:
    return write_text(csv_path, rows_to_csv(rows, precision))
