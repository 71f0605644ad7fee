"""
Perron-Frobenius analysis of word matrices.

Exponent searches run over the Boolean semiring. The dilatation is the
spectral radius, found by power iteration in float64 from the all-ones
vector with sup-norm renormalization.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from translen.configuration.multicurve import MulticurveConfiguration, TwistWord
from translen.configuration.validation import validate_penner
from translen.exceptions import ConvergenceError, SpectralPreconditionError
from translen.logger_utils.logger_utils import setup_logger
from translen.spectral.boolean import BooleanMatrix
from translen.spectral.config_loader import load_config
from translen.twist_engine.transition import TransitionMatrix, word_matrix

logger = setup_logger("spectral", module="spectral")

EXPONENT_NOTE = (
    "exponents are computed for the Penner word matrix and are sanity analogues "
    "of the train-track constant q, not q itself"
)


@dataclass(frozen=True)
class SpectralResult:
    dilatation: float
    residual: float
    iterations: int
    primitivity_exponent: Optional[int] = None
    diagonal_exponent: Optional[int] = None
    pseudo_anosov: Optional[bool] = None
    note: str = EXPONENT_NOTE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dilatation": self.dilatation,
            "residual": self.residual,
            "iterations": self.iterations,
            "primitivity_exponent": self.primitivity_exponent,
            "diagonal_exponent": self.diagonal_exponent,
            "pseudo_anosov": self.pseudo_anosov,
            "note": self.note,
        }


def default_cap(m: TransitionMatrix) -> int:
    factor = load_config()["exponents"]["exponent_cap_factor"]
    return max(1, int(factor) * m.dimension)


def _first_exponent(m: TransitionMatrix, cap: Optional[int], accept) -> Optional[int]:
    if cap is None:
        cap = default_cap(m)
    if cap < 1:
        raise SpectralPreconditionError(f"Exponent cap must be >= 1, got {cap}")
    base = BooleanMatrix.of(m)
    power = base
    for e in range(1, cap + 1):
        if accept(power):
            return e
        if e < cap:
            power = power @ base
    return None


def primitivity_exponent(m: TransitionMatrix, cap: Optional[int] = None) -> Optional[int]:
    """
    Least e <= cap with m^e entrywise positive, or None.

    The cap defaults to exponent_cap_factor * dimension.
    """
    exponent = _first_exponent(m, cap, BooleanMatrix.is_positive)
    logger.debug(f"primitivity_exponent({m.dimension}x{m.dimension}, cap={cap}) = {exponent}")
    return exponent


def diagonal_positive_exponent(m: TransitionMatrix, cap: Optional[int] = None) -> Optional[int]:
    """Least e <= cap with a positive diagonal entry in m^e, or None."""
    exponent = _first_exponent(m, cap, BooleanMatrix.has_positive_diagonal)
    logger.debug(f"diagonal_positive_exponent({m.dimension}x{m.dimension}, cap={cap}) = {exponent}")
    return exponent


def _as_float_matrix(m: TransitionMatrix) -> np.ndarray:
    try:
        return m.to_numpy()
    except OverflowError:
        raise SpectralPreconditionError("Matrix entries exceed the float64 range; power iteration is unavailable")


def dilatation(m: TransitionMatrix, tol: Optional[float] = None, max_iters: Optional[int] = None,
               cap: Optional[int] = None) -> SpectralResult:
    """
    Spectral radius of a primitive matrix by power iteration.

    The residual is ||Mx - lambda x||_inf / ||x||_inf for the current
    iterate x and lambda = ||Mx||_inf / ||x||_inf.

    Args:
        m: Nonnegative square matrix
        tol: Residual tolerance, defaults to the spectral settings
        max_iters: Iteration cap, defaults to the spectral settings
        cap: Cap for the primitivity and diagonal exponent searches

    Returns:
        SpectralResult: lambda, residual, iterations and exponents

    Raises:
        SpectralPreconditionError: If m is not primitive within the cap
        ConvergenceError: If the residual stays above tol after max_iters
    """
    settings = load_config()["power_iteration"]
    tol = settings["tolerance"] if tol is None else tol
    max_iters = settings["max_iterations"] if max_iters is None else max_iters
    if tol <= 0:
        raise SpectralPreconditionError(f"Tolerance must be positive, got {tol}")

    if cap is None:
        cap = default_cap(m)
    primitive_at = primitivity_exponent(m, cap)
    if primitive_at is None:
        raise SpectralPreconditionError(
            f"precondition failed: matrix is not primitive (no positive power up to exponent {cap})"
        )
    diagonal_at = diagonal_positive_exponent(m, cap)

    a = _as_float_matrix(m)
    x = np.ones(m.dimension)
    residual = float("inf")
    lam = 0.0
    for iteration in range(1, max_iters + 1):
        y = a @ x
        lam = float(np.max(y))
        residual = float(np.max(np.abs(y - lam * x)) / np.max(np.abs(x)))
        x = y / lam
        if residual < tol:
            logger.debug(f"Power iteration converged after {iteration} iterations: lambda={lam!r}, residual={residual:.3e}")
            return SpectralResult(
                dilatation=lam,
                residual=residual,
                iterations=iteration,
                primitivity_exponent=primitive_at,
                diagonal_exponent=diagonal_at,
            )
        if logger.isEnabledFor(logging.DEBUG) and iteration % 10000 == 0:
            logger.debug(f"iteration {iteration}: lambda={lam!r}, residual={residual:.3e}")

    logger.error(f"Power iteration did not converge in {max_iters} iterations (residual {residual:.3e})")
    raise ConvergenceError(
        f"power iteration did not converge within {max_iters} iterations: last residual {residual:.3e} >= {tol:g}",
        residual=residual,
        iterations=max_iters,
    )


def word_dilatation(config: MulticurveConfiguration, word: TwistWord, tol: Optional[float] = None,
                    max_iters: Optional[int] = None, cap: Optional[int] = None) -> SpectralResult:
    """
    Dilatation of a twist word's matrix.

    Penner validity is not required; it is recorded in the result and, when
    it holds, lambda > 1 is enforced.
    """
    report = validate_penner(config, word)
    result = dilatation(word_matrix(config, word), tol=tol, max_iters=max_iters, cap=cap)
    if report.passed and not result.dilatation > 1.0:
        raise SpectralPreconditionError(
            f"Penner word has dilatation {result.dilatation!r}; a pseudo-Anosov word needs lambda > 1"
        )
    logger.info(f"Dilatation of {config.surface.label()} word ({len(word)} letters): {result.dilatation!r}")
    return SpectralResult(
        dilatation=result.dilatation,
        residual=result.residual,
        iterations=result.iterations,
        primitivity_exponent=result.primitivity_exponent,
        diagonal_exponent=result.diagonal_exponent,
        pseudo_anosov=report.passed,
    )
