"""
Penner validity checks for a configuration and a twist word.

A passing pair is pseudo-Anosov by Penner's theorem. Whether A and B fill
the surface cannot be decided from an intersection matrix; connectivity of
the intersection graph is checked instead and filling is recorded as a
declared assumption.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx

from translen.configuration.multicurve import MulticurveConfiguration, TwistWord
from translen.exceptions import ValidationError
from translen.logger_utils.logger_utils import setup_logger

logger = setup_logger("validation", module="configuration")

CHECK_ORDER = (
    "zero_diagonal",
    "symmetry",
    "class_disjointness",
    "connectivity",
    "penner_completeness",
)

FILLING_ASSUMPTION = "A and B together fill the surface (declared, not verified)"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: Tuple[CheckResult, ...]
    assumptions: Tuple[str, ...] = field(default=(FILLING_ASSUMPTION,))

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def pseudo_anosov(self) -> bool:
        """Certified by Penner's theorem when every check passes."""
        return self.passed

    @property
    def failures(self) -> Tuple[str, ...]:
        return tuple(check.name for check in self.checks if not check.passed)

    def check(self, name: str) -> CheckResult:
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name)

    def summary(self) -> str:
        lines = []
        for result in self.checks:
            status = "pass" if result.passed else "FAIL"
            line = f"{result.name}: {status}"
            if result.detail:
                line += f" ({result.detail})"
            lines.append(line)
        lines.extend(f"assumption: {text}" for text in self.assumptions)
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, object]:
        return {
            "passed": self.passed,
            "checks": {r.name: {"passed": r.passed, "detail": r.detail} for r in self.checks},
            "assumptions": list(self.assumptions),
        }


def _zero_diagonal(config: MulticurveConfiguration) -> CheckResult:
    bad = [config.curves[i].name for i in range(config.dimension) if config.intersections[i][i] != 0]
    return CheckResult("zero_diagonal", not bad, f"nonzero self-intersection: {', '.join(bad)}" if bad else "")


def _symmetry(config: MulticurveConfiguration) -> CheckResult:
    m = config.intersections
    for i in range(config.dimension):
        for j in range(i + 1, config.dimension):
            if m[i][j] != m[j][i]:
                return CheckResult(
                    "symmetry", False,
                    f"intersections[{i}][{j}] = {m[i][j]} but intersections[{j}][{i}] = {m[j][i]}"
                )
    return CheckResult("symmetry", True)


def _class_disjointness(config: MulticurveConfiguration) -> CheckResult:
    curves = config.curves
    for i in range(config.dimension):
        for j in range(i + 1, config.dimension):
            if curves[i].curve_class is curves[j].curve_class and config.intersections[i][j] > 0:
                return CheckResult(
                    "class_disjointness", False,
                    f"'{curves[i].name}' and '{curves[j].name}' are both class "
                    f"{curves[i].curve_class.value} but intersect {config.intersections[i][j]} times"
                )
    return CheckResult("class_disjointness", True)


def _connectivity(config: MulticurveConfiguration) -> CheckResult:
    graph = config.intersection_graph()
    if nx.is_connected(graph):
        return CheckResult("connectivity", True)
    start = config.curve_names[0]
    seen = nx.node_connected_component(graph, start)
    missing = [name for name in config.curve_names if name not in seen]
    return CheckResult("connectivity", False, f"not reachable from '{start}': {', '.join(missing)}")


def _penner_completeness(config: MulticurveConfiguration, word: TwistWord) -> CheckResult:
    used = set(word.letters)
    missing = [name for name in config.curve_names if name not in used]
    if missing:
        return CheckResult("penner_completeness", False, f"never twisted: {', '.join(missing)}")
    return CheckResult("penner_completeness", True)


def validate_penner(config: MulticurveConfiguration, word: TwistWord) -> ValidationReport:
    """
    Check the conditions of Penner's construction.

    Raises:
        StructuralError: If the word names something that is not a configuration curve
    """
    word.check_against(config)
    checks: List[CheckResult] = [
        _zero_diagonal(config),
        _symmetry(config),
        _class_disjointness(config),
        _connectivity(config),
        _penner_completeness(config, word),
    ]
    report = ValidationReport(checks=tuple(checks))
    if report.passed:
        logger.debug(f"Penner validation passed for {config.surface.label()} ({len(word)} letters)")
    else:
        logger.info(f"Penner validation failed: {', '.join(report.failures)}")
    return report


def require_penner(config: MulticurveConfiguration, word: TwistWord) -> ValidationReport:
    """Validate and raise ValidationError carrying the report on failure."""
    report = validate_penner(config, word)
    if not report.passed:
        details = "; ".join(
            f"{r.name}: {r.detail}" if r.detail else r.name for r in report.checks if not r.passed
        )
        raise ValidationError(f"Penner validation failed - {details}", report=report)
    return report
