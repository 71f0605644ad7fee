"""
JSON form of lower-bound records and upper-bound certificates.

Exact rationals are written as {"num": "...", "den": "..."} strings so the
documents never carry a rounded bound.
"""

from fractions import Fraction
from typing import Any, Dict, Optional

from translen.bounds.lower import LowerBoundRecord, QDerivation
from translen.bounds.upper import UpperBoundCertificate


def format_fraction(value: Fraction) -> str:
    """Always "num/den", also for integers ("1/1")."""
    return f"{value.numerator}/{value.denominator}"


def fraction_to_dict(value: Optional[Fraction]) -> Optional[Dict[str, str]]:
    if value is None:
        return None
    return {"num": str(value.numerator), "den": str(value.denominator)}


def derivation_to_dict(derivation: QDerivation) -> Dict[str, Any]:
    return {
        "q": derivation.q,
        "source": derivation.source,
        "lefschetz": derivation.lefschetz,
        "cases": [
            {
                "case": case.name,
                "branches_per_singularity": case.branches_per_singularity,
                "q_constant": case.q_constant,
                "count_bound": fraction_to_dict(case.count_bound),
                "forced_branches": fraction_to_dict(case.forced_branches),
                "budget": case.budget,
                "holds": case.holds,
            }
            for case in derivation.cases
        ],
        "chain": derivation.chain(),
    }


def record_to_dict(record: LowerBoundRecord) -> Dict[str, Any]:
    document = {
        "kind": record.group_kind.value if record.group_kind else None,
        "parameters": record.surface.to_dict(),
        "surface": record.surface.label(),
        "q": record.q,
        "r": record.r,
        "k": record.k,
        "w": record.w,
        "bound": fraction_to_dict(record.bound),
        "published_w": record.published_w,
        "published_bound": fraction_to_dict(record.published_bound),
        "discrepancy": record.discrepancy,
    }
    if record.derivation is not None:
        document["derivation"] = derivation_to_dict(record.derivation)
    return document


def certificate_to_dict(cert: UpperBoundCertificate) -> Dict[str, Any]:
    inst = cert.instance
    return {
        "kind": inst.kind,
        "parameters": {"parameter": inst.parameter, **inst.surface.to_dict()},
        "surface": inst.surface.label(),
        "seed": inst.seed,
        "witness": inst.witness,
        "mode": cert.mode,
        "max_j": cert.max_j,
        "j": cert.j,
        "bound": fraction_to_dict(cert.bound),
        "claimed_j": inst.claimed_j,
        "claimed_bound": fraction_to_dict(inst.claimed_bound),
        "witness_hit_at": cert.witness_hit_at,
        "trace": [sorted(step, key=inst.config.index_of) for step in cert.trace],
        "validation": cert.validation.to_dict(),
        "metadata": dict(inst.metadata),
    }
