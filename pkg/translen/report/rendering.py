"""
Text and JSON rendering of records, certificates and spectral results.

Bounds are printed as "p/q" in text and as {num, den} strings in JSON.
"""

import json
from typing import Any, Dict, List

from translen.bounds.certificates import certificate_to_dict, format_fraction, record_to_dict
from translen.bounds.lower import LowerBoundRecord
from translen.bounds.upper import UpperBoundCertificate
from translen.spectral.spectral import SpectralResult


def render_json(document: Dict[str, Any]) -> str:
    return json.dumps(document, indent=2)


def render_record(record: LowerBoundRecord, fmt: str = "text", trace: bool = True) -> str:
    if fmt == "json":
        return render_json(record_to_dict(record))

    lines: List[str] = [
        f"group: {record.group_kind.value if record.group_kind else 'custom'}",
        f"surface: {record.surface.label()} (chi = {record.surface.chi})",
        f"q = {record.q}, r = {record.r}, k = {record.k}, w = {record.w}",
        f"bound: {format_fraction(record.bound)}",
    ]
    if record.published_w is not None:
        lines.append(f"published w: {record.published_w} (bound {format_fraction(record.published_bound)})")
        if record.discrepancy:
            lines.append(f"discrepancy: derived w = {record.w} differs from published w = {record.published_w}")
    if trace:
        lines.append("derivation:")
        lines.extend(f"  {line}" for line in record.trace())
    return "\n".join(lines)


def render_certificate(cert: UpperBoundCertificate, fmt: str = "text", trace: bool = False) -> str:
    if fmt == "json":
        document = certificate_to_dict(cert)
        if not trace:
            document.pop("trace")
        return render_json(document)

    inst = cert.instance
    parameter = f" (parameter {inst.parameter})" if inst.parameter is not None else ""
    lines = [
        f"family: {inst.kind}{parameter}",
        f"surface: {inst.surface.label()}",
        f"word: {inst.word.render(inst.config)}",
        f"seed: {inst.seed}, witness: {inst.witness}",
        f"mode: {cert.mode}",
        f"j: {cert.j}",
        f"bound: {format_fraction(cert.bound)}",
    ]
    if inst.claimed_bound is not None:
        lines.append(f"claimed bound: {format_fraction(inst.claimed_bound)} (claimed j = {inst.claimed_j})")
    if cert.witness_hit_at is None:
        lines.append(f"witness still disjoint at max_j = {cert.max_j}")
    else:
        lines.append(f"witness hit at: {cert.witness_hit_at}")
    for assumption in cert.validation.assumptions:
        lines.append(f"assumption: {assumption}")
    if trace:
        lines.append("trace:")
        for t, step in enumerate(cert.trace):
            names = sorted(step, key=inst.config.index_of)
            lines.append(f"  t={t}: {', '.join(names) if names else '(empty)'}")
    return "\n".join(lines)


def render_spectral(result: SpectralResult, fmt: str = "text") -> str:
    if fmt == "json":
        return render_json(result.to_dict())

    def _optional(value) -> str:
        return "absent" if value is None else str(value)

    lines = [
        f"dilatation: {result.dilatation!r}",
        f"residual: {result.residual:.3e}",
        f"iterations: {result.iterations}",
        f"primitivity exponent: {_optional(result.primitivity_exponent)}",
        f"diagonal exponent: {_optional(result.diagonal_exponent)}",
    ]
    if result.pseudo_anosov is not None:
        lines.append(f"penner valid (pseudo-Anosov): {result.pseudo_anosov}")
    lines.append(f"note: {result.note}")
    return "\n".join(lines)
