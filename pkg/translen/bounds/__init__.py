from translen.bounds.lower import (
    GroupKind,
    LowerBoundRecord,
    PigeonholeCase,
    QDerivation,
    SingularityData,
    bound_from_constants,
    derive_q,
    euler_poincare_check,
    lefschetz_number,
    lefschetz_torelli,
    lower_bound,
    q_derivation,
)
from translen.bounds.upper import UpperBoundCertificate, certify_upper, power_certificate
from translen.bounds.interval import BoundInterval, interval
from translen.bounds.certificates import (
    certificate_to_dict,
    format_fraction,
    fraction_to_dict,
    record_to_dict,
)

__all__ = [
    "BoundInterval",
    "GroupKind",
    "LowerBoundRecord",
    "PigeonholeCase",
    "QDerivation",
    "SingularityData",
    "UpperBoundCertificate",
    "bound_from_constants",
    "certificate_to_dict",
    "certify_upper",
    "derive_q",
    "euler_poincare_check",
    "format_fraction",
    "fraction_to_dict",
    "interval",
    "lefschetz_number",
    "lefschetz_torelli",
    "lower_bound",
    "power_certificate",
    "q_derivation",
    "record_to_dict",
]
