from translen.configuration.multicurve import (
    Curve,
    CurveClass,
    FamilyInstance,
    MulticurveConfiguration,
    TwistWord,
    Witness,
    build_configuration,
)
from translen.configuration.validation import ValidationReport, require_penner, validate_penner
from translen.configuration.families import (
    generate_family,
    is_torelli,
    purebraid_family,
    torelli_family,
    torelli_verdict,
)
from translen.configuration.config_loader import (
    configuration_to_dict,
    dump_configuration,
    load_configuration,
    parse_configuration,
)

__all__ = [
    "Curve",
    "CurveClass",
    "FamilyInstance",
    "MulticurveConfiguration",
    "TwistWord",
    "ValidationReport",
    "Witness",
    "build_configuration",
    "configuration_to_dict",
    "dump_configuration",
    "generate_family",
    "is_torelli",
    "load_configuration",
    "parse_configuration",
    "purebraid_family",
    "require_penner",
    "torelli_family",
    "torelli_verdict",
    "validate_penner",
]
