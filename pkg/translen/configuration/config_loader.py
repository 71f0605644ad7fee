"""
Configuration document ingestion and emission.

A document is JSON (or YAML for .yaml/.yml files) with the keys
``surface``, ``curves``, ``intersections``, ``witnesses``, ``word``,
``seed`` and ``witness``; an optional ``family`` block carries the
generator metadata so a written family reloads to the same instance.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

import yaml

from translen.configuration.multicurve import (
    Curve,
    FamilyInstance,
    MulticurveConfiguration,
    TwistWord,
    Witness,
)
from translen.exceptions import StructuralError, TranslenError
from translen.logger_utils.logger_utils import setup_logger, ENCODING
from translen.surface.surface import Surface
from translen.utils.file_tools import write_json
from translen.utils.path_utils import resolve_path

logger = setup_logger("config_loader", module="configuration")

MODULE_DIR = Path(__file__).resolve().parent
PACKAGE_EXAMPLE = resolve_path("config/two_curve_example.json", MODULE_DIR)

REQUIRED_KEYS = ("surface", "curves", "intersections", "word", "seed", "witness")


def _read_document(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise StructuralError(f"Configuration file not found: {path}")
    with open(path, "r", encoding=ENCODING) as f:
        text = f.read()
    if path.suffix.lower() in (".yaml", ".yml"):
        try:
            document = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise StructuralError(f"Error parsing YAML in {path}: {e}")
    else:
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise StructuralError(f"Error parsing JSON in {path}: {e.msg} at line {e.lineno}, column {e.colno}")
    if not isinstance(document, dict):
        raise StructuralError(f"{path}: top level must be an object")
    return document


def _expect(value: Any, kind: type, field: str) -> Any:
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise StructuralError(f"field '{field}' must be {kind.__name__}, got {type(value).__name__}")
    return value


def _parse_surface(raw: Any) -> Surface:
    _expect(raw, dict, "surface")
    try:
        return Surface(
            genus=_expect(raw.get("genus", 0), int, "surface.genus"),
            punctures=_expect(raw.get("punctures", 0), int, "surface.punctures"),
            boundary=_expect(raw.get("boundary", 0), int, "surface.boundary"),
        )
    except TranslenError as e:
        raise StructuralError(f"field 'surface': {e}")


def _parse_curves(raw: Any) -> List[Curve]:
    _expect(raw, list, "curves")
    curves = []
    for position, entry in enumerate(raw):
        where = f"curves[{position}]"
        _expect(entry, dict, where)
        for key in ("name", "class"):
            if key not in entry:
                raise StructuralError(f"field '{where}.{key}' is missing")
        separating = entry.get("separating", True)
        _expect(separating, bool, f"{where}.separating")
        curves.append(Curve(_expect(entry["name"], str, f"{where}.name"), entry["class"], separating))
    return curves


def _parse_matrix(raw: Any, size: int) -> List[List[int]]:
    _expect(raw, list, "intersections")
    if len(raw) != size:
        raise StructuralError(f"field 'intersections' has {len(raw)} rows, expected {size} (one per curve)")
    for i, row in enumerate(raw):
        _expect(row, list, f"intersections[{i}]")
        if len(row) != size:
            raise StructuralError(f"field 'intersections[{i}]' has {len(row)} entries, expected {size}")
        for j, value in enumerate(row):
            _expect(value, int, f"intersections[{i}][{j}]")
    for i in range(size):
        for j in range(i + 1, size):
            if raw[i][j] != raw[j][i]:
                raise StructuralError(
                    f"field 'intersections' is not symmetric: row {i + 1} column {j + 1} is {raw[i][j]} "
                    f"but row {j + 1} column {i + 1} is {raw[j][i]} (intersections[{i}][{j}] vs "
                    f"intersections[{j}][{i}])"
                )
    return raw


def _parse_witnesses(raw: Any) -> List[Witness]:
    _expect(raw, list, "witnesses")
    witnesses = []
    for position, entry in enumerate(raw):
        where = f"witnesses[{position}]"
        _expect(entry, dict, where)
        name = _expect(entry.get("name"), str, f"{where}.name")
        row = _expect(entry.get("intersections"), list, f"{where}.intersections")
        for j, value in enumerate(row):
            _expect(value, int, f"{where}.intersections[{j}]")
        witnesses.append(Witness(name, tuple(row)))
    return witnesses


def _parse_fraction(raw: Any, field: str) -> Fraction:
    _expect(raw, dict, field)
    try:
        return Fraction(int(raw["num"]), int(raw["den"]))
    except (KeyError, ValueError, ZeroDivisionError) as e:
        raise StructuralError(f"field '{field}' must be {{num, den}} integers: {e}")


def parse_configuration(document: Dict[str, Any]) -> FamilyInstance:
    """Build a FamilyInstance from an already-decoded document."""
    missing = [key for key in REQUIRED_KEYS if key not in document]
    if missing:
        raise StructuralError(f"Missing required field(s): {', '.join(missing)}")

    surface = _parse_surface(document["surface"])
    curves = _parse_curves(document["curves"])
    matrix = _parse_matrix(document["intersections"], len(curves))
    witnesses = _parse_witnesses(document.get("witnesses", []))
    config = MulticurveConfiguration(surface, tuple(curves), matrix, tuple(witnesses))

    letters = _expect(document["word"], list, "word")
    for position, letter in enumerate(letters):
        _expect(letter, str, f"word[{position}]")

    family = document.get("family") or {}
    _expect(family, dict, "family")
    claimed_j = family.get("claimed_j")
    claimed_bound = family.get("claimed_bound")
    metadata = family.get("metadata", {})
    _expect(metadata, dict, "family.metadata")
    return FamilyInstance(
        config=config,
        word=TwistWord(tuple(letters)),
        seed=_expect(document["seed"], str, "seed"),
        witness=_expect(document["witness"], str, "witness"),
        claimed_j=_expect(claimed_j, int, "family.claimed_j") if claimed_j is not None else None,
        claimed_bound=_parse_fraction(claimed_bound, "family.claimed_bound") if claimed_bound is not None else None,
        kind=_expect(family.get("kind", "custom"), str, "family.kind"),
        parameter=_expect(family["parameter"], int, "family.parameter") if family.get("parameter") is not None else None,
        metadata=tuple(sorted((str(k), str(v)) for k, v in metadata.items())),
    )


def load_configuration(config_path: Union[str, Path]) -> FamilyInstance:
    """
    Load a configuration document.

    Raises:
        StructuralError: With a field diagnostic if the document is malformed
    """
    path = resolve_path(config_path)
    logger.debug(f"Loading configuration from: {path}")
    instance = parse_configuration(_read_document(path))
    logger.info(
        f"Loaded configuration {path.name}: {instance.surface.label()}, "
        f"{instance.config.dimension} curves, {len(instance.word)} letters"
    )
    return instance


def configuration_to_dict(inst: FamilyInstance) -> Dict[str, Any]:
    config = inst.config
    document: Dict[str, Any] = {
        "surface": config.surface.to_dict(),
        "curves": [
            {"name": c.name, "class": c.curve_class.value, "separating": c.separating} for c in config.curves
        ],
        "intersections": [list(row) for row in config.intersections],
        "witnesses": [{"name": w.name, "intersections": list(w.intersections)} for w in config.witnesses],
        "word": list(inst.word.letters),
        "seed": inst.seed,
        "witness": inst.witness,
    }
    family: Dict[str, Any] = {"kind": inst.kind}
    if inst.parameter is not None:
        family["parameter"] = inst.parameter
    if inst.claimed_j is not None:
        family["claimed_j"] = inst.claimed_j
    if inst.claimed_bound is not None:
        family["claimed_bound"] = {
            "num": str(inst.claimed_bound.numerator),
            "den": str(inst.claimed_bound.denominator),
        }
    if inst.metadata:
        family["metadata"] = dict(inst.metadata)
    document["family"] = family
    return document


def dump_configuration(inst: FamilyInstance, config_path: Union[str, Path]) -> Path:
    """Write the configuration document as JSON."""
    return write_json(config_path, configuration_to_dict(inst))
