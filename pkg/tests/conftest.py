from __future__ import annotations

import json
import os
import tempfile

# Keep rotating log files out of the source tree; must run before translen is imported
os.environ.setdefault("TRANSLEN_LOG_DIR", tempfile.mkdtemp(prefix="translen-logs-"))

import pytest

from translen.configuration.families import purebraid_family, torelli_family
from translen.configuration.multicurve import (
    Curve,
    FamilyInstance,
    TwistWord,
    Witness,
    build_configuration,
)
from translen.surface.surface import Surface


def make_two_curve_instance(word=("a", "b")) -> FamilyInstance:
    """Curves a (A) and b (B) meeting twice on D_4; gamma meets only b."""
    config = build_configuration(
        Surface.disk(4),
        [Curve("a", "A"), Curve("b", "B")],
        [[0, 2], [2, 0]],
        [Witness("gamma", (0, 2))],
    )
    return FamilyInstance(config=config, word=TwistWord(word), seed="a", witness="gamma")


def two_curve_document(**overrides) -> dict:
    document = {
        "surface": {"genus": 0, "punctures": 4, "boundary": 1},
        "curves": [
            {"name": "a", "class": "A", "separating": True},
            {"name": "b", "class": "B", "separating": True},
        ],
        "intersections": [[0, 2], [2, 0]],
        "witnesses": [{"name": "gamma", "intersections": [0, 2]}],
        "word": ["a", "b"],
        "seed": "a",
        "witness": "gamma",
    }
    document.update(overrides)
    return document


@pytest.fixture
def two_curve():
    return make_two_curve_instance()


@pytest.fixture
def purebraid5():
    return purebraid_family(5)


@pytest.fixture
def torelli13():
    return torelli_family(13)


@pytest.fixture
def write_document(tmp_path):
    """Write a configuration document to a JSON file and return its path."""

    def _write(document: dict, name: str = "config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return _write
