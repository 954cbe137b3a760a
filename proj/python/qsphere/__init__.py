"""Exact arithmetic on the quantum 4-sphere and its instanton projection."""

import json

from ._core import (
    InvalidParameter,
    ParseError,
    Poly,
    QLaurent,
    ZeroEvaluationError,
    character_check,
    golden_json,
    ideal_generators,
    iso_images,
    normal_form,
    projection_is_idempotent,
    relation_residuals,
    verify_cycle,
)
from ._core import chern_json as _chern_json


def chern(n):
    """ch_n of the instanton projection as {"degree": ..., "terms": [...]}."""
    return json.loads(_chern_json(n))


def golden(name):
    """Reference chain ("ch0", "ch1", "ch2", "bch2") as a dict."""
    return json.loads(golden_json(name))


__all__ = [
    "InvalidParameter",
    "ParseError",
    "Poly",
    "QLaurent",
    "ZeroEvaluationError",
    "character_check",
    "chern",
    "golden",
    "ideal_generators",
    "iso_images",
    "normal_form",
    "projection_is_idempotent",
    "relation_residuals",
    "verify_cycle",
]
