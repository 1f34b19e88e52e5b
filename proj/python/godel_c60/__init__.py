"""Dirac spectrum, persistent current and causality of a rotating defected fullerene."""

import json

from ._core import (
    ConfigError,
    DomainError,
    NoBracket,
    RotationSingular,
    StiffFailure,
    classify,
    maurer_cartan_residual,
    metric,
    persistent_current,
    shoot,
    spectrum,
)
from . import _core

__all__ = [
    "ConfigError",
    "DomainError",
    "NoBracket",
    "RotationSingular",
    "StiffFailure",
    "causality_table",
    "classify",
    "current_table",
    "maurer_cartan_residual",
    "metric",
    "oracle_table",
    "persistent_current",
    "shoot",
    "spectrum",
    "spectrum_table",
    "verify",
]


def _table(fn, config):
    return json.loads(fn(json.dumps(config or {})))


def spectrum_table(config=None):
    """Structured spectrum table for a configuration dict (same keys as the JSON config file)."""
    return _table(_core._spectrum_table, config)


def current_table(config=None):
    return _table(_core._current_table, config)


def causality_table(config=None):
    return _table(_core._causality_table, config)


def oracle_table(config=None):
    return _table(_core._oracle_table, config)


def verify(seed=20240607, jobs=0):
    """Runs every invariant suite and returns the report as a dict."""
    return json.loads(_core._verify(seed, jobs))
