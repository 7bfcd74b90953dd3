"""Run configuration: tolerances, construction parameters, sampling budgets.

A single JSON file (documented keys below) drives reproducible runs; the
``NORMLOGIC_CONFIG`` environment variable points at it and CLI flags override
individual fields.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

#: JSON keys accepted in a config file.
CONFIG_KEYS = ("M", "qCandidates", "rGridStep", "tolGeom", "tolLogic",
               "sampleBudget", "seed")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or an integer into an exact rational."""
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text))


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class Config:
    m: Optional[int] = None                       # None: smallest concave M
    q_candidates: Sequence[Fraction] = field(
        default_factory=lambda: (Fraction(1, 8), Fraction(1, 10),
                                 Fraction(1, 16), Fraction(1, 32)))
    r_grid_step: Fraction = Fraction(1, 64)
    tol_geom: float = 1e-9
    tol_logic: float = 1e-6
    sample_budget: int = 100_000
    seed: int = 0

    def override(self, **kwargs) -> "Config":
        """Copy with any non-None keyword replaced."""
        updates = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **updates)


def load_config(path: Optional[str] = None) -> Config:
    """Load a config file, falling back to $NORMLOGIC_CONFIG, then defaults."""
    if path is None:
        path = os.environ.get("NORMLOGIC_CONFIG")
    if path is None:
        return Config()
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    unknown = set(raw) - set(CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    cfg = Config()
    return Config(
        m=raw.get("M", cfg.m),
        q_candidates=tuple(parse_rational(v) for v in raw["qCandidates"])
        if "qCandidates" in raw else cfg.q_candidates,
        r_grid_step=parse_rational(raw["rGridStep"])
        if "rGridStep" in raw else cfg.r_grid_step,
        tol_geom=float(raw.get("tolGeom", cfg.tol_geom)),
        tol_logic=float(raw.get("tolLogic", cfg.tol_logic)),
        sample_budget=int(raw.get("sampleBudget", cfg.sample_budget)),
        seed=int(raw.get("seed", cfg.seed)),
    )
