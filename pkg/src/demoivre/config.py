"""Shared tuning knobs for the numeric-assisted decision procedures."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_DEN = 10**12
DEFAULT_TRIAL_BOUND = 10**6


@dataclass(frozen=True)
class Settings:
    precision_bits: int = 192
    max_den: int = DEFAULT_MAX_DEN
    trial_bound: int = DEFAULT_TRIAL_BOUND
