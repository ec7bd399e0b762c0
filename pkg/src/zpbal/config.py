"""Shared budget/seed configuration for enumeration sweeps."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SweepConfig:
    """Budget knobs for exhaustive and sampled sweeps.

    enumeration_cap: largest carrier size an exhaustive sweep may visit.
    stall_rounds: consecutive non-enlarging random samples before giving up.
    seed: root of all pseudo-randomness; recorded in emitted artifacts.
    """

    enumeration_cap: int = 6561
    stall_rounds: int = 64
    seed: int = 0

    def __post_init__(self):
        if self.enumeration_cap < 1 or self.stall_rounds < 1:
            raise ValueError("caps must be positive")


DEFAULT_CONFIG = SweepConfig()
