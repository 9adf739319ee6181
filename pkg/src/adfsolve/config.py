from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Size caps. Exceeding one raises :class:`~adfsolve.errors.CapExceeded`."""

    max_undefined: int = 25       # undefined parents per statement inside gamma
    max_enum_three: int = 14      # |S| for 3^|S| scans
    max_enum_two: int = 20        # |S| for 2^|S| scans
    max_oracle_undefined: int = 16  # |S \ X| for the full-completion oracle
    max_parents: int = 20         # truth-table export


DEFAULT_LIMITS = Limits()
