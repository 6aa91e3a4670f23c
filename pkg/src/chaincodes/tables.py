"""Frozen reference counts of self-orthogonal codes at desk scale.

Each table fixes one preset ring and one length and lists the number of
self-orthogonal codes per type.  The values are pinned here so the closed
forms and the exhaustive search can both be checked against them; they
were cross-verified by exhaustive enumeration at these parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

__all__ = ["GoldenTable", "GOLDEN_TABLES"]


@dataclass(frozen=True)
class GoldenTable:
    index: int
    preset: str
    n: int
    rows: Tuple[Tuple[Tuple[int, ...], int], ...]


GOLDEN_TABLES: Dict[int, GoldenTable] = {
    1: GoldenTable(
        index=1,
        preset="R4,1",
        n=3,
        rows=(
            ((0, 0, 0, 1), 7),
            ((0, 0, 0, 2), 7),
            ((0, 0, 0, 3), 1),
            ((0, 0, 1, 0), 28),
            ((0, 0, 1, 1), 42),
            ((0, 0, 1, 2), 7),
            ((0, 0, 2, 0), 28),
            ((0, 0, 2, 1), 7),
            ((0, 0, 3, 0), 1),
            ((0, 1, 0, 0), 48),
            ((0, 1, 0, 1), 72),
            ((0, 1, 0, 2), 12),
            ((0, 1, 1, 0), 24),
            ((0, 1, 1, 1), 6),
            ((1, 0, 0, 0), 0),
            ((1, 0, 0, 1), 0),
            ((1, 0, 1, 0), 0),
        ),
    ),
    2: GoldenTable(
        index=2,
        preset="R5,1",
        n=3,
        rows=(
            ((0, 0, 0, 0, 1), 7),
            ((0, 0, 0, 0, 2), 7),
            ((0, 0, 0, 0, 3), 1),
            ((0, 0, 0, 1, 0), 28),
            ((0, 0, 0, 1, 1), 42),
            ((0, 0, 0, 1, 2), 7),
            ((0, 0, 0, 2, 0), 28),
            ((0, 0, 0, 2, 1), 7),
            ((0, 0, 0, 3, 0), 1),
            ((0, 0, 1, 0, 0), 48),
            ((0, 0, 1, 0, 1), 72),
            ((0, 0, 1, 0, 2), 12),
            ((0, 0, 1, 1, 0), 72),
            ((0, 0, 1, 1, 1), 18),
            ((0, 0, 1, 2, 0), 3),
            ((0, 1, 0, 0, 0), 96),
            ((0, 1, 0, 0, 1), 144),
            ((0, 1, 0, 0, 2), 24),
            ((0, 1, 0, 1, 0), 48),
            ((0, 1, 0, 1, 1), 12),
            ((1, 0, 0, 0, 0), 0),
            ((1, 0, 0, 0, 1), 0),
            ((1, 0, 0, 1, 0), 0),
        ),
    ),
    3: GoldenTable(
        index=3,
        preset="R6,2",
        n=2,
        rows=(
            ((0, 0, 0, 0, 0, 1), 5),
            ((0, 0, 0, 0, 0, 2), 1),
            ((0, 0, 0, 0, 1, 0), 20),
            ((0, 0, 0, 0, 1, 1), 5),
            ((0, 0, 0, 0, 2, 0), 1),
            ((0, 0, 0, 1, 0, 0), 80),
            ((0, 0, 0, 1, 0, 1), 20),
            ((0, 0, 0, 1, 1, 0), 5),
            ((0, 0, 0, 2, 0, 0), 1),
            ((0, 0, 1, 0, 0, 0), 64),
            ((0, 0, 1, 0, 0, 1), 16),
            ((0, 0, 1, 0, 1, 0), 4),
            ((0, 1, 0, 0, 0, 0), 0),
            ((0, 1, 0, 0, 0, 1), 0),
            ((1, 0, 0, 0, 0, 0), 0),
        ),
    ),
    4: GoldenTable(
        index=4,
        preset="R4,1",
        n=4,
        rows=(
            ((0, 0, 0, 1), 15),
            ((0, 0, 0, 2), 35),
            ((0, 0, 0, 3), 15),
            ((0, 0, 0, 4), 1),
            ((0, 0, 1, 0), 120),
            ((0, 0, 1, 1), 420),
            ((0, 0, 1, 2), 210),
            ((0, 0, 1, 3), 15),
            ((0, 0, 2, 0), 560),
            ((0, 0, 2, 1), 420),
            ((0, 0, 2, 2), 35),
            ((0, 0, 3, 0), 120),
            ((0, 0, 3, 1), 15),
            ((0, 0, 4, 0), 1),
            ((0, 1, 0, 0), 448),
            ((0, 1, 0, 1), 1568),
            ((0, 1, 0, 2), 784),
            ((0, 1, 0, 3), 56),
            ((0, 1, 1, 0), 1344),
            ((0, 1, 1, 1), 1008),
            ((0, 1, 1, 2), 84),
            ((0, 1, 2, 0), 112),
            ((0, 1, 2, 1), 14),
            ((0, 2, 0, 0), 384),
            ((0, 2, 0, 1), 288),
            ((0, 2, 0, 2), 24),
            ((1, 0, 0, 0), 256),
            ((1, 0, 0, 1), 384),
            ((1, 0, 0, 2), 64),
            ((1, 0, 1, 0), 384),
            ((1, 0, 1, 1), 96),
            ((1, 0, 2, 0), 16),
            ((1, 1, 0, 0), 384),
            ((1, 1, 0, 1), 96),
            ((2, 0, 0, 0), 0),
        ),
    ),
}
