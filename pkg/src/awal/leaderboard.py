"""Gamification points ledger and leaderboard ranking."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, Mapping

# Users without a known registration timestamp sort after everyone else on
# ties (unreachable through the service, which always has profiles).
_LAST = datetime.max.replace(tzinfo=timezone.utc)


@dataclass(frozen=True)
class LeaderboardRow:
    rank: int
    user_id: str
    points: int


def compute_leaderboard(
    ledger: Mapping[str, int],
    registered_at: Mapping[str, datetime],
) -> list[LeaderboardRow]:
    """Rank ledger entries: points descending, ties to the earlier
    registration, ranks 1-based with no gaps."""
    ordered = sorted(
        ledger.items(),
        key=lambda kv: (-kv[1], registered_at.get(kv[0], _LAST), kv[0]),
    )
    return [
        LeaderboardRow(rank=i, user_id=user, points=points)
        for i, (user, points) in enumerate(ordered, start=1)
    ]


def total_points(awards: Iterable[int]) -> int:
    return sum(awards)
