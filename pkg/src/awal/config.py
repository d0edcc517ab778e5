"""Environment-driven configuration for the platform service."""

from __future__ import annotations

import os
from dataclasses import dataclass

from awal.scoring import ScoringPolicy


@dataclass(frozen=True)
class ServiceConfig:
    bind: str = "127.0.0.1:8799"
    store_path: str = "awal.db"
    mt_backend_url: str = ""  # empty -> bundled stub backend
    mt_timeout_ms: int = 5000
    rejection_threshold: int = 2
    postedit_mode: str = "enforce"  # enforce | warn
    scoring_policy: ScoringPolicy = ScoringPolicy.EDIT_AWARE
    require_tamazight: bool = True

    @classmethod
    def from_env(cls, env: "dict | None" = None) -> "ServiceConfig":
        e = os.environ if env is None else env
        return cls(
            bind=e.get("AWAL_BIND", cls.bind),
            store_path=e.get("AWAL_STORE", cls.store_path),
            mt_backend_url=e.get("AWAL_MT_URL", cls.mt_backend_url),
            mt_timeout_ms=int(e.get("AWAL_MT_TIMEOUT_MS", cls.mt_timeout_ms)),
            rejection_threshold=int(
                e.get("AWAL_REJECTION_THRESHOLD", cls.rejection_threshold)
            ),
            postedit_mode=e.get("AWAL_POSTEDIT_MODE", cls.postedit_mode),
            scoring_policy=ScoringPolicy(
                e.get("AWAL_SCORING", cls.scoring_policy.value)
            ),
            require_tamazight=e.get("AWAL_REQUIRE_TAMAZIGHT", "1") not in ("0", "false", "no"),
        )

    @property
    def host(self) -> str:
        return self.bind.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.bind.rsplit(":", 1)[1])
