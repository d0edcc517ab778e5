"""SQLite-backed durable store.

One file per platform instance. Connections are per-thread (WAL mode), so
reads run concurrently while writes serialize through short BEGIN IMMEDIATE
transactions: vote application and the contribution+ledger commit are atomic
by construction.

Vote counts are denormalized onto the contributions row (kept in the same
transaction as the votes rows) because exports carry counts but not voter
identities; re-imported data restores counts without synthesizing voters.
"""

from __future__ import annotations

import sqlite3
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime, timezone

from awal.contributions import (
    Dialect,
    SourceProvenance,
    Status,
    TargetProvenance,
    Verdict,
    decide,
)
from awal.errors import AlreadyDecided, DuplicateVote, NameTaken, NotFound, SelfVote
from awal.scripts import ScriptClass
from awal.seeds import SeedSentence

_SCHEMA = """
CREATE TABLE IF NOT EXISTS users (
    id TEXT PRIMARY KEY,
    display_name TEXT NOT NULL UNIQUE,
    registered_at TEXT NOT NULL,
    auth_token TEXT NOT NULL UNIQUE
);
CREATE TABLE IF NOT EXISTS contributions (
    id INTEGER PRIMARY KEY,
    author TEXT NOT NULL,
    src_lang TEXT NOT NULL,
    tgt_lang TEXT NOT NULL,
    src_text TEXT NOT NULL,
    tgt_text TEXT NOT NULL,
    script TEXT NOT NULL,
    declared_script TEXT,
    script_mismatch INTEGER NOT NULL DEFAULT 0,
    dialect TEXT NOT NULL,
    src_provenance TEXT NOT NULL,
    tgt_provenance TEXT NOT NULL,
    mt_suggestion TEXT,
    status TEXT NOT NULL,
    approvals INTEGER NOT NULL DEFAULT 0,
    rejections INTEGER NOT NULL DEFAULT 0,
    points_awarded INTEGER NOT NULL DEFAULT 0,
    created_at TEXT NOT NULL
);
CREATE INDEX IF NOT EXISTS ix_contributions_status ON contributions(status, id);
CREATE TABLE IF NOT EXISTS votes (
    contribution_id INTEGER NOT NULL,
    voter TEXT NOT NULL,
    verdict TEXT NOT NULL,
    cast_at TEXT NOT NULL,
    PRIMARY KEY (contribution_id, voter)
);
CREATE TABLE IF NOT EXISTS ledger (
    user_id TEXT PRIMARY KEY,
    points INTEGER NOT NULL CHECK (points >= 0)
);
CREATE TABLE IF NOT EXISTS seeds (
    id INTEGER PRIMARY KEY,
    language TEXT NOT NULL,
    text TEXT NOT NULL,
    source_name TEXT NOT NULL,
    license TEXT NOT NULL,
    UNIQUE (language, text)
);
CREATE TABLE IF NOT EXISTS seed_history (
    user_id TEXT NOT NULL,
    seed_id INTEGER NOT NULL,
    PRIMARY KEY (user_id, seed_id)
);
"""


def utcnow_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="microseconds")


@dataclass(frozen=True)
class UserRow:
    id: str
    display_name: str
    registered_at: str
    auth_token: str


@dataclass(frozen=True)
class ContributionRow:
    id: int
    author: str
    src_lang: str
    tgt_lang: str
    src_text: str
    tgt_text: str
    script: ScriptClass
    declared_script: "ScriptClass | None"
    script_mismatch: bool
    dialect: Dialect
    src_provenance: SourceProvenance
    tgt_provenance: TargetProvenance
    mt_suggestion: "str | None"
    status: Status
    approvals: int
    rejections: int
    points_awarded: int
    created_at: str


def _to_row(r: sqlite3.Row) -> ContributionRow:
    return ContributionRow(
        id=r["id"],
        author=r["author"],
        src_lang=r["src_lang"],
        tgt_lang=r["tgt_lang"],
        src_text=r["src_text"],
        tgt_text=r["tgt_text"],
        script=ScriptClass(r["script"]),
        declared_script=ScriptClass(r["declared_script"]) if r["declared_script"] else None,
        script_mismatch=bool(r["script_mismatch"]),
        dialect=Dialect(r["dialect"]),
        src_provenance=SourceProvenance(r["src_provenance"]),
        tgt_provenance=TargetProvenance(r["tgt_provenance"]),
        mt_suggestion=r["mt_suggestion"],
        status=Status(r["status"]),
        approvals=r["approvals"],
        rejections=r["rejections"],
        points_awarded=r["points_awarded"],
        created_at=r["created_at"],
    )


class Store:
    def __init__(self, path: str):
        self.path = path
        self._local = threading.local()
        with self._tx():
            pass  # force schema creation on open

    def _conn(self) -> sqlite3.Connection:
        conn = getattr(self._local, "conn", None)
        if conn is None:
            conn = sqlite3.connect(self.path, isolation_level=None, timeout=30.0)
            conn.row_factory = sqlite3.Row
            conn.execute("PRAGMA journal_mode=WAL")
            conn.execute("PRAGMA busy_timeout=30000")
            conn.execute("PRAGMA synchronous=NORMAL")
            conn.executescript(_SCHEMA)
            self._local.conn = conn
        return conn

    @contextmanager
    def _tx(self):
        conn = self._conn()
        conn.execute("BEGIN IMMEDIATE")
        try:
            yield conn
        except BaseException:
            conn.execute("ROLLBACK")
            raise
        else:
            conn.execute("COMMIT")

    def close(self):
        conn = getattr(self._local, "conn", None)
        if conn is not None:
            conn.close()
            self._local.conn = None

    # -- users ---------------------------------------------------------------

    def add_user(self, user_id: str, display_name: str, token: str,
                 registered_at: "str | None" = None) -> UserRow:
        ts = registered_at or utcnow_iso()
        try:
            with self._tx() as conn:
                conn.execute(
                    "INSERT INTO users (id, display_name, registered_at, auth_token)"
                    " VALUES (?, ?, ?, ?)",
                    (user_id, display_name, ts, token),
                )
        except sqlite3.IntegrityError as exc:
            raise NameTaken(f"display name {display_name!r} is taken") from exc
        return UserRow(user_id, display_name, ts, token)

    def user_by_token(self, token: str) -> "UserRow | None":
        r = self._conn().execute(
            "SELECT * FROM users WHERE auth_token = ?", (token,)
        ).fetchone()
        return UserRow(r["id"], r["display_name"], r["registered_at"], r["auth_token"]) if r else None

    def user_by_id(self, user_id: str) -> "UserRow | None":
        r = self._conn().execute(
            "SELECT * FROM users WHERE id = ?", (user_id,)
        ).fetchone()
        return UserRow(r["id"], r["display_name"], r["registered_at"], r["auth_token"]) if r else None

    def user_count(self) -> int:
        return self._conn().execute("SELECT COUNT(*) FROM users").fetchone()[0]

    def display_names(self) -> dict:
        rows = self._conn().execute("SELECT id, display_name FROM users").fetchall()
        return {r["id"]: r["display_name"] for r in rows}

    def registration_times(self) -> dict:
        rows = self._conn().execute("SELECT id, registered_at FROM users").fetchall()
        return {r["id"]: r["registered_at"] for r in rows}

    # -- contributions and the ledger -----------------------------------------

    def add_contribution(
        self,
        *,
        author: str,
        src_lang: str,
        tgt_lang: str,
        src_text: str,
        tgt_text: str,
        script: ScriptClass,
        declared_script: "ScriptClass | None",
        script_mismatch: bool,
        dialect: Dialect,
        src_provenance: SourceProvenance,
        tgt_provenance: TargetProvenance,
        mt_suggestion: "str | None",
        points: int,
        status: Status = Status.PENDING,
        created_at: "str | None" = None,
        contribution_id: "int | None" = None,
        approvals: int = 0,
        rejections: int = 0,
    ) -> int:
        """Insert a contribution and credit the author's ledger atomically."""
        ts = created_at or utcnow_iso()
        with self._tx() as conn:
            cur = conn.execute(
                "INSERT INTO contributions (id, author, src_lang, tgt_lang, src_text,"
                " tgt_text, script, declared_script, script_mismatch, dialect,"
                " src_provenance, tgt_provenance, mt_suggestion, status, approvals,"
                " rejections, points_awarded, created_at)"
                " VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)",
                (
                    contribution_id,
                    author,
                    src_lang,
                    tgt_lang,
                    src_text,
                    tgt_text,
                    script.value,
                    declared_script.value if declared_script else None,
                    int(script_mismatch),
                    dialect.value,
                    src_provenance.value,
                    tgt_provenance.value,
                    mt_suggestion,
                    status.value,
                    approvals,
                    rejections,
                    points,
                    ts,
                ),
            )
            if points:
                conn.execute(
                    "INSERT INTO ledger (user_id, points) VALUES (?, ?)"
                    " ON CONFLICT(user_id) DO UPDATE SET points = points + ?",
                    (author, points, points),
                )
            else:
                conn.execute(
                    "INSERT OR IGNORE INTO ledger (user_id, points) VALUES (?, 0)",
                    (author,),
                )
            return cur.lastrowid

    def contribution(self, contribution_id: int) -> ContributionRow:
        r = self._conn().execute(
            "SELECT * FROM contributions WHERE id = ?", (contribution_id,)
        ).fetchone()
        if r is None:
            raise NotFound(f"no contribution {contribution_id}")
        return _to_row(r)

    def contributions(self) -> list[ContributionRow]:
        rows = self._conn().execute(
            "SELECT * FROM contributions ORDER BY id"
        ).fetchall()
        return [_to_row(r) for r in rows]

    def pending_for_review(self, user_id: str, limit: int) -> list[ContributionRow]:
        """Oldest-first pending items, excluding the user's own and ones
        they already voted on."""
        rows = self._conn().execute(
            "SELECT c.* FROM contributions c"
            " WHERE c.status = 'pending' AND c.author != ?"
            " AND NOT EXISTS (SELECT 1 FROM votes v"
            "                 WHERE v.contribution_id = c.id AND v.voter = ?)"
            " ORDER BY c.id LIMIT ?",
            (user_id, user_id, limit),
        ).fetchall()
        return [_to_row(r) for r in rows]

    def cast_vote(
        self,
        contribution_id: int,
        voter: str,
        verdict: Verdict,
        *,
        rejection_threshold: int = 2,
    ) -> ContributionRow:
        """Apply one vote inside a single write transaction.

        The IMMEDIATE transaction serializes concurrent votes on the same
        contribution, so the Pending->decided transition happens exactly once.
        """
        with self._tx() as conn:
            r = conn.execute(
                "SELECT author, status, approvals, rejections FROM contributions"
                " WHERE id = ?",
                (contribution_id,),
            ).fetchone()
            if r is None:
                raise NotFound(f"no contribution {contribution_id}")
            if Status(r["status"]) is not Status.PENDING:
                raise AlreadyDecided(f"contribution {contribution_id} is {r['status']}")
            if r["author"] == voter:
                raise SelfVote("authors cannot vote on their own contributions")
            try:
                conn.execute(
                    "INSERT INTO votes (contribution_id, voter, verdict, cast_at)"
                    " VALUES (?, ?, ?, ?)",
                    (contribution_id, voter, verdict.value, utcnow_iso()),
                )
            except sqlite3.IntegrityError as exc:
                raise DuplicateVote(
                    f"user {voter} already voted on contribution {contribution_id}"
                ) from exc
            approvals = r["approvals"] + (1 if verdict is Verdict.APPROVE else 0)
            rejections = r["rejections"] + (1 if verdict is Verdict.REJECT else 0)
            status = decide(approvals, rejections, rejection_threshold=rejection_threshold)
            conn.execute(
                "UPDATE contributions SET approvals = ?, rejections = ?, status = ?"
                " WHERE id = ?",
                (approvals, rejections, status.value, contribution_id),
            )
        return self.contribution(contribution_id)

    # -- metrics inputs --------------------------------------------------------

    def contribution_count(self) -> int:
        return self._conn().execute("SELECT COUNT(*) FROM contributions").fetchone()[0]

    def validated_count(self) -> int:
        return self._conn().execute(
            "SELECT COUNT(*) FROM contributions WHERE status = 'validated'"
        ).fetchone()[0]

    def contributor_count(self) -> int:
        return self._conn().execute(
            "SELECT COUNT(DISTINCT author) FROM contributions"
        ).fetchone()[0]

    def ledger_totals(self) -> dict:
        rows = self._conn().execute("SELECT user_id, points FROM ledger").fetchall()
        return {r["user_id"]: r["points"] for r in rows}

    # -- seeds -----------------------------------------------------------------

    def ingest_seeds(self, rows: "list[tuple[str, str, str, str]]") -> int:
        """Insert parsed seed rows; returns how many were new."""
        accepted = 0
        with self._tx() as conn:
            for lang, text, source, license_ in rows:
                cur = conn.execute(
                    "INSERT OR IGNORE INTO seeds (language, text, source_name, license)"
                    " VALUES (?, ?, ?, ?)",
                    (lang, text, source, license_),
                )
                accepted += cur.rowcount
        return accepted

    def seeds_in_language(self, language: str) -> list[SeedSentence]:
        rows = self._conn().execute(
            "SELECT * FROM seeds WHERE language = ? ORDER BY id", (language,)
        ).fetchall()
        return [
            SeedSentence(
                id=r["id"],
                text=r["text"],
                language=r["language"],
                source_name=r["source_name"],
                license=r["license"],
            )
            for r in rows
        ]

    def all_seeds(self) -> list[SeedSentence]:
        rows = self._conn().execute("SELECT * FROM seeds ORDER BY id").fetchall()
        return [
            SeedSentence(
                id=r["id"],
                text=r["text"],
                language=r["language"],
                source_name=r["source_name"],
                license=r["license"],
            )
            for r in rows
        ]

    def seed_history(self, user_id: str) -> set:
        rows = self._conn().execute(
            "SELECT seed_id FROM seed_history WHERE user_id = ?", (user_id,)
        ).fetchall()
        return {r["seed_id"] for r in rows}

    def record_served_seed(self, user_id: str, seed_id: int, *, reset_first: bool):
        with self._tx() as conn:
            if reset_first:
                conn.execute("DELETE FROM seed_history WHERE user_id = ?", (user_id,))
            conn.execute(
                "INSERT OR IGNORE INTO seed_history (user_id, seed_id) VALUES (?, ?)",
                (user_id, seed_id),
            )
