"""Contribution domain types, the pair rule, and the validation state machine.

Everything here is a pure value transformation: ``apply_vote`` returns a new
``Contribution`` and never mutates its input, so concurrent callers are safe
by construction. Serializing concurrent votes on one contribution is the
service layer's job.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone

from awal import languages
from awal.errors import (
    AlreadyDecided,
    DuplicateVote,
    EmptyText,
    NoTamazightSide,
    SelfVote,
)
from awal.scripts import ScriptClass, classify_script

APPROVALS_TO_VALIDATE = 2
DEFAULT_REJECTION_THRESHOLD = 2


class Dialect(enum.Enum):
    STANDARD = "standard"
    CENTRAL = "central"
    TARIFIT = "tarifit"
    TACHELHIT = "tachelhit"
    OTHER = "other"
    UNSPECIFIED = "unspecified"


class SourceProvenance(enum.Enum):
    MANUAL = "manual"
    SEED_BANK = "seed_bank"


class TargetProvenance(enum.Enum):
    MANUAL = "manual"
    PRETRANSLATED = "pretranslated"


class Status(enum.Enum):
    PENDING = "pending"
    VALIDATED = "validated"
    REJECTED = "rejected"


class Verdict(enum.Enum):
    APPROVE = "approve"
    REJECT = "reject"


@dataclass(frozen=True)
class ValidationVote:
    voter: str
    verdict: Verdict
    cast_at: datetime


@dataclass(frozen=True)
class Contribution:
    id: int
    author: str
    src_lang: str
    tgt_lang: str
    src_text: str
    tgt_text: str
    tamazight_script: ScriptClass
    dialect: Dialect = Dialect.UNSPECIFIED
    src_provenance: SourceProvenance = SourceProvenance.MANUAL
    tgt_provenance: TargetProvenance = TargetProvenance.MANUAL
    mt_suggestion: str | None = None
    status: Status = Status.PENDING
    votes: tuple[ValidationVote, ...] = field(default_factory=tuple)
    created_at: datetime = field(
        default_factory=lambda: datetime.now(timezone.utc)
    )

    @property
    def approvals(self) -> int:
        return sum(1 for v in self.votes if v.verdict is Verdict.APPROVE)

    @property
    def rejections(self) -> int:
        return sum(1 for v in self.votes if v.verdict is Verdict.REJECT)


def check_pair(
    src_lang: str,
    tgt_lang: str,
    src_text: str,
    tgt_text: str,
    *,
    require_tamazight: bool = True,
) -> None:
    """Enforce the submission rule: both sides non-blank, one side Tamazight.

    Raises EmptyText or NoTamazightSide; returns None when the pair is ok.
    ``require_tamazight=False`` relaxes the language rule (config option).
    """
    languages.require_tag(src_lang)
    languages.require_tag(tgt_lang)
    if not src_text.strip():
        raise EmptyText("source text is blank")
    if not tgt_text.strip():
        raise EmptyText("target text is blank")
    if require_tamazight and not (
        languages.is_tamazight(src_lang) or languages.is_tamazight(tgt_lang)
    ):
        raise NoTamazightSide("at least one side must be Tamazight (zgh)")


def detect_script(src_lang: str, tgt_lang: str, src_text: str, tgt_text: str) -> ScriptClass:
    """Classify the Tamazight side; when both sides are zgh, classify both."""
    src_zgh = languages.is_tamazight(src_lang)
    tgt_zgh = languages.is_tamazight(tgt_lang)
    if src_zgh and tgt_zgh:
        return classify_script(src_text + "\n" + tgt_text)
    if src_zgh:
        return classify_script(src_text)
    if tgt_zgh:
        return classify_script(tgt_text)
    return ScriptClass.NEUTRAL


def decide(
    approvals: int,
    rejections: int,
    *,
    rejection_threshold: int = DEFAULT_REJECTION_THRESHOLD,
) -> Status:
    """Status implied by vote counts. Approvals are checked first, so an
    entry reaching two approvals validates even if rejections also crossed."""
    if approvals >= APPROVALS_TO_VALIDATE:
        return Status.VALIDATED
    if rejections >= rejection_threshold:
        return Status.REJECTED
    return Status.PENDING


def apply_vote(
    contribution: Contribution,
    vote: ValidationVote,
    *,
    rejection_threshold: int = DEFAULT_REJECTION_THRESHOLD,
) -> Contribution:
    """Append a vote and move the status when a threshold is crossed.

    The status is monotone: only Pending contributions accept votes, so at
    most one transition out of Pending can ever happen.
    """
    if contribution.status is not Status.PENDING:
        raise AlreadyDecided(f"contribution {contribution.id} is {contribution.status.value}")
    if vote.voter == contribution.author:
        raise SelfVote("authors cannot vote on their own contributions")
    if any(v.voter == vote.voter for v in contribution.votes):
        raise DuplicateVote(f"user {vote.voter} already voted on contribution {contribution.id}")
    votes = contribution.votes + (vote,)
    approvals = sum(1 for v in votes if v.verdict is Verdict.APPROVE)
    rejections = len(votes) - approvals
    status = decide(approvals, rejections, rejection_threshold=rejection_threshold)
    return replace(contribution, votes=votes, status=status)
