"""Seed sentence bank backing the Random Sentence feature.

Seed files are UTF-8, tab-separated, one sentence per line:

    language_tag<TAB>text<TAB>source_name<TAB>license

``source_name`` and ``license`` may be omitted when ingest defaults are
given; lines starting with ``#`` are ignored. Provenance is the point of the
bank, so every sentence carries a non-empty license identifier.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import AbstractSet, Sequence

from awal import languages
from awal.errors import EmptyBank, MalformedDocument


@dataclass(frozen=True)
class SeedSentence:
    id: int
    text: str
    language: str
    source_name: str
    license: str


def parse_seed_document(
    document: str,
    default_source: str = "",
    default_license: str = "",
) -> list[tuple[str, str, str, str]]:
    """Parse a seed file into (language, text, source_name, license) rows.

    Raises MalformedDocument for structurally broken lines and
    UnknownLanguage for tags outside the closed set. Blank lines and
    ``#`` comments are skipped; duplicates are NOT collapsed here (the
    ingesting bank owns dedup).
    """
    rows = []
    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = raw.strip("\n\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise MalformedDocument(f"line {lineno}: expected language<TAB>text")
        lang = languages.require_tag(parts[0].strip())
        text = parts[1].strip()
        if not text:
            raise MalformedDocument(f"line {lineno}: empty sentence text")
        source = parts[2].strip() if len(parts) > 2 and parts[2].strip() else default_source
        license_ = parts[3].strip() if len(parts) > 3 and parts[3].strip() else default_license
        if not license_:
            raise MalformedDocument(
                f"line {lineno}: no license and no default license given"
            )
        rows.append((lang, text, source, license_))
    return rows


def pick_seed(
    candidates: Sequence[SeedSentence],
    served_history: AbstractSet[int],
    rng_seed: "int | None" = None,
    rng: "random.Random | None" = None,
) -> SeedSentence:
    """Uniformly pick a sentence not yet served; once every candidate has
    been served the history window resets and any sentence may come back."""
    if not candidates:
        raise EmptyBank("no seed sentences in that language")
    fresh = [s for s in candidates if s.id not in served_history]
    pool = fresh if fresh else list(candidates)
    if rng is None:
        rng = random.Random(rng_seed) if rng_seed is not None else random
    return pool[rng.randrange(len(pool))]


class SeedBank:
    """In-memory seed bank. The service uses the same parse/pick functions
    over its durable store; this class is the in-process counterpart."""

    def __init__(self):
        self._rows: dict[tuple[str, str], SeedSentence] = {}
        self._next_id = 1

    def __len__(self) -> int:
        return len(self._rows)

    def ingest_seeds(
        self,
        document: str,
        default_source: str = "",
        default_license: str = "",
    ) -> int:
        """Ingest a seed document; returns the number of newly accepted
        sentences. Exact (language, text) duplicates are skipped, which
        makes ingestion idempotent."""
        accepted = 0
        for lang, text, source, license_ in parse_seed_document(
            document, default_source, default_license
        ):
            key = (lang, text)
            if key in self._rows:
                continue
            self._rows[key] = SeedSentence(
                id=self._next_id,
                text=text,
                language=lang,
                source_name=source,
                license=license_,
            )
            self._next_id += 1
            accepted += 1
        return accepted

    def sentences(self, language: str) -> list[SeedSentence]:
        languages.require_tag(language)
        return sorted(
            (s for s in self._rows.values() if s.language == language),
            key=lambda s: s.id,
        )

    def draw_random(
        self,
        language: str,
        served_history: AbstractSet[int],
        rng_seed: "int | None" = None,
    ) -> SeedSentence:
        return pick_seed(self.sentences(language), served_history, rng_seed=rng_seed)
