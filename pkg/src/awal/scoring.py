"""Submission scoring.

Points reward typed characters ("character" = Unicode code point, internal
whitespace included). The default policy is edit-aware so machine-produced
text earns nothing: an auto-loaded seed source scores 0 and a pretranslated
target scores the edit distance between the suggestion and the final text.
The literal policy (full code-point counts on both sides regardless of
provenance) is available as a config option.
"""

import enum

from awal import _kernels
from awal.contributions import SourceProvenance, TargetProvenance
from awal.errors import MissingSuggestion


class ScoringPolicy(enum.Enum):
    EDIT_AWARE = "edit_aware"
    LITERAL = "literal"


def levenshtein(a: str, b: str) -> int:
    """Code-point Levenshtein distance (kernel-backed)."""
    return _kernels.levenshtein(a, b)


def score_submission(
    src_text: str,
    tgt_text: str,
    src_provenance: SourceProvenance,
    tgt_provenance: TargetProvenance,
    mt_suggestion: "str | None" = None,
    *,
    policy: ScoringPolicy = ScoringPolicy.EDIT_AWARE,
) -> int:
    if tgt_provenance is TargetProvenance.PRETRANSLATED and mt_suggestion is None:
        raise MissingSuggestion("pretranslated target requires the MT suggestion")
    if policy is ScoringPolicy.LITERAL:
        return len(src_text) + len(tgt_text)
    p_src = len(src_text) if src_provenance is SourceProvenance.MANUAL else 0
    if tgt_provenance is TargetProvenance.MANUAL:
        p_tgt = len(tgt_text)
    else:
        p_tgt = levenshtein(mt_suggestion, tgt_text)
    return p_src + p_tgt
