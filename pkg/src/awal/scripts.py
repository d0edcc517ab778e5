"""Script classification for contribution text.

A text is Tifinagh if it contains at least one code point in the Tifinagh
block (U+2D30..U+2D7F) and no Latin letters, Latin in the mirrored case,
Mixed when both are present, and Neutral when neither is (digits,
punctuation, whitespace, and other scripts do not count).
"""

import enum

from awal import _kernels


class ScriptClass(enum.Enum):
    TIFINAGH = "tifinagh"
    LATIN = "latin"
    MIXED = "mixed"
    NEUTRAL = "neutral"


def classify_script(text: str) -> ScriptClass:
    has_tif, has_lat = _kernels.script_scan(text)
    if has_tif and has_lat:
        return ScriptClass.MIXED
    if has_tif:
        return ScriptClass.TIFINAGH
    if has_lat:
        return ScriptClass.LATIN
    return ScriptClass.NEUTRAL
