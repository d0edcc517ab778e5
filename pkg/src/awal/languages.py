"""The closed set of language tags the platform accepts.

``zgh`` is Tamazight in any script; ``ary`` is Moroccan Arabic (Darija).
"""

from awal.errors import UnknownLanguage

TAMAZIGHT = "zgh"

LANGUAGE_TAGS = frozenset({"zgh", "ar", "ary", "ca", "es", "en", "fr"})

LANGUAGE_NAMES = {
    "zgh": "Tamazight",
    "ar": "Arabic",
    "ary": "Moroccan Arabic (Darija)",
    "ca": "Catalan",
    "es": "Spanish",
    "en": "English",
    "fr": "French",
}


def require_tag(code: str) -> str:
    """Validate a language tag against the closed set and return it."""
    if code not in LANGUAGE_TAGS:
        raise UnknownLanguage(f"unknown language tag {code!r}")
    return code


def is_tamazight(code: str) -> bool:
    return code == TAMAZIGHT
