"""Pure-Python reference kernels.

These are the fallback implementations of the two hot operations: code-point
Levenshtein distance (submission scoring, post-edit gate) and script scanning
(Tifinagh/Latin classification). The compiled `_speed` module must produce
bit-identical results; `LATIN_RANGES` is the single source of truth for what
counts as a Latin letter and the Cython source mirrors it verbatim.
"""

BACKEND = "pure-python"

TIFINAGH_START = 0x2D30
TIFINAGH_END = 0x2D7F

# Latin-script letter ranges, inclusive. Covers ASCII, Latin-1 letters
# (excluding the multiply/divide signs), Extended-A/B, IPA extensions
# (Berber Latin orthography uses U+025B, U+0263), Latin Extended Additional
# (dotted consonants), Extended-C, ligatures, and fullwidth forms.
LATIN_RANGES = (
    (0x0041, 0x005A),
    (0x0061, 0x007A),
    (0x00AA, 0x00AA),
    (0x00BA, 0x00BA),
    (0x00C0, 0x00D6),
    (0x00D8, 0x00F6),
    (0x00F8, 0x02AF),
    (0x1E00, 0x1EFF),
    (0x2C60, 0x2C7F),
    (0xFB00, 0xFB06),
    (0xFF21, 0xFF3A),
    (0xFF41, 0xFF5A),
)


def is_latin_letter(cp: int) -> bool:
    for lo, hi in LATIN_RANGES:
        if lo <= cp <= hi:
            return True
    return False


def script_scan(text: str) -> "tuple[bool, bool]":
    """Return (has_tifinagh, has_latin) for the given text."""
    has_tif = False
    has_lat = False
    for ch in text:
        cp = ord(ch)
        if TIFINAGH_START <= cp <= TIFINAGH_END:
            if has_lat:
                return True, True
            has_tif = True
        elif is_latin_letter(cp):
            if has_tif:
                return True, True
            has_lat = True
    return has_tif, has_lat


def levenshtein(a: str, b: str) -> int:
    """Code-point Levenshtein distance (unit insert/delete/substitute costs)."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) < len(b):
        a, b = b, a
    # Two-row DP over the shorter string.
    prev = list(range(len(b) + 1))
    cur = [0] * (len(b) + 1)
    for i, ca in enumerate(a, 1):
        cur[0] = i
        for j, cb in enumerate(b, 1):
            sub = prev[j - 1] + (ca != cb)
            dele = prev[j] + 1
            ins = cur[j - 1] + 1
            best = sub if sub < dele else dele
            cur[j] = best if best < ins else ins
        prev, cur = cur, prev
    return prev[len(b)]
