# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: code-point Levenshtein and script scanning.

Must stay result-identical to awal._kernels.pure; the range table below is a
verbatim copy of pure.LATIN_RANGES (equivalence is pinned by tests sweeping
the BMP).
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"

cdef Py_UCS4 TIF_START = 0x2D30
cdef Py_UCS4 TIF_END = 0x2D7F

DEF N_LATIN = 12

cdef Py_UCS4[N_LATIN] LATIN_LO = [
    0x0041, 0x0061, 0x00AA, 0x00BA, 0x00C0, 0x00D8,
    0x00F8, 0x1E00, 0x2C60, 0xFB00, 0xFF21, 0xFF41,
]
cdef Py_UCS4[N_LATIN] LATIN_HI = [
    0x005A, 0x007A, 0x00AA, 0x00BA, 0x00D6, 0x00F6,
    0x02AF, 0x1EFF, 0x2C7F, 0xFB06, 0xFF3A, 0xFF5A,
]


cdef inline bint _is_latin(Py_UCS4 cp) noexcept:
    cdef int k
    for k in range(N_LATIN):
        if LATIN_LO[k] <= cp <= LATIN_HI[k]:
            return True
    return False


def script_scan(str text):
    """Return (has_tifinagh, has_latin) for the given text."""
    cdef bint has_tif = False
    cdef bint has_lat = False
    cdef Py_UCS4 cp
    for cp in text:
        if TIF_START <= cp <= TIF_END:
            if has_lat:
                return True, True
            has_tif = True
        elif _is_latin(cp):
            if has_tif:
                return True, True
            has_lat = True
    return bool(has_tif), bool(has_lat)


def levenshtein(str a, str b):
    """Code-point Levenshtein distance (unit insert/delete/substitute costs)."""
    if a == b:
        return 0
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t n = len(b)
    if m == 0:
        return n
    if n == 0:
        return m
    cdef str s = a
    cdef str t = b
    if m < n:
        s, t = t, s
        m, n = n, m
    cdef Py_ssize_t *prev = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *cur = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()
    cdef Py_ssize_t i, j, sub, dele, ins, best
    cdef Py_UCS4 ca, cb
    cdef Py_ssize_t *tmp
    try:
        for j in range(n + 1):
            prev[j] = j
        for i in range(1, m + 1):
            cur[0] = i
            ca = s[i - 1]
            for j in range(1, n + 1):
                cb = t[j - 1]
                sub = prev[j - 1] + (ca != cb)
                dele = prev[j] + 1
                ins = cur[j - 1] + 1
                best = sub if sub < dele else dele
                cur[j] = best if best < ins else ins
            tmp = prev
            prev = cur
            cur = tmp
        return prev[n]
    finally:
        free(prev)
        free(cur)
