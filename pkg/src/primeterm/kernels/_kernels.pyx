# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hypercube inner loops (same contracts as _pure)."""


def geom_direct(long r, object q, long t):
    cdef long j
    cdef object acc = 0
    for j in range(t - 1, -1, -1):
        acc = acc * q + (<object>j) ** r
    return acc


def pack_blocks(list blocks, long width):
    cdef Py_ssize_t i, n
    cdef object mask, b
    cdef list level, nxt
    cdef object w
    if not blocks:
        return 0
    # shift as Python ints: a C long shift would overflow
    mask = ((<object>1) << width) - 1
    for b in blocks:
        if b < 0 or b > mask:
            raise ValueError("block does not fit its width")
    level = list(blocks)
    w = width
    while len(level) > 1:
        n = len(level)
        nxt = []
        i = 0
        while i + 1 < n:
            nxt.append(level[i] | (level[i + 1] << w))
            i += 2
        if n & 1:
            nxt.append(level[n - 1])
        level = nxt
        w = w * 2
    return level[0]


def delta_blocks(list values, long u):
    cdef object top = (<object>1) << u
    cdef object a
    return [(top - 1) * (top - a + 1) for a in values]
