# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; same API as :mod:`tnv._kernels._pure`.

Counts are accumulated in 64-bit integers.  Every enumeration here is capped
far below the point where that could overflow.
"""

from libc.stdlib cimport malloc, calloc, free
from math import comb


def ball_profile(entries, Py_ssize_t n):
    cdef Py_ssize_t k, box, top
    cdef list counts = [0] * (n + 1)
    cdef long *buf = <long *> calloc(n + 1, sizeof(long))
    if buf == NULL:
        raise MemoryError()
    try:
        k = 0
        for e in entries:
            top = e
            for box in range(k + 1, top + 1):
                buf[box] += 1
            k += 1
        for box in range(n + 1):
            counts[box] = buf[box]
    finally:
        free(buf)
    return counts


cdef struct SytState:
    int rows
    int size
    int anchor
    int offset
    int *parts
    int *filled
    long long *running
    long long *totals
    long long count


cdef void _place(SytState *st, int label) nogil:
    cdef int r, c, k
    if label > st.size:
        st.count += 1
        for k in range(st.offset):
            st.totals[k] += st.running[k]
        return
    for r in range(st.rows):
        c = st.filled[r]
        if c < st.parts[r] and (r == 0 or st.filled[r - 1] > c):
            st.filled[r] = c + 1
            # diagonal index shifted so the smallest one lands at slot 0
            k = c - r + st.rows - 1
            st.running[k] += label
            _place(st, label + 1)
            st.running[k] -= label
            st.filled[r] = c


def syt_diagonal_stats(parts, int anchor):
    cdef list plist = [int(x) for x in parts]
    cdef int rows = len(plist)
    cdef int size = sum(plist)
    cdef int i, width
    cdef SytState st
    if size == 0:
        return 1, {}
    width = plist[0]
    st.rows = rows
    st.size = size
    st.anchor = anchor
    st.offset = rows + width - 1
    st.count = 0
    st.parts = <int *> malloc(rows * sizeof(int))
    st.filled = <int *> calloc(rows, sizeof(int))
    st.running = <long long *> calloc(st.offset, sizeof(long long))
    st.totals = <long long *> calloc(st.offset, sizeof(long long))
    if st.parts == NULL or st.filled == NULL or st.running == NULL or st.totals == NULL:
        free(st.parts); free(st.filled); free(st.running); free(st.totals)
        raise MemoryError()
    try:
        for i in range(rows):
            st.parts[i] = plist[i]
        with nogil:
            _place(&st, 1)
        sums = {}
        for i in range(st.offset):
            if st.totals[i]:
                # slot i holds diagonal c - r = i - rows + 1
                sums[anchor + i - rows + 1] = st.totals[i]
        return st.count, sums
    finally:
        free(st.parts); free(st.filled); free(st.running); free(st.totals)


cdef struct ChainState:
    int rows
    int cols
    int area
    int *filled
    long long *binom
    int binom_width
    long long *path
    long long *visits
    long long chains


cdef inline long long _rank(ChainState *st) nogil:
    cdef long long rank = 0
    cdef int k, entry
    for k in range(st.rows):
        entry = st.filled[st.rows - 1 - k] + k
        rank += st.binom[entry * st.binom_width + k + 1]
    return rank


cdef void _grow(ChainState *st, int depth) nogil:
    cdef int r, c, j
    if depth == st.area:
        st.chains += 1
        for j in range(st.area + 1):
            st.visits[st.path[j]] += 1
        return
    for r in range(st.rows):
        c = st.filled[r]
        if c < st.cols and (r == 0 or st.filled[r - 1] > c):
            st.filled[r] = c + 1
            st.path[depth + 1] = _rank(st)
            _grow(st, depth + 1)
            st.filled[r] = c


def chain_shape_visits(int rows, int cols):
    cdef ChainState st
    cdef int a, b, total
    total = comb(rows + cols, rows)
    st.rows = rows
    st.cols = cols
    st.area = rows * cols
    st.chains = 0
    st.binom_width = rows + 2
    st.filled = <int *> calloc(rows, sizeof(int))
    st.binom = <long long *> calloc((rows + cols + 1) * st.binom_width, sizeof(long long))
    st.path = <long long *> calloc(st.area + 1, sizeof(long long))
    st.visits = <long long *> calloc(total, sizeof(long long))
    if st.filled == NULL or st.binom == NULL or st.path == NULL or st.visits == NULL:
        free(st.filled); free(st.binom); free(st.path); free(st.visits)
        raise MemoryError()
    try:
        for a in range(rows + cols + 1):
            for b in range(st.binom_width):
                st.binom[a * st.binom_width + b] = comb(a, b)
        st.path[0] = _rank(&st)
        with nogil:
            _grow(&st, 0)
        return st.chains, [st.visits[a] for a in range(total)]
    finally:
        free(st.filled); free(st.binom); free(st.path); free(st.visits)
