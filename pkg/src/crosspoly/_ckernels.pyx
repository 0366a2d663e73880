# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same contract as :mod:`crosspoly._pykernels`."""

from libc.stdint cimport int64_t

cdef enum:
    MAXM = 16
MAX_TALLY_D = 10


cdef int64_t _lattice(int i, int d, int k, int budget) nogil:
    cdef int64_t total = 0
    cdef int x, lo
    if i == d:
        return 1
    lo = -budget if i < k else 0
    for x in range(lo, budget + 1):
        total += _lattice(i + 1, d, k, budget - (x if x >= 0 else -x))
    return total


def lattice_count(int d, int k, int n):
    """Visit every lattice point of the dilated pyramid one by one and count it."""
    cdef int64_t r
    with nogil:
        r = _lattice(0, d, k, n)
    return int(r)


cdef void _tally_one(int *perm, int m, int k, int64_t *members,
                     int64_t *positive, int64_t *negative) nogil:
    cdef char seen[MAXM]
    cdef int start, x, length, top, ncycles = 0, odd_low = 0, even_low = 0
    cdef int64_t base, half
    for start in range(m):
        seen[start] = 0
    for start in range(m):
        if seen[start]:
            continue
        ncycles += 1
        length = 0
        top = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            length += 1
            if x > top:
                top = x
            x = perm[x]
        if top < k:
            if length & 1:
                odd_low += 1
            else:
                even_low += 1
    base = (<int64_t>1) << odd_low
    if even_low == 0:
        members[ncycles - 1] += base
        positive[ncycles - 1] += base
    else:
        half = base << (even_low - 1)
        positive[ncycles - 1] += half
        negative[ncycles - 1] += half


def colored_tally(int d, int k):
    """Walk S_{d+1} once (Heap's algorithm) and tally colored objects by j.

    Returns ``(members, positive, negative)`` lists indexed by j.
    """
    if d > MAX_TALLY_D:
        raise ValueError(f"colored_tally limited to d <= {MAX_TALLY_D}")
    cdef int m = d + 1
    cdef int perm[MAXM]
    cdef int c[MAXM]
    cdef int64_t members[MAXM]
    cdef int64_t positive[MAXM]
    cdef int64_t negative[MAXM]
    cdef int i, tmp
    for i in range(m):
        perm[i] = i
        c[i] = 0
        members[i] = 0
        positive[i] = 0
        negative[i] = 0
    with nogil:
        _tally_one(perm, m, k, members, positive, negative)
        i = 1
        while i < m:
            if c[i] < i:
                if i & 1:
                    tmp = perm[c[i]]; perm[c[i]] = perm[i]; perm[i] = tmp
                else:
                    tmp = perm[0]; perm[0] = perm[i]; perm[i] = tmp
                _tally_one(perm, m, k, members, positive, negative)
                c[i] += 1
                i = 1
            else:
                c[i] = 0
                i += 1
    return ([int(members[i]) for i in range(m)],
            [int(positive[i]) for i in range(m)],
            [int(negative[i]) for i in range(m)])
