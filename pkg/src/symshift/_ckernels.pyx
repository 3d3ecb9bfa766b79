# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled simulator kernels; mirrors ``_pykernels`` exactly."""

from array import array

from libc.stdint cimport int64_t, uint64_t

IMPLEMENTATION = "cython"


def generate(const unsigned char[:] bits, long long k, long long p, Py_ssize_t length):
    cdef Py_ssize_t n = bits.shape[0]
    cdef Py_ssize_t total = length if length > n else n
    out = bytearray(total)
    cdef unsigned char[:] a = out
    cdef Py_ssize_t i, j
    cdef long long window = 0
    cdef long long hi = k + p
    cdef unsigned char new
    for i in range(n):
        a[i] = bits[i]
        if i:
            window += bits[i]
    for j in range(length - n):
        new = a[j] ^ (k <= window <= hi)
        a[n + j] = new
        window += new - a[j + 1]
    return bytes(out[:length])


def weight_trace(const unsigned char[:] bits, long long k, long long p, Py_ssize_t length):
    cdef Py_ssize_t n = bits.shape[0]
    cdef const unsigned char[:] a = generate(bits, k, p, length + n)
    out = array("q", bytes(8 * (length + 1)))
    cdef int64_t[:] w = out
    cdef Py_ssize_t r
    cdef int64_t cur = -k
    for r in range(n):
        cur += a[r]
    w[0] = cur
    for r in range(length):
        cur += a[r + n] - a[r]
        w[r + 1] = cur
    return out


def failure_table(const unsigned char[:] pattern):
    cdef Py_ssize_t n = pattern.shape[0]
    out = array("q", bytes(8 * n))
    cdef int64_t[:] fail = out
    cdef Py_ssize_t i
    cdef int64_t q = 0
    for i in range(1, n):
        while q and pattern[i] != pattern[q]:
            q = fail[q - 1]
        if pattern[i] == pattern[q]:
            q += 1
        fail[i] = q
    return out


def orbit_period(const unsigned char[:] bits, long long k, long long p, long long budget):
    cdef Py_ssize_t n = bits.shape[0]
    cdef int64_t[:] fail = failure_table(bits)
    ring_buf = bytearray(bits)
    cdef unsigned char[:] ring = ring_buf
    cdef long long hi = k + p
    cdef long long window = 0
    cdef long long r
    cdef Py_ssize_t i, pos = 0
    cdef int64_t q = 0
    cdef unsigned char c, old, new
    for i in range(1, n):
        window += bits[i]
    for i in range(1, n):
        c = bits[i]
        while q and c != bits[q]:
            q = fail[q - 1]
        if c == bits[q]:
            q += 1
    r = 1
    while r <= budget:
        old = ring[pos]
        new = old ^ (k <= window <= hi)
        ring[pos] = new
        pos += 1
        if pos == n:
            pos = 0
        window += new - ring[pos]
        while q and new != bits[q]:
            q = fail[q - 1]
        if new == bits[q]:
            q += 1
            if q == n:
                return r
        r += 1
    return -1


cdef inline uint64_t _step(uint64_t s, int top, uint64_t mask, int k, int hi) nogil:
    cdef uint64_t rest = s & mask
    cdef int w = __builtin_popcountll(rest)
    return (rest << 1) | ((s >> top) ^ (k <= w and w <= hi))


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def cycle_lengths(int n, int k, int p):
    cdef uint64_t size = (<uint64_t>1) << n
    cdef int top = n - 1
    cdef uint64_t mask = ((<uint64_t>1) << top) - 1
    cdef int hi = k + p
    out = array("L", bytes(array("L").itemsize * size))
    cdef unsigned long[:] lengths = out
    cdef uint64_t start, s
    cdef unsigned long length
    with nogil:
        for start in range(size):
            if lengths[start]:
                continue
            length = 1
            s = _step(start, top, mask, k, hi)
            while s != start:
                s = _step(s, top, mask, k, hi)
                length += 1
            lengths[start] = length
            s = _step(start, top, mask, k, hi)
            while s != start:
                lengths[s] = length
                s = _step(s, top, mask, k, hi)
    return out
