"""Numba-compiled implementations of the hot bit-kernel operations.

Same contracts as :mod:`cyclicgv.kernels.numpy_backend`; the two backends
must agree bit for bit. All kernels release the GIL so chunked scans can
run on a thread pool.
"""

from __future__ import annotations

import numpy as np
from numba import int64, njit, uint64

BACKEND_NAME = "numba"

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def _popcount64(v):
    v = v - ((v >> uint64(1)) & uint64(0x5555555555555555))
    v = (v & uint64(0x3333333333333333)) + ((v >> uint64(2)) & uint64(0x3333333333333333))
    v = (v + (v >> uint64(4))) & uint64(0x0F0F0F0F0F0F0F0F)
    return (v * uint64(0x0101010101010101)) >> uint64(56)


@njit(**_JIT)
def _word_mask(n):
    if n == 64:
        return uint64(0xFFFFFFFFFFFFFFFF)
    return (uint64(1) << uint64(n)) - uint64(1)


@njit(**_JIT)
def auto_min_counts(values, n):
    mask = _word_mask(n)
    out = np.empty(values.shape[0], dtype=np.int64)
    for j in range(values.shape[0]):
        v = values[j]
        best = int64(n + 1)
        for i in range(1, n):
            r = ((v << uint64(i)) | (v >> uint64(n - i))) & mask
            c = int64(_popcount64(v ^ r))
            if c != 0 and c < best:
                best = c
        out[j] = best
    return out


@njit(**_JIT)
def strict_min_counts(values, n):
    mask = _word_mask(n)
    out = np.empty(values.shape[0], dtype=np.int64)
    for j in range(values.shape[0]):
        v = values[j]
        best = int64(n + 1)
        for i in range(1, n):
            r = ((v << uint64(i)) | (v >> uint64(n - i))) & mask
            c = int64(_popcount64(v ^ r))
            if c < best:
                best = c
        out[j] = best
    return out


@njit(**_JIT)
def _rotations_of(v, n, mask):
    rots = np.empty(n, dtype=np.uint64)
    rots[0] = v
    for i in range(1, n):
        rots[i] = ((v << uint64(i)) | (v >> uint64(n - i))) & mask
    return rots


@njit(**_JIT)
def min_cyc_counts(x, pool, n):
    mask = _word_mask(n)
    rots = _rotations_of(uint64(x), n, mask)
    out = np.empty(pool.shape[0], dtype=np.int64)
    for j in range(pool.shape[0]):
        y = pool[j]
        best = int64(n + 1)
        for i in range(n):
            c = int64(_popcount64(rots[i] ^ y))
            if c < best:
                best = c
                if best == 0:
                    break
        out[j] = best
    return out


@njit(**_JIT)
def min_cyc_counts_to_set(queries, members, n):
    mask = _word_mask(n)
    out = np.full(queries.shape[0], n + 1, dtype=np.int64)
    for j in range(queries.shape[0]):
        rots = _rotations_of(queries[j], n, mask)
        best = int64(n + 1)
        for m in range(members.shape[0]):
            y = members[m]
            for i in range(n):
                c = int64(_popcount64(rots[i] ^ y))
                if c < best:
                    best = c
            if best == 0:
                break
        out[j] = best
    return out


@njit(**_JIT)
def closest_pair_counts(reps, n):
    mask = _word_mask(n)
    best = int64(n + 1)
    bi = int64(-1)
    bj = int64(-1)
    for a in range(reps.shape[0] - 1):
        rots = _rotations_of(reps[a], n, mask)
        for b in range(a + 1, reps.shape[0]):
            y = reps[b]
            d = int64(n + 1)
            for i in range(n):
                c = int64(_popcount64(rots[i] ^ y))
                if c < d:
                    d = c
            if d < best:
                best = d
                bi = int64(a)
                bj = int64(b)
    return best, bi, bj


@njit(**_JIT)
def canonical_rotations(values, n):
    mask = _word_mask(n)
    out = np.empty(values.shape[0], dtype=np.uint64)
    for j in range(values.shape[0]):
        v = values[j]
        best = v
        for i in range(1, n):
            r = ((v << uint64(i)) | (v >> uint64(n - i))) & mask
            if r < best:
                best = r
        out[j] = best
    return out


@njit(**_JIT)
def philox_words(seed, start, count, n):
    mask = _word_mask(n)
    m0 = uint64(0xD2511F53)
    m1 = uint64(0xCD9E8D57)
    w0 = uint64(0x9E3779B9)
    w1 = uint64(0xBB67AE85)
    mask32 = uint64(0xFFFFFFFF)
    seed_lo = uint64(seed) & mask32
    seed_hi = (uint64(seed) >> uint64(32)) & mask32
    out = np.empty(count, dtype=np.uint64)
    for j in range(count):
        trial = uint64(start) + uint64(j)
        x0 = trial & mask32
        x1 = trial >> uint64(32)
        x2 = uint64(0)
        x3 = uint64(0)
        k0 = seed_lo
        k1 = seed_hi
        for _ in range(10):
            p0 = m0 * x0
            p1 = m1 * x2
            nx0 = (p1 >> uint64(32)) ^ x1 ^ k0
            nx1 = p1 & mask32
            nx2 = (p0 >> uint64(32)) ^ x3 ^ k1
            nx3 = p0 & mask32
            x0, x1, x2, x3 = nx0, nx1, nx2, nx3
            k0 = (k0 + w0) & mask32
            k1 = (k1 + w1) & mask32
        out[j] = (x0 | (x1 << uint64(32))) & mask
    return out
