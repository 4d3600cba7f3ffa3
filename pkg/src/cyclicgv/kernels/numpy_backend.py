"""Vectorized numpy implementations of the hot bit-kernel operations.

All functions operate on length-n words packed one-per-uint64 (n <= 64),
with character 0 of the textual form stored as the most significant of the
n low bits. Counts use the sentinel n+1 where a minimum is taken over an
empty set of shifts; the sentinel compares correctly against every
threshold count since counts never exceed n.

This backend is the fallback selected by CYCLICGV_BACKEND=numpy (or when
numba is unavailable). It must agree bit for bit with the numba backend.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"

_M0 = np.uint64(0xD2511F53)
_M1 = np.uint64(0xCD9E8D57)
_W0 = 0x9E3779B9
_W1 = 0xBB67AE85
_MASK32 = np.uint64(0xFFFFFFFF)
_S32 = np.uint64(32)

# keep per-chunk temporaries around this many elements
_CHUNK_BUDGET = 1 << 22


def _mask(n: int) -> np.uint64:
    return np.uint64(0xFFFFFFFFFFFFFFFF if n == 64 else (1 << n) - 1)


def _rotl(values: np.ndarray, i: int, n: int, mask: np.uint64) -> np.ndarray:
    # callers guarantee 1 <= i <= n-1, so both shift amounts are in 1..63
    return ((values << np.uint64(i)) | (values >> np.uint64(n - i))) & mask


def auto_min_counts(values: np.ndarray, n: int) -> np.ndarray:
    """Per word: min XOR count against its differing rotations; n+1 if none."""
    values = np.ascontiguousarray(values, dtype=np.uint64)
    mask = _mask(n)
    best = np.full(values.shape[0], n + 1, dtype=np.int64)
    for i in range(1, n):
        c = np.bitwise_count(values ^ _rotl(values, i, n, mask)).astype(np.int64)
        np.minimum(best, np.where(c == 0, n + 1, c), out=best)
    return best


def strict_min_counts(values: np.ndarray, n: int) -> np.ndarray:
    """Per word: min XOR count over all nontrivial rotations, zeros included."""
    values = np.ascontiguousarray(values, dtype=np.uint64)
    mask = _mask(n)
    best = np.full(values.shape[0], n + 1, dtype=np.int64)
    for i in range(1, n):
        c = np.bitwise_count(values ^ _rotl(values, i, n, mask)).astype(np.int64)
        np.minimum(best, c, out=best)
    return best


def _all_rotations(value: int, n: int, mask: np.uint64) -> np.ndarray:
    rots = np.empty(n, dtype=np.uint64)
    v = np.uint64(value)
    rots[0] = v
    for i in range(1, n):
        rots[i] = ((v << np.uint64(i)) | (v >> np.uint64(n - i))) & mask
    return rots


def min_cyc_counts(x: int, pool: np.ndarray, n: int) -> np.ndarray:
    """For each pool word y: min over rotations r of x of XOR count(r, y)."""
    pool = np.ascontiguousarray(pool, dtype=np.uint64)
    rots = _all_rotations(x, n, _mask(n))
    out = np.empty(pool.shape[0], dtype=np.int64)
    step = max(1, _CHUNK_BUDGET // max(n, 1))
    for s in range(0, pool.shape[0], step):
        block = pool[s:s + step]
        c = np.bitwise_count(rots[:, None] ^ block[None, :])
        out[s:s + step] = c.min(axis=0).astype(np.int64)
    return out


def min_cyc_counts_to_set(queries: np.ndarray, members: np.ndarray,
                          n: int) -> np.ndarray:
    """For each query: min cyclic XOR count to any member word."""
    queries = np.ascontiguousarray(queries, dtype=np.uint64)
    members = np.ascontiguousarray(members, dtype=np.uint64)
    nq, nm = queries.shape[0], members.shape[0]
    out = np.full(nq, n + 1, dtype=np.int64)
    if nm == 0 or nq == 0:
        return out
    mask = _mask(n)
    qstep = max(1, _CHUNK_BUDGET // max(n * min(nm, 4096), 1))
    mstep = 4096
    for qs in range(0, nq, qstep):
        qblock = queries[qs:qs + qstep]
        rots = np.empty((qblock.shape[0], n), dtype=np.uint64)
        rots[:, 0] = qblock
        for i in range(1, n):
            rots[:, i] = _rotl(qblock, i, n, mask)
        best = out[qs:qs + qstep]
        for ms in range(0, nm, mstep):
            mblock = members[ms:ms + mstep]
            c = np.bitwise_count(rots[:, :, None] ^ mblock[None, None, :])
            np.minimum(best, c.min(axis=(1, 2)).astype(np.int64), out=best)
        out[qs:qs + qstep] = best
    return out


def closest_pair_counts(reps: np.ndarray, n: int) -> tuple[int, int, int]:
    """Minimum cyclic XOR count over index pairs a < b; first pair wins ties.

    Returns (count, a, b), or (n+1, -1, -1) with fewer than two words.
    """
    reps = np.ascontiguousarray(reps, dtype=np.uint64)
    m = reps.shape[0]
    best, bi, bj = n + 1, -1, -1
    mask = _mask(n)
    for a in range(m - 1):
        rots = _all_rotations(int(reps[a]), n, mask)
        tail = reps[a + 1:]
        c = np.bitwise_count(rots[:, None] ^ tail[None, :]).min(axis=0)
        j = int(np.argmin(c))
        if int(c[j]) < best:
            best, bi, bj = int(c[j]), a, a + 1 + j
    return best, bi, bj


def canonical_rotations(values: np.ndarray, n: int) -> np.ndarray:
    """Per word: the numerically smallest of its n rotations (orbit key)."""
    values = np.ascontiguousarray(values, dtype=np.uint64)
    mask = _mask(n)
    best = values.copy()
    for i in range(1, n):
        np.minimum(best, _rotl(values, i, n, mask), out=best)
    return best


def philox_words(seed: int, start: int, count: int, n: int) -> np.ndarray:
    """Words for trial indices start..start+count-1 (block 0 of each trial)."""
    seed = int(seed)
    start = int(start)
    trials = np.arange(start, start + count, dtype=np.uint64)
    x0 = trials & _MASK32
    x1 = trials >> _S32
    x2 = np.zeros(count, dtype=np.uint64)
    x3 = np.zeros(count, dtype=np.uint64)
    k0 = seed & 0xFFFFFFFF
    k1 = (seed >> 32) & 0xFFFFFFFF
    for _ in range(10):
        p0 = _M0 * x0
        p1 = _M1 * x2
        x0, x1, x2, x3 = ((p1 >> _S32) ^ x1 ^ np.uint64(k0),
                          p1 & _MASK32,
                          (p0 >> _S32) ^ x3 ^ np.uint64(k1),
                          p0 & _MASK32)
        k0 = (k0 + _W0) & 0xFFFFFFFF
        k1 = (k1 + _W1) & 0xFFFFFFFF
    return (x0 | (x1 << _S32)) & _mask(n)
