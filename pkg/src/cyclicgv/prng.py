"""Deterministic word sampling based on the Philox4x32-10 block cipher.

Philox4x32-10 (Salmon et al., "Parallel Random Numbers: As Easy as 1, 2, 3")
is a counter-based generator: output block = cipher(counter, key). That makes
per-trial substreams trivial and order-independent, which is what the
reproducibility contract of the sampling operations requires:

* key     = (seed low 32 bits, seed high 32 bits)
* counter = (trial low 32, trial high 32, block index, 0)
* a trial's bit stream is the little-endian concatenation of its blocks'
  four 32-bit outputs; a length-n word is the low n bits of that stream.

Every implementation of this scheme (the pure-Python one here, and the
batch versions in :mod:`cyclicgv.kernels`) must agree bit for bit; the test
suite pins the three canonical known-answer vectors of the cipher.

This module is the reference implementation. It works for any word length
and is deliberately free of numpy/numba so it can serve as an oracle for
the accelerated paths.
"""

from __future__ import annotations

GENERATOR_NAME = "philox4x32-10"

_M0 = 0xD2511F53
_M1 = 0xCD9E8D57
_W0 = 0x9E3779B9
_W1 = 0xBB67AE85
_MASK32 = 0xFFFFFFFF
_MASK64 = 0xFFFFFFFFFFFFFFFF


def philox4x32_block(counter: tuple[int, int, int, int],
                     key: tuple[int, int]) -> tuple[int, int, int, int]:
    """One Philox4x32-10 block: four 32-bit outputs for (counter, key)."""
    x0, x1, x2, x3 = counter
    k0, k1 = key
    for _ in range(10):
        p0 = _M0 * x0
        p1 = _M1 * x2
        x0 = ((p1 >> 32) & _MASK32) ^ x1 ^ k0
        x1 = p1 & _MASK32
        x2 = ((p0 >> 32) & _MASK32) ^ x3 ^ k1
        x3 = p0 & _MASK32
        k0 = (k0 + _W0) & _MASK32
        k1 = (k1 + _W1) & _MASK32
    return x0, x1, x2, x3


def word_for_trial(seed: int, trial: int, n: int) -> int:
    """Uniform n-bit word for one trial index: each bit i.i.d. uniform.

    Independent of every other trial index; arbitrary n.
    """
    if not 0 <= seed <= _MASK64:
        raise ValueError("seed must fit in 64 bits")
    if not 0 <= trial <= _MASK64:
        raise ValueError("trial index must fit in 64 bits")
    key = (seed & _MASK32, (seed >> 32) & _MASK32)
    acc = 0
    nblocks = (n + 127) // 128
    for b in range(nblocks):
        o0, o1, o2, o3 = philox4x32_block(
            (trial & _MASK32, (trial >> 32) & _MASK32, b, 0), key)
        acc |= (o0 | (o1 << 32) | (o2 << 64) | (o3 << 96)) << (128 * b)
    return acc & ((1 << n) - 1)
