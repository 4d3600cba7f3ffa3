"""Independent brute-force reference implementations for the test suite.

Everything here recomputes results from the two scalar primitives shift
and hamming (or from plain stdlib arithmetic), deliberately avoiding the
batch kernels and the higher-level library operations they back, so these
stay valid as oracles for those paths.
"""

from fractions import Fraction
from math import comb

from cyclicgv import Codeword, hamming, shift


def ref_auto_cyclic_distance(x: Codeword):
    """Min distance to differing rotations via shift+hamming; None = infinite."""
    best = None
    for i in range(1, x.length):
        r = shift(x, i)
        if r.value == x.value:
            continue
        d = hamming(r, x).as_fraction()
        if best is None or d < best:
            best = d
    return best


def ref_cyclic_distance(x: Codeword, y: Codeword) -> Fraction:
    return min(hamming(shift(x, i), y).as_fraction() for i in range(x.length))


def ref_orbit(x: Codeword) -> set[int]:
    return {shift(x, i).value for i in range(x.length)}


def ref_is_member(x: Codeword, delta: Fraction) -> bool:
    d = ref_auto_cyclic_distance(x)
    return d is None or d >= delta


def ref_enumerate(n: int, delta: Fraction) -> set[int]:
    return {v for v in range(1 << n) if ref_is_member(Codeword(v, n), delta)}


def ref_greedy(cprime_values, n: int, delta: Fraction):
    """Greedy packing with smallest-remaining-word selection order."""
    alive = set(cprime_values)
    code: set[int] = set()
    trace = []
    while alive:
        x = Codeword(min(alive), n)
        orb = ref_orbit(x)
        conflicts = {y for y in alive
                     if ref_cyclic_distance(x, Codeword(y, n)) < delta}
        removal = (orb | conflicts) & alive
        code |= orb
        alive -= removal
        trace.append((x.value, len(removal)))
    return code, trace


def ref_ball_volume(n: int, r: int) -> int:
    return sum(comb(n, k) for k in range(r + 1))
