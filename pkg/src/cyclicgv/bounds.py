"""Exact and high-precision evaluation of the closed-form code bounds.

Real-valued quantities (binary entropy, the tail bound, rates) are
computed with mpmath at 120 bits of working precision, well past the
53-bit double baseline, because comparisons of the tail bound against
values near 1 at small n are precision-sensitive. Ball volumes are exact
integers. The strict-radius helper is the single place that converts a
rational threshold into an integer disagreement count, so every module
puts the strict/non-strict boundary in the same spot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .codeword import DistanceThreshold
from .errors import DomainError

PRECISION_BITS = 120

DeltaLike = DistanceThreshold | Fraction | int


def _as_fraction(delta: DeltaLike) -> Fraction:
    if isinstance(delta, DistanceThreshold):
        return delta.as_fraction()
    if isinstance(delta, (Fraction, int)):
        return Fraction(delta)
    raise DomainError(f"not a rational threshold: {delta!r}")


def strict_radius(n: int, delta: DeltaLike) -> int:
    """Largest count c with c/n < delta: the radius of the open ball.

    A word y has d(x, y) < delta exactly when the disagreement count is
    <= this radius. Returns -1 when delta = 0 (the open ball is empty).
    """
    d = _as_fraction(delta)
    if n < 1:
        raise DomainError("n must be >= 1")
    return (d.numerator * n - 1) // d.denominator


def threshold_count(n: int, delta: DeltaLike) -> int:
    """Smallest count c with c/n >= delta."""
    return strict_radius(n, delta) + 1


def binary_entropy(delta: DeltaLike) -> mp.mpf:
    """H(delta) = -delta*log2(delta) - (1-delta)*log2(1-delta), H(0)=H(1)=0."""
    d = _as_fraction(delta)
    if d < 0 or d > 1:
        raise DomainError(f"entropy argument {d} outside [0, 1]")
    if d == 0 or d == 1:
        return mp.mpf(0)
    with mp.workprec(PRECISION_BITS):
        x = mp.mpf(d.numerator) / d.denominator
        return -(x * mp.log(x, 2) + (1 - x) * mp.log(1 - x, 2))


def ball_volume(n: int, r: int) -> int:
    """Exact Hamming ball volume V(n, r) = sum_{k<=r} C(n, k).

    Computed by the running-product recurrence C(n,k+1) = C(n,k)(n-k)/(k+1)
    so the bound checks stay exact on the integer side.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if r < 0 or r > n:
        raise DomainError(f"radius {r} outside [0, {n}]")
    total = 1
    term = 1
    for k in range(r):
        term = term * (n - k) // (k + 1)
        total += term
    return total


def ball_entropy_bound(n: int, delta: DeltaLike) -> mp.mpf:
    """2^{H(delta) * n}, the entropy upper bound on the ball volume."""
    with mp.workprec(PRECISION_BITS):
        return mp.power(2, binary_entropy(delta) * n)


def self_distance_tail_bound(n: int, delta: DeltaLike) -> mp.mpf:
    """Tail bound 2(n-1) * 2^{(H(delta)-1) n} on the low-self-distance event.

    Strictly decreasing in n for fixed delta < 1/2 once n clears a
    delta-dependent knee.
    """
    if n < 2:
        raise DomainError("tail bound needs n >= 2")
    d = _as_fraction(delta)
    if not 0 <= d < Fraction(1, 2):
        raise DomainError(f"tail bound regime is 0 <= delta < 1/2, got {d}")
    with mp.workprec(PRECISION_BITS):
        return 2 * (n - 1) * mp.power(2, (binary_entropy(d) - 1) * n)


def gv_rate(delta: DeltaLike) -> mp.mpf:
    """1 - H(delta), the Gilbert-Varshamov rate at threshold delta."""
    d = _as_fraction(delta)
    if not 0 <= d < Fraction(1, 2):
        raise DomainError(f"GV rate domain is [0, 1/2), got {d}")
    with mp.workprec(PRECISION_BITS):
        return 1 - binary_entropy(d)


def code_rate(size: int, n: int) -> mp.mpf:
    """log2(size) / n for a code of the given size and length."""
    if size < 1:
        raise DomainError("rate undefined for an empty code")
    if n < 1:
        raise DomainError("n must be >= 1")
    with mp.workprec(PRECISION_BITS):
        return mp.log(mp.mpf(size), 2) / n


def real_str(x, digits: int = 15) -> str:
    """Decimal rendering with a fixed significant-digit budget."""
    with mp.workprec(PRECISION_BITS):
        return mp.nstr(mp.mpf(x), digits, strip_zeros=True)


@dataclass(frozen=True)
class BoundReport:
    """Every closed-form quantity for one (n, delta) instance.

    ``ball_volume`` is V(n, floor(delta * n)), the exact count the entropy
    bound dominates for delta <= 1/2.
    """

    n: int
    delta: DistanceThreshold
    entropy: mp.mpf
    ball_volume: int
    ball_entropy_bound: mp.mpf
    tail_bound: mp.mpf | None
    gv_rate: mp.mpf | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": str(self.delta),
            "entropy": real_str(self.entropy),
            "ball_radius": (self.delta.p * self.n) // self.delta.q,
            "ball_volume": self.ball_volume,
            "ball_entropy_bound": real_str(self.ball_entropy_bound),
            "tail_bound": (None if self.tail_bound is None
                           else real_str(self.tail_bound)),
            "gv_rate": None if self.gv_rate is None else real_str(self.gv_rate),
        }


def bound_report(n: int, delta: DistanceThreshold) -> BoundReport:
    """Evaluate all bound quantities; tail bound and rate only for delta < 1/2."""
    below_half = delta.is_below_half()
    return BoundReport(
        n=n,
        delta=delta,
        entropy=binary_entropy(delta),
        ball_volume=ball_volume(n, (delta.p * n) // delta.q),
        ball_entropy_bound=ball_entropy_bound(n, delta),
        tail_bound=(self_distance_tail_bound(n, delta)
                    if below_half and n >= 2 else None),
        gv_rate=gv_rate(delta) if below_half else None,
    )
