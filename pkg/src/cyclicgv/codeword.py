"""Exact bit-level codeword arithmetic.

A codeword is a fixed-length binary word x_0 ... x_{n-1}. Character 0 is
the leftmost character of the textual form and the most significant of the
n low bits of the packed integer value, so numeric order on values equals
lexicographic order on the textual forms. Index arithmetic on positions is
always modulo n.

Distances are exact integer pairs (disagreement count, n) and never
floats: threshold comparisons cross-multiply, because at small n the
interesting comparisons sit exactly on rational boundaries.

Words of any length are supported: the packed value is an arbitrary-size
integer, and the batch helpers switch to single-machine-word kernels when
n <= 64.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, TYPE_CHECKING

import numpy as np

from . import kernels
from .errors import DomainError, LengthMismatchError, ParseError

if TYPE_CHECKING:
    from .codeset import CodeSet

KERNEL_MAX_LENGTH = 64


@dataclass(frozen=True, order=True)
class Codeword:
    """An immutable length-n binary word, packed into an integer."""

    value: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise DomainError("codeword length must be >= 1")
        if not 0 <= self.value < (1 << self.length):
            raise DomainError(
                f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_text(cls, text: str) -> "Codeword":
        """Parse the textual form: a 0/1 string, character 0 leftmost."""
        if not text or any(ch not in "01" for ch in text):
            raise ParseError(f"not a binary word: {text!r}")
        return cls(int(text, 2), len(text))

    def to_text(self) -> str:
        return format(self.value, f"0{self.length}b")

    def bit(self, i: int) -> int:
        """Character x_i, position taken modulo n."""
        i %= self.length
        return (self.value >> (self.length - 1 - i)) & 1

    def weight(self) -> int:
        return self.value.bit_count()

    def __str__(self) -> str:
        return self.to_text()


class RationalDistance:
    """A normalized distance count/length, or the distinguished INFINITE.

    INFINITE stands in for the conventional self-distance of words whose
    every rotation equals the word itself; it compares greater than every
    finite distance and every threshold. Comparisons are exact
    cross-multiplications, never floating point; equality and ordering use
    value semantics (2/4 == 1/2).
    """

    __slots__ = ("count", "length")

    def __init__(self, count: int | None, length: int):
        if length < 1:
            raise DomainError("distance length must be >= 1")
        if count is not None and not 0 <= count <= length:
            raise DomainError(f"count {count} out of range for length {length}")
        object.__setattr__(self, "count", count)
        object.__setattr__(self, "length", length)

    def __setattr__(self, name, value):
        raise AttributeError("RationalDistance is immutable")

    @classmethod
    def infinite(cls, length: int) -> "RationalDistance":
        return cls(None, length)

    @property
    def is_infinite(self) -> bool:
        return self.count is None

    def as_fraction(self) -> Fraction | None:
        if self.count is None:
            return None
        return Fraction(self.count, self.length)

    @staticmethod
    def _ratio(other) -> tuple[int, int] | None:
        """(numerator, denominator) of the comparand; None means infinite."""
        if isinstance(other, RationalDistance):
            if other.count is None:
                return None
            return other.count, other.length
        if isinstance(other, DistanceThreshold):
            return other.p, other.q
        if isinstance(other, Fraction):
            return other.numerator, other.denominator
        if isinstance(other, int):
            return other, 1
        return NotImplemented

    def _cmp(self, other) -> int | None:
        ratio = self._ratio(other)
        if ratio is NotImplemented:
            return None
        if self.count is None:
            return 0 if ratio is None else 1
        if ratio is None:
            return -1
        num, den = ratio
        lhs = self.count * den
        rhs = num * self.length
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        return hash(self.as_fraction()) if self.count is not None else hash("INF")

    def __repr__(self):
        return f"RationalDistance({self.count}, {self.length})"

    def __str__(self):
        return "INF" if self.count is None else f"{self.count}/{self.length}"


@dataclass(frozen=True)
class DistanceThreshold:
    """An exact rational threshold delta = p/q in lowest terms, 0 <= p/q <= 1.

    Construction procedures additionally require delta < 1/2; those guards
    live at the call sites, the type itself admits the full unit interval
    so verification can use any threshold.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise DomainError("threshold denominator must be positive")
        if self.p < 0 or self.p > self.q:
            raise DomainError(f"threshold {self.p}/{self.q} outside [0, 1]")
        g = gcd(self.p, self.q)
        if g > 1:
            object.__setattr__(self, "p", self.p // g)
            object.__setattr__(self, "q", self.q // g)

    @classmethod
    def parse(cls, text: str) -> "DistanceThreshold":
        """Parse 'p/q' (or a bare integer numerator meaning p/1)."""
        parts = text.strip().split("/")
        try:
            if len(parts) == 1:
                return cls(int(parts[0]), 1)
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
        except ValueError:
            pass
        except DomainError:
            raise
        raise ParseError(f"not a rational threshold: {text!r}")

    @classmethod
    def from_fraction(cls, frac: Fraction) -> "DistanceThreshold":
        return cls(frac.numerator, frac.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def is_below_half(self) -> bool:
        return 2 * self.p < self.q

    def __str__(self):
        return f"{self.p}/{self.q}"


def shift(x: Codeword, i: int) -> Codeword:
    """Cyclic shift i positions leftward: x_i,...,x_{n-1},x_0,...,x_{i-1}."""
    n = x.length
    i %= n
    if i == 0:
        return x
    mask = (1 << n) - 1
    return Codeword(((x.value << i) | (x.value >> (n - i))) & mask, n)


def xor(x: Codeword, y: Codeword) -> Codeword:
    if x.length != y.length:
        raise LengthMismatchError(f"lengths differ: {x.length} vs {y.length}")
    return Codeword(x.value ^ y.value, x.length)


def hamming(x: Codeword, y: Codeword) -> RationalDistance:
    """Normalized Hamming distance: disagreement count over n."""
    if x.length != y.length:
        raise LengthMismatchError(f"lengths differ: {x.length} vs {y.length}")
    return RationalDistance((x.value ^ y.value).bit_count(), x.length)


def cyclic_distance(x: Codeword, y: Codeword) -> RationalDistance:
    """Minimum Hamming distance between y and any rotation of x."""
    if x.length != y.length:
        raise LengthMismatchError(f"lengths differ: {x.length} vs {y.length}")
    n = x.length
    best = n
    v = x.value
    mask = (1 << n) - 1
    for i in range(n):
        best = min(best, (v ^ y.value).bit_count())
        if best == 0:
            break
        v = ((v << 1) | (v >> (n - 1))) & mask
    return RationalDistance(best, n)


def auto_cyclic_distance(x: Codeword) -> RationalDistance:
    """Minimum distance between x and its rotations that differ from x.

    INFINITE when no rotation differs (exactly the period-1 words; for
    prime n those are the two constant words).
    """
    n = x.length
    best: int | None = None
    v = x.value
    mask = (1 << n) - 1
    for _ in range(1, n):
        v = ((v << 1) | (v >> (n - 1))) & mask
        c = (v ^ x.value).bit_count()
        if c != 0 and (best is None or c < best):
            best = c
    if best is None:
        return RationalDistance.infinite(n)
    return RationalDistance(best, n)


def period(x: Codeword) -> int:
    """Smallest p >= 1 with shift(x, p) = x; always divides n."""
    n = x.length
    v = x.value
    mask = (1 << n) - 1
    r = v
    for p in range(1, n + 1):
        r = ((r << 1) | (r >> (n - 1))) & mask
        if r == v:
            return p
    raise AssertionError("unreachable: shift by n is the identity")


def orbit_values(x: Codeword) -> tuple[int, ...]:
    """Sorted distinct values of all rotations of x."""
    n = x.length
    mask = (1 << n) - 1
    out = set()
    v = x.value
    for _ in range(n):
        out.add(v)
        v = ((v << 1) | (v >> (n - 1))) & mask
    return tuple(sorted(out))


def orbit(x: Codeword) -> "CodeSet":
    """The set of distinct rotations of x; its size equals period(x)."""
    from .codeset import CodeSet

    return CodeSet(length=x.length, words=frozenset(orbit_values(x)),
                   cyclic_closed=True)


def canonical_rotation(x: Codeword) -> Codeword:
    """The numerically smallest rotation of x (canonical orbit key)."""
    return Codeword(min(orbit_values(x)), x.length)


# Batch forms. These are the same public operations applied to packed
# value arrays; n <= 64 dispatches to the compiled kernels, longer words
# take the scalar path.

def _as_value_array(values) -> np.ndarray:
    return np.ascontiguousarray(values, dtype=np.uint64)


def batch_auto_min_counts(values, n: int) -> np.ndarray:
    """Min differing-rotation XOR count per word; n+1 encodes INFINITE."""
    if n <= KERNEL_MAX_LENGTH:
        return kernels.auto_min_counts(_as_value_array(values), n)
    out = np.empty(len(values), dtype=np.int64)
    for j, v in enumerate(values):
        d = auto_cyclic_distance(Codeword(int(v), n))
        out[j] = n + 1 if d.is_infinite else d.count
    return out


def batch_strict_min_counts(values, n: int) -> np.ndarray:
    """Min XOR count per word over all nontrivial rotations, zeros included."""
    if n <= KERNEL_MAX_LENGTH:
        return kernels.strict_min_counts(_as_value_array(values), n)
    out = np.empty(len(values), dtype=np.int64)
    mask = (1 << n) - 1
    for j, v in enumerate(values):
        v = int(v)
        best = n + 1
        r = v
        for _ in range(1, n):
            r = ((r << 1) | (r >> (n - 1))) & mask
            best = min(best, (r ^ v).bit_count())
        out[j] = best
    return out


def batch_min_cyclic_counts(x_value: int, values, n: int) -> np.ndarray:
    """Cyclic XOR count from one word to each word of an array."""
    if n <= KERNEL_MAX_LENGTH:
        return kernels.min_cyc_counts(int(x_value), _as_value_array(values), n)
    x = Codeword(int(x_value), n)
    return np.array(
        [cyclic_distance(x, Codeword(int(v), n)).count for v in values],
        dtype=np.int64)


def batch_min_counts_to_set(queries, members, n: int) -> np.ndarray:
    """Per query: min cyclic XOR count to any member; n+1 if members empty."""
    if n <= KERNEL_MAX_LENGTH:
        return kernels.min_cyc_counts_to_set(
            _as_value_array(queries), _as_value_array(members), n)
    members = [Codeword(int(v), n) for v in members]
    out = np.full(len(queries), n + 1, dtype=np.int64)
    for j, q in enumerate(queries):
        qw = Codeword(int(q), n)
        for m in members:
            c = cyclic_distance(qw, m).count
            if c < out[j]:
                out[j] = c
    return out


def batch_canonical_values(values, n: int) -> np.ndarray | list[int]:
    """Canonical (smallest-rotation) value per word."""
    if n <= KERNEL_MAX_LENGTH:
        return kernels.canonical_rotations(_as_value_array(values), n)
    return [canonical_rotation(Codeword(int(v), n)).value for v in values]


def batch_closest_pair(values, n: int) -> tuple[int, int, int]:
    """(count, a, b): minimum pairwise cyclic XOR count, first pair on ties."""
    if n <= KERNEL_MAX_LENGTH:
        c, a, b = kernels.closest_pair_counts(_as_value_array(values), n)
        return int(c), int(a), int(b)
    best, bi, bj = n + 1, -1, -1
    words = [Codeword(int(v), n) for v in values]
    for a in range(len(words) - 1):
        for b in range(a + 1, len(words)):
            c = cyclic_distance(words[a], words[b]).count
            if c < best:
                best, bi, bj = c, a, b
    return best, bi, bj


def words_from_values(values: Iterable[int], n: int) -> list[Codeword]:
    return [Codeword(int(v), n) for v in values]
