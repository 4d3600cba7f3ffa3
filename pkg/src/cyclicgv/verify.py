"""Independent re-verification of code properties, from raw bits only.

Every check recomputes distances through the codeword operations and
ignores whatever metadata a CodeSet claims about itself. Checks are pure
read-only scans; failing checks always carry a concrete witness.

The minimum-distance check certifies the code's minimum Hamming distance:
for a cyclic-closed set that decomposes into cyclic distance >= delta
between different orbits plus self-distance >= delta within each orbit,
and the scan runs once per orbit-representative pair (cyclic distance is
shift-invariant, which cuts the all-pairs cost by up to n^2). Sets that
are not cyclic-closed fall back to a literal all-pairs scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .autocyclic import DEFAULT_EXHAUSTIVE_LIMIT, _trial_words
from .bounds import strict_radius, threshold_count
from .codeset import CodeSet
from .codeword import (Codeword, DistanceThreshold, auto_cyclic_distance,
                       batch_auto_min_counts, batch_canonical_values,
                       batch_closest_pair, batch_min_counts_to_set,
                       batch_strict_min_counts, cyclic_distance, hamming,
                       shift)
from .errors import CapacityError, DomainError, WitnessNotFoundError

DEFAULT_PAIR_BUDGET = 1 << 16
DEFAULT_XOR_BUDGET = 1 << 21


@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    witness: dict | None = None
    partial: bool = False

    def to_json_dict(self) -> dict:
        out = {"check": self.check, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.partial:
            out["partial"] = True
        return out


@dataclass
class VerificationReport:
    subject: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {"subject": self.subject,
                "all_pass": self.all_passed,
                "checks": [c.to_json_dict() for c in self.checks]}


def _closure_witness(c: CodeSet) -> tuple[int, int] | None:
    """First (word, shift) whose rotation is missing, or None if closed."""
    n = c.length
    mask = (1 << n) - 1
    for v in c.sorted_values():
        r = v
        for i in range(1, n):
            r = ((r << 1) | (r >> (n - 1))) & mask
            if r not in c.words:
                return v, i
    return None


def check_cyclic_closure(c: CodeSet) -> CheckResult:
    """Pass iff every rotation of every member is a member."""
    w = _closure_witness(c)
    if w is None:
        return CheckResult("cyclic_closure", True)
    v, i = w
    return CheckResult("cyclic_closure", False,
                       witness={"word": format(v, f"0{c.length}b"), "shift": i})


def _orbit_representatives(c: CodeSet) -> list[int]:
    if not c.words:
        return []
    canon = batch_canonical_values(c.sorted_values(), c.length)
    return sorted({int(v) for v in canon})


def _pair_from_index(k: int, m: int) -> tuple[int, int]:
    """Invert the row-major enumeration of pairs (a, b), a < b, over m items."""
    # a is the largest row whose block starts at or before k
    # block start of row a: a*m - a*(a+1)/2
    a = m - 2 - int((isqrt(8 * (m * (m - 1) // 2 - k - 1) + 1) - 1) // 2)
    start = a * m - a * (a + 1) // 2
    b = a + 1 + (k - start)
    return a, b


def check_min_cyclic_distance(c: CodeSet, delta: DistanceThreshold, *,
                              pair_budget: int = DEFAULT_PAIR_BUDGET
                              ) -> CheckResult:
    """Pass iff every pair of distinct members is at distance >= delta.

    Between different orbits the certified quantity is the cyclic
    distance; within an orbit it is the self-distance under rotation. Both
    dominate the plain Hamming distance of the witness pair reported on
    failure. Exceeding the pair budget raises CapacityError carrying a
    partial result over a deterministic stride sample of pairs.
    """
    name = "min_cyclic_distance"
    n = c.length
    if c.size < 2:
        return CheckResult(name, True)
    t = threshold_count(n, delta)
    closed = _closure_witness(c) is None
    if closed:
        reps = _orbit_representatives(c)
        within_counts = batch_auto_min_counts(reps, n)
        worst_within = int(within_counts.min())
        pairs = len(reps) * (len(reps) - 1) // 2
        if pairs > pair_budget:
            partial = _sampled_min_distance(reps, n, t, pair_budget, name)
            if worst_within < t and partial.passed:
                j = int(np.argmin(within_counts))
                pair = _closest_rotation_pair(Codeword(reps[j], n))
                partial = CheckResult(name, False,
                                      witness=_pair_witness(*pair),
                                      partial=True)
            raise CapacityError(
                f"{pairs} representative pairs exceed budget {pair_budget}",
                partial=partial)
        between_count, ia, ib = batch_closest_pair(reps, n)
        if worst_within >= t and between_count >= t:
            return CheckResult(name, True)
        if between_count < worst_within:
            a, b = Codeword(reps[ia], n), Codeword(reps[ib], n)
            pair = _closest_shift_pair(a, b)
            return CheckResult(name, False, witness=_pair_witness(*pair))
        j = int(np.argmin(within_counts))
        rep = Codeword(reps[j], n)
        return CheckResult(name, False,
                           witness=_pair_witness(*_closest_rotation_pair(rep)))
    # not closed: literal scan over member pairs
    values = c.sorted_values()
    pairs = len(values) * (len(values) - 1) // 2
    if pairs > pair_budget:
        raise CapacityError(
            f"{pairs} member pairs exceed budget {pair_budget}",
            partial=_sampled_min_distance(values, n, t, pair_budget, name,
                                          plain_hamming=True))
    best, pair = n + 1, None
    for i, u in enumerate(values):
        for v in values[i + 1:]:
            cnt = (u ^ v).bit_count()
            if cnt < best:
                best, pair = cnt, (Codeword(u, n), Codeword(v, n))
    if best >= t:
        return CheckResult(name, True)
    return CheckResult(name, False, witness=_pair_witness(*pair))


def _pair_witness(a: Codeword, b: Codeword) -> dict:
    return {"word_a": a.to_text(), "word_b": b.to_text(),
            "distance": str(hamming(a, b))}


def _closest_shift_pair(a: Codeword, b: Codeword) -> tuple[Codeword, Codeword]:
    """(rotation of a, b) realizing the cyclic distance."""
    best_i = min(range(a.length),
                 key=lambda i: hamming(shift(a, i), b).count)
    return shift(a, best_i), b


def _closest_rotation_pair(a: Codeword) -> tuple[Codeword, Codeword]:
    """(a, rotation of a) realizing the self-distance under rotation."""
    n = a.length
    best_i, best_c = None, n + 1
    for i in range(1, n):
        r = shift(a, i)
        if r.value == a.value:
            continue
        cnt = hamming(a, r).count
        if cnt < best_c:
            best_i, best_c = i, cnt
    return a, shift(a, best_i)


def _sampled_min_distance(values: list[int], n: int, t: int, budget: int,
                          name: str, plain_hamming: bool = False) -> CheckResult:
    total = len(values) * (len(values) - 1) // 2
    stride = -(-total // budget)
    best, pair = n + 1, None
    for k in range(0, total, stride):
        i, j = _pair_from_index(k, len(values))
        a, b = Codeword(values[i], n), Codeword(values[j], n)
        cnt = ((a.value ^ b.value).bit_count() if plain_hamming
               else cyclic_distance(a, b).count)
        if cnt < best:
            best, pair = cnt, (a, b)
    if best >= t:
        return CheckResult(name, True, partial=True)
    if not plain_hamming:
        pair = _closest_shift_pair(*pair)
    return CheckResult(name, False, witness=_pair_witness(*pair), partial=True)


def check_maximality(c: CodeSet, cprime: CodeSet,
                     delta: DistanceThreshold) -> CheckResult:
    """Pass iff every word of cprime minus c conflicts with some member of c.

    A leftover word conflicts when its cyclic distance to the code is
    strictly below delta; a non-conflicting leftover witnesses that the
    code is not maximal.
    """
    name = "maximality"
    if c.length != cprime.length:
        raise DomainError("code and pool lengths differ")
    if not c.words <= cprime.words:
        raise DomainError("code is not a subset of the pool")
    n = c.length
    leftovers = sorted(cprime.words - c.words)
    if not leftovers:
        return CheckResult(name, True)
    r = strict_radius(n, delta)
    both_closed = (_closure_witness(c) is None
                   and _closure_witness(cprime) is None)
    members = _orbit_representatives(c) if both_closed else c.sorted_values()
    if both_closed:
        canon = batch_canonical_values(leftovers, n)
        queries = sorted({int(v) for v in canon})
    else:
        queries = leftovers
    counts = batch_min_counts_to_set(queries, members, n)
    bad = np.nonzero(counts > r)[0]
    if not bad.size:
        return CheckResult(name, True)
    j = int(bad[0])
    witness = {"word": format(queries[j], f"0{n}b"),
               "closest_distance": (f"{int(counts[j])}/{n}"
                                    if counts[j] <= n else "INF")}
    return CheckResult(name, False, witness=witness)


def check_not_linear(c: CodeSet, *,
                     xor_budget: int = DEFAULT_XOR_BUDGET) -> CheckResult:
    """Pass iff the set is confirmed non-linear.

    Evidence is either a missing zero word or a member pair whose XOR
    leaves the set. A full pair scan reporting no evidence means the set
    is linear (passed=False, no witness). If the pair count exceeds the
    budget, a deterministic stride sample is scanned instead and a
    no-evidence verdict is flagged partial.
    """
    name = "not_linear"
    n = c.length
    if 0 not in c.words:
        return CheckResult(name, True, witness={"reason": "zero word missing"})
    values = c.sorted_values()
    total = len(values) * (len(values) - 1) // 2
    stride = 1 if total <= xor_budget else -(-total // xor_budget)
    if stride == 1:
        for i, u in enumerate(values):
            for v in values[i + 1:]:
                if (u ^ v) not in c.words:
                    return CheckResult(name, True, witness=_xor_witness(u, v, n))
        return CheckResult(name, False)
    for k in range(0, total, stride):
        i, j = _pair_from_index(k, len(values))
        u, v = values[i], values[j]
        if (u ^ v) not in c.words:
            return CheckResult(name, True, witness=_xor_witness(u, v, n))
    return CheckResult(name, False, partial=True)


def _xor_witness(u: int, v: int, n: int) -> dict:
    return {"word_a": format(u, f"0{n}b"), "word_b": format(v, f"0{n}b"),
            "xor": format(u ^ v, f"0{n}b")}


@dataclass(frozen=True)
class NonlinearityWitness:
    """A triple (x, y, x^y) certifying that the auto-cyclic set is not linear.

    x clears the threshold with margin 2/n, y = x with the last character
    flipped still clears it, yet their XOR is the weight-one word whose
    self-distance under rotation is exactly 2/n.
    """

    x: Codeword
    y: Codeword
    sum_word: Codeword
    delta: DistanceThreshold

    def margin(self) -> Fraction:
        return self.delta.as_fraction() + Fraction(2, self.x.length)

    def validate(self) -> None:
        n = self.x.length
        if self.sum_word.value != self.x.value ^ self.y.value:
            raise DomainError("sum word is not x XOR y")
        if self.sum_word.value != 1:
            raise DomainError("sum word is not 0^{n-1}1")
        if not auto_cyclic_distance(self.x) >= self.margin():
            raise DomainError("x does not clear delta + 2/n")
        if not auto_cyclic_distance(self.y) >= self.delta:
            raise DomainError("y does not clear delta")
        if auto_cyclic_distance(self.sum_word) != Fraction(2, n):
            raise DomainError("sum word self-distance is not 2/n")

    def to_json_dict(self) -> dict:
        return {
            "n": self.x.length,
            "delta": str(self.delta),
            "margin": str(self.margin()),
            "x": self.x.to_text(),
            "y": self.y.to_text(),
            "sum": self.sum_word.to_text(),
            "auto_distance_x": str(auto_cyclic_distance(self.x)),
            "auto_distance_y": str(auto_cyclic_distance(self.y)),
            "auto_distance_sum": str(auto_cyclic_distance(self.sum_word)),
        }


def find_nonlinearity_witness(n: int, delta: DistanceThreshold, *,
                              seed: int = 0, budget: int = 200000,
                              exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT
                              ) -> NonlinearityWitness:
    """Find x with every nontrivial rotation at distance >= delta + 2/n.

    Exhaustive ascending scan for n within the limit (the result is the
    smallest such word); seeded sampling beyond it (the result is the
    first hit in trial order). Flipping the last character of x yields y;
    x XOR y is the weight-one word.
    """
    margin = delta.as_fraction() + Fraction(2, n)
    if margin >= Fraction(1, 2):
        raise DomainError(
            f"needs delta + 2/n < 1/2, got {margin} (n={n}, delta={delta})")
    need = threshold_count(n, margin)
    x_value: int | None = None
    if n <= exhaustive_limit:
        total = 1 << n
        chunk = 1 << 20
        for s in range(0, total, chunk):
            values = np.arange(s, min(s + chunk, total), dtype=np.uint64)
            counts = batch_strict_min_counts(values, n)
            hits = np.nonzero(counts >= need)[0]
            if hits.size:
                x_value = s + int(hits[0])
                break
    else:
        chunk = 1 << 12
        for s in range(0, budget, chunk):
            words = _trial_words(seed, s, min(chunk, budget - s), n)
            counts = batch_strict_min_counts(words, n)
            hits = np.nonzero(counts >= need)[0]
            if hits.size:
                x_value = int(words[int(hits[0])])
                break
    if x_value is None:
        raise WitnessNotFoundError(
            f"no word with all rotations at distance >= {margin} found "
            f"(n={n}, budget={budget})",
            margin=str(margin), budget=budget)
    x = Codeword(x_value, n)
    y = Codeword(x_value ^ 1, n)
    witness = NonlinearityWitness(x=x, y=y, sum_word=Codeword(1, n),
                                  delta=delta)
    witness.validate()
    return witness
