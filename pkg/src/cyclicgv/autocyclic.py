"""Construction of auto-cyclic codes and empirical tail validation.

The auto-cyclic code for (n, delta) is the set of all length-n words whose
rotations that differ from the word disagree with it in at least delta*n
positions. Membership is a function of the orbit, so the set is closed
under rotation by construction.

Small n is handled by an exhaustive scan over all 2^n words; larger n by
rejection sampling with a counter-based generator (one substream per trial
index), which makes runs reproducible for a given seed and independent of
chunking and worker count. Trials are embarrassingly parallel; results are
folded in trial-index order, so any partition across workers yields the
same output as serial execution.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import prng
from .bounds import strict_radius
from .codeset import CodeSet
from .codeword import (Codeword, DistanceThreshold, KERNEL_MAX_LENGTH,
                       auto_cyclic_distance, batch_auto_min_counts,
                       batch_canonical_values, canonical_rotation,
                       orbit_values)
from .errors import CapacityError, DomainError, SamplingBudgetError

DEFAULT_EXHAUSTIVE_LIMIT = 24
DEFAULT_BUDGET_FACTOR = 1000

_ENUM_CHUNK = 1 << 20
_TRIAL_CHUNK = 1 << 14


def is_auto_cyclic_member(x: Codeword, delta: DistanceThreshold) -> bool:
    """True iff the self-distance under rotation is >= delta (INFINITE passes)."""
    return auto_cyclic_distance(x) >= delta


def _chunk_results_in_order(starts: list[int], work: Callable[[int], object],
                            threads: int) -> Iterator[object]:
    """Yield work(start) for each start, in order, with a bounded window.

    With threads > 1 a sliding window of futures keeps workers busy while
    preserving the serial fold order (and allowing early exit).
    """
    if threads <= 1:
        for s in starts:
            yield work(s)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        window: deque = deque()
        idx = 0
        while idx < len(starts) or window:
            while idx < len(starts) and len(window) < threads + 1:
                window.append(pool.submit(work, starts[idx]))
                idx += 1
            yield window.popleft().result()


def _exhaustive_member_mask(n: int, delta: DistanceThreshold, start: int,
                            count: int) -> np.ndarray:
    values = np.arange(start, start + count, dtype=np.uint64)
    counts = batch_auto_min_counts(values, n)
    return counts > strict_radius(n, delta)


def exact_tail_count(n: int, delta: DistanceThreshold, *,
                     limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                     threads: int = 1) -> int:
    """Exact number of words failing the membership test, by full scan."""
    if n > limit:
        raise CapacityError(
            f"n={n} exceeds the exhaustive limit {limit}; "
            "use sampling or raise the limit")
    total = 1 << n
    starts = list(range(0, total, _ENUM_CHUNK))

    def work(s: int) -> int:
        cnt = min(_ENUM_CHUNK, total - s)
        return int(np.sum(~_exhaustive_member_mask(n, delta, s, cnt)))

    return sum(_chunk_results_in_order(starts, work, threads))


def count_auto_cyclic(n: int, delta: DistanceThreshold, *,
                      limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                      threads: int = 1) -> int:
    """Exact size of the auto-cyclic set, without materializing it."""
    return (1 << n) - exact_tail_count(n, delta, limit=limit, threads=threads)


def enumerate_auto_cyclic(n: int, delta: DistanceThreshold, *,
                          limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                          threads: int = 1) -> CodeSet:
    """All words with self-distance >= delta, by exhaustive scan.

    Memory scales with the member count (one Python int per word); at the
    default limit the worst case is 2^24 words.
    """
    if n > limit:
        raise CapacityError(
            f"n={n} exceeds the exhaustive limit {limit}; "
            "use sample_auto_cyclic or raise the limit")
    total = 1 << n
    starts = list(range(0, total, _ENUM_CHUNK))

    def work(s: int):
        cnt = min(_ENUM_CHUNK, total - s)
        mask = _exhaustive_member_mask(n, delta, s, cnt)
        return np.nonzero(mask)[0] + s

    members: set[int] = set()
    for hits in _chunk_results_in_order(starts, work, threads):
        members.update(int(v) for v in hits)
    return CodeSet(length=n, words=frozenset(members), delta=delta,
                   kind="autocyclic", cyclic_closed=True)


@dataclass(frozen=True)
class SampleStats:
    """Acceptance bookkeeping for one sampling run."""

    attempts: int
    accepted: int
    orbits: int
    target_orbits: int
    budget: int


def _trial_words(seed: int, start: int, count: int, n: int) -> list[int]:
    if n <= KERNEL_MAX_LENGTH:
        from . import kernels
        arr = kernels.philox_words(np.uint64(seed), np.uint64(start), count, n)
        return [int(v) for v in arr]
    return [prng.word_for_trial(seed, start + j, n) for j in range(count)]


def sample_auto_cyclic_with_stats(
        n: int, delta: DistanceThreshold, target_orbits: int, seed: int, *,
        attempt_budget: int | None = None,
        threads: int = 1) -> tuple[CodeSet, SampleStats]:
    """Rejection-sample distinct orbits until the target count is reached.

    Words are drawn uniformly (independent per-bit), one substream per
    trial index; each accepted word contributes its entire orbit, which
    guarantees cyclic closure. Identical arguments give identical output.
    Raises SamplingBudgetError carrying the partial set when the attempt
    budget runs out first.
    """
    if n < 2:
        raise DomainError("sampling needs n >= 2")
    if not delta.is_below_half():
        raise DomainError(f"sampling regime is delta < 1/2, got {delta}")
    if target_orbits < 1:
        raise DomainError("target_orbits must be >= 1")
    budget = attempt_budget if attempt_budget is not None \
        else DEFAULT_BUDGET_FACTOR * target_orbits
    r = strict_radius(n, delta)

    def work(s: int):
        cnt = min(_TRIAL_CHUNK, budget - s)
        words = _trial_words(seed, s, cnt, n)
        if n <= KERNEL_MAX_LENGTH:
            counts = batch_auto_min_counts(words, n)
            member = [bool(c > r) for c in counts]
            canon = [int(v) for v in batch_canonical_values(words, n)]
        else:
            member, canon = [], []
            for v in words:
                w = Codeword(v, n)
                member.append(is_auto_cyclic_member(w, delta))
                canon.append(canonical_rotation(w).value)
        return words, member, canon

    starts = list(range(0, budget, _TRIAL_CHUNK))
    collected: set[int] = set()
    orbit_keys: set[int] = set()
    attempts = accepted = 0
    done = False
    for words, member, canon in _chunk_results_in_order(starts, work, threads):
        for v, ok, key in zip(words, member, canon):
            attempts += 1
            if not ok:
                continue
            accepted += 1
            if key in orbit_keys:
                continue
            orbit_keys.add(key)
            collected.update(orbit_values(Codeword(v, n)))
            if len(orbit_keys) >= target_orbits:
                done = True
                break
        if done:
            break

    stats = SampleStats(attempts=attempts, accepted=accepted,
                        orbits=len(orbit_keys), target_orbits=target_orbits,
                        budget=budget)
    result = CodeSet(length=n, words=frozenset(collected), delta=delta,
                     kind="autocyclic", cyclic_closed=True)
    if not done:
        raise SamplingBudgetError(
            f"collected {stats.orbits} of {target_orbits} orbits within "
            f"{budget} attempts", partial=result, attempts=stats.attempts,
            accepted=stats.accepted, orbits=stats.orbits)
    return result, stats


def sample_auto_cyclic(n: int, delta: DistanceThreshold, target_orbits: int,
                       seed: int, *, attempt_budget: int | None = None,
                       threads: int = 1) -> CodeSet:
    result, _ = sample_auto_cyclic_with_stats(
        n, delta, target_orbits, seed,
        attempt_budget=attempt_budget, threads=threads)
    return result


@dataclass(frozen=True)
class TailEstimate:
    """Monte-Carlo estimate of a failure probability with a Hoeffding radius."""

    n: int
    delta: DistanceThreshold
    trials: int
    failures: int
    seed: int
    alpha: float
    generator: str = prng.GENERATOR_NAME
    shift: int | None = None

    @property
    def point_estimate(self) -> Fraction:
        return Fraction(self.failures, self.trials)

    @property
    def confidence_radius(self) -> float:
        # two-sided Hoeffding bound at confidence 1 - alpha
        return math.sqrt(math.log(2.0 / self.alpha) / (2.0 * self.trials))

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "delta": str(self.delta),
            "trials": self.trials,
            "failures": self.failures,
            "point_estimate": f"{float(self.point_estimate):.15g}",
            "point_estimate_exact": f"{self.failures}/{self.trials}",
            "confidence_radius": f"{self.confidence_radius:.15g}",
            "alpha": self.alpha,
            "seed": self.seed,
            "generator": self.generator,
        }
        if self.shift is not None:
            out["shift"] = self.shift
        return out


def estimate_tail(n: int, delta: DistanceThreshold, trials: int, seed: int,
                  alpha: float = 0.01, *, threads: int = 1) -> TailEstimate:
    """Estimate Pr[self-distance < delta] over uniform words."""
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if not 0 < alpha < 1:
        raise DomainError("alpha must be in (0, 1)")
    r = strict_radius(n, delta)
    starts = list(range(0, trials, _TRIAL_CHUNK))

    def work(s: int) -> int:
        cnt = min(_TRIAL_CHUNK, trials - s)
        words = _trial_words(seed, s, cnt, n)
        counts = batch_auto_min_counts(words, n)
        return int(np.sum(counts <= r))

    failures = sum(_chunk_results_in_order(starts, work, threads))
    return TailEstimate(n=n, delta=delta, trials=trials, failures=failures,
                        seed=seed, alpha=alpha)


def estimate_single_shift_tail(n: int, shift_index: int,
                               delta: DistanceThreshold, trials: int,
                               seed: int, alpha: float = 0.01) -> TailEstimate:
    """Diagnostic: estimate Pr[d(E^i(x), x) < delta] for one fixed shift i.

    The per-shift tail is what the union bound aggregates into the full
    bound; its own cap is 2 * 2^{(H(delta)-1) n}.
    """
    if not 1 <= shift_index < n:
        raise DomainError("shift index must be in 1..n-1")
    if trials < 1:
        raise DomainError("trials must be >= 1")
    r = strict_radius(n, delta)
    failures = 0
    for s in range(0, trials, _TRIAL_CHUNK):
        cnt = min(_TRIAL_CHUNK, trials - s)
        words = _trial_words(seed, s, cnt, n)
        if n <= KERNEL_MAX_LENGTH:
            arr = np.asarray(words, dtype=np.uint64)
            mask = np.uint64(0xFFFFFFFFFFFFFFFF if n == 64 else (1 << n) - 1)
            rot = ((arr << np.uint64(shift_index))
                   | (arr >> np.uint64(n - shift_index))) & mask
            counts = np.bitwise_count(arr ^ rot).astype(np.int64)
            failures += int(np.sum(counts <= r))
        else:
            full = (1 << n) - 1
            for v in words:
                rot = ((v << shift_index) | (v >> (n - shift_index))) & full
                failures += (v ^ rot).bit_count() <= r
    return TailEstimate(n=n, delta=delta, trials=trials, failures=failures,
                        seed=seed, alpha=alpha, shift=shift_index)
