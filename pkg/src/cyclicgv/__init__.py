"""Binary non-linear cyclic codes attaining the Gilbert-Varshamov rate.

Construction runs in two steps: build the auto-cyclic set (all words whose
differing rotations stay at least delta away), then greedily pack cyclic
orbits so distinct codewords keep Hamming distance >= delta. The library
also evaluates every closed-form bound involved, Monte-Carlo-validates the
tail inequality behind the first step, re-verifies finished codes from raw
bits, and exhibits the witness triple showing the auto-cyclic set is not
linear.
"""

from .autocyclic import (SampleStats, TailEstimate, count_auto_cyclic,
                         enumerate_auto_cyclic, estimate_single_shift_tail,
                         estimate_tail, exact_tail_count,
                         is_auto_cyclic_member, sample_auto_cyclic,
                         sample_auto_cyclic_with_stats)
from .bounds import (BoundReport, ball_entropy_bound, ball_volume,
                     binary_entropy, bound_report, code_rate, gv_rate,
                     self_distance_tail_bound, real_str, strict_radius, threshold_count)
from .codeset import CodeSet
from .codeword import (Codeword, DistanceThreshold, RationalDistance,
                       auto_cyclic_distance, canonical_rotation,
                       cyclic_distance, hamming, orbit, orbit_values, period,
                       shift, xor)
from .errors import (CapacityError, ContractError, CyclicGVError, DomainError,
                     LengthMismatchError, ParseError, SamplingBudgetError,
                     WitnessNotFoundError)
from .packing import (PackingTrace, conflict_set, greedy_pack, removal_cap,
                      verify_rate_bound)
from .verify import (CheckResult, NonlinearityWitness, VerificationReport,
                     check_cyclic_closure, check_maximality,
                     check_min_cyclic_distance, check_not_linear,
                     find_nonlinearity_witness)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "CapacityError", "CheckResult", "CodeSet", "Codeword",
    "ContractError", "CyclicGVError", "DistanceThreshold", "DomainError",
    "LengthMismatchError", "NonlinearityWitness", "PackingTrace",
    "ParseError", "RationalDistance", "SampleStats", "SamplingBudgetError",
    "TailEstimate", "VerificationReport", "WitnessNotFoundError",
    "auto_cyclic_distance", "ball_entropy_bound", "ball_volume",
    "binary_entropy", "bound_report", "canonical_rotation",
    "check_cyclic_closure", "check_maximality", "check_min_cyclic_distance",
    "check_not_linear", "code_rate", "conflict_set", "count_auto_cyclic",
    "cyclic_distance", "enumerate_auto_cyclic", "estimate_single_shift_tail",
    "estimate_tail", "exact_tail_count", "find_nonlinearity_witness",
    "greedy_pack", "gv_rate", "hamming", "is_auto_cyclic_member",
    "self_distance_tail_bound", "orbit", "orbit_values", "period", "real_str",
    "removal_cap", "sample_auto_cyclic", "sample_auto_cyclic_with_stats",
    "shift", "strict_radius", "threshold_count", "verify_rate_bound", "xor",
]
