"""GCDs of sums of k consecutive Gibonacci numbers.

Exact big-integer tooling for generalized Fibonacci sequences: term
evaluation, generalized Pisano periods, three equivalent routes to the
GCD of all k-term window sums, a k mod 12 classifier, and applications
(prime-factor restrictions, maximal moduli for a given period,
odd-indexed Lucas numbers from GCDs, and a sums-of-squares explorer).
"""

from .applications import (
    lucas_from_gcd,
    max_modulus_for_period,
    pisano_of_fib_lucas_moduli,
    prime_restriction_check,
    squares_gcd,
)
from .gcdsum import (
    CaseRow,
    Classification,
    Footnote,
    GcdSumResult,
    LcmMode,
    Method,
    ReducedSeed,
    classify,
    gcd_sum,
    gcd_sum_bruteforce,
    gcd_sum_lcm,
    reduce_seed,
)
from .pisano import (
    ParityScanReport,
    PeriodRecord,
    equivalent_up_to_shift,
    minimal_window_length,
    parity_scan,
    period_divides_k,
    period_lcm_compose,
    period_record,
    pisano_period,
)
from .sequences import (
    FIBONACCI,
    LUCAS,
    Identity,
    IdentityReport,
    Seed,
    SeedInvariants,
    coprime_seed_grid,
    fib,
    gib_term,
    lucas,
    seed_invariants,
    verify_identity,
    window_sum,
)

__version__ = "0.1.0"
