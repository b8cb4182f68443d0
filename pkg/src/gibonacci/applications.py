"""Consequences of the two GCD-of-sums characterizations.

* restrictions on the prime factors of odd-k values,
* predicted Fibonacci periods at Fibonacci/Lucas moduli and the largest
  modulus attaining a given even period,
* odd-indexed Lucas numbers recovered from any coprime-seed GCD,
* an empirical explorer for GCDs of sums of consecutive squares
  (conjecture territory: no theorem backs those values).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .factor import divisors, trial_division
from .gcdsum import gcd_sum
from .pisano import pisano_period
from .sequences import FIBONACCI, Seed, fib, gib_term, lucas

#: Residues mod 20 of primes that can never divide an odd-k value.
FORBIDDEN_PRIME_RESIDUES = (3, 7, 13, 17)


@dataclass(frozen=True)
class PrimeRestrictionReport:
    seed: Seed
    k: int
    value: int
    offending_primes: tuple[int, ...]
    unfactored_cofactor: int  # 1 when the value factored completely
    bound: int

    @property
    def clean(self) -> bool:
        return not self.offending_primes


def prime_restriction_check(seed: Seed, k: int, prime_bound: int = 10**6) -> PrimeRestrictionReport:
    """Check that no prime = 3, 7, 13, or 17 (mod 20) divides the odd-k value.

    Trial division only, up to prime_bound; any unfactored cofactor is
    surfaced so the claim stays sound up to the bound.
    """
    if k % 2 == 0:
        raise ValueError("k must be odd")
    seed.require_coprime()
    value = gcd_sum(seed, k).value
    factors, cofactor = trial_division(value, prime_bound)
    offending = tuple(
        p for p in sorted(factors) if p % 20 in FORBIDDEN_PRIME_RESIDUES
    )
    return PrimeRestrictionReport(seed, k, value, offending, cofactor, prime_bound)


@dataclass(frozen=True)
class FibLucasPeriodEntry:
    kind: str       # "F" or "L"
    i: int
    modulus: int
    predicted: int
    computed: int

    @property
    def matches(self) -> bool:
        return self.predicted == self.computed


@dataclass
class FibLucasPeriodReport:
    i_max: int
    entries: list[FibLucasPeriodEntry] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(e.matches for e in self.entries)


def pisano_of_fib_lucas_moduli(i_max: int) -> FibLucasPeriodReport:
    """Fibonacci periods at Fibonacci and Lucas moduli vs. their closed forms.

    Predictions: period at modulus F_i is 2i for even i >= 4 and 4i for
    odd i >= 5; at modulus L_i it is 4i for even i >= 2 and 2i for odd
    i >= 3.
    """
    if i_max < 5:
        raise ValueError("i_max must be >= 5")
    report = FibLucasPeriodReport(i_max)
    for i in range(4, i_max + 1):
        predicted = 2 * i if i % 2 == 0 else 4 * i
        m = fib(i)
        report.entries.append(
            FibLucasPeriodEntry("F", i, m, predicted, pisano_period(FIBONACCI, m))
        )
    for i in range(2, i_max + 1):
        predicted = 4 * i if i % 2 == 0 else 2 * i
        m = lucas(i)
        report.entries.append(
            FibLucasPeriodEntry("L", i, m, predicted, pisano_period(FIBONACCI, m))
        )
    return report


@dataclass(frozen=True)
class MaxModulusResult:
    """Largest modulus whose Fibonacci period equals the even number k."""

    k: int
    m_f: int
    predicted_form: str      # "fib_half" (k = 0 mod 4) or "lucas_half" (k = 2 mod 4)
    verified_period: int
    exhaustive_check: bool   # True when every divisor candidate was enumerated


def max_modulus_for_period(k: int, exhaustive: bool = False) -> MaxModulusResult:
    """The largest m with Fibonacci period exactly k, for even k >= 6.

    The value is F_{k/2} when k = 0 (mod 4) and L_{k/2} when k = 2
    (mod 4); its period is verified directly.  With exhaustive=True,
    every divisor m of the k-window GCD value (the only candidates,
    since the period of m divides k iff m divides that value) is checked
    and none with period exactly k may exceed the result.
    """
    if k % 2 != 0 or k < 6:
        raise ValueError("k must be an even integer >= 6")
    if k % 4 == 0:
        m_f, form = fib(k // 2), "fib_half"
    else:
        m_f, form = lucas(k // 2), "lucas_half"
    period = pisano_period(FIBONACCI, m_f)
    if period != k:
        raise AssertionError(f"period of modulus {m_f} is {period}, expected {k}")
    if exhaustive:
        candidates = gcd_sum(FIBONACCI, k).value
        best = max(
            (m for m in divisors(candidates) if m >= 2 and pisano_period(FIBONACCI, m) == k),
            default=0,
        )
        if best != m_f:
            raise AssertionError(
                f"exhaustive divisor scan found max modulus {best}, expected {m_f}"
            )
    return MaxModulusResult(k, m_f, form, period, exhaustive)


def lucas_from_gcd(seed: Seed, j: int) -> int:
    """The odd-indexed Lucas number L_j as a GCD over any coprime seed.

    L_j = gcd(G_{2j+1} - G_1, G_{2j+2} - G_2) whenever j is odd and the
    seed entries are coprime (the k = 2j window GCD).
    """
    if j % 2 == 0 or j < 1:
        raise ValueError("j must be an odd positive integer")
    seed.require_coprime()
    return math.gcd(
        gib_term(seed, 2 * j + 1) - seed.g1,
        gib_term(seed, 2 * j + 2) - (seed.g0 + seed.g1),
    )


@dataclass(frozen=True)
class SquaresGcdRecord:
    """Empirical GCD of sums of k consecutive squared terms.

    No closed form is known; values are observed over finitely many
    windows.  For the Fibonacci seed and even k the conjectured value
    F_k is attached for comparison.
    """

    seed: Seed
    k: int
    empirical_value: int
    windows_used: int
    conjectured: int | None
    matches_conjecture: bool | None


def squares_gcd(seed: Seed, k: int, num_windows: int | None = None) -> SquaresGcdRecord:
    """GCD of the first num_windows sums of k consecutive squares.

    k = 0 returns 0 (the empty sum).  Default window count 2k + 10
    (at least 50), deep enough to stabilize at desk scale.
    """
    seed.require_nondegenerate()
    if k < 0:
        raise ValueError("k must be >= 0")
    if num_windows is None:
        num_windows = max(2 * k + 10, 50)
    if k == 0:
        return SquaresGcdRecord(seed, 0, 0, 0, None, None)
    if num_windows < 2:
        raise ValueError("num_windows must be >= 2")
    terms = [gib_term(seed, n) for n in range(1, num_windows + k + 1)]
    squares = [t * t for t in terms]
    window = sum(squares[:k])
    value = window
    for n in range(1, num_windows):
        window += squares[n + k - 1] - squares[n - 1]
        value = math.gcd(value, window)
    conjectured = None
    matches = None
    if seed == FIBONACCI and k % 2 == 0:
        conjectured = fib(k)
        matches = value == conjectured
    return SquaresGcdRecord(seed, k, value, num_windows, conjectured, matches)
