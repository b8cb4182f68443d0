"""Exact arithmetic for Fibonacci, Lucas, and Gibonacci sequences.

A Gibonacci sequence is any integer sequence satisfying
``G_n = G_{n-1} + G_{n-2}`` with arbitrary integer initial values
``(G_0, G_1)``.  Everything here is exact big-integer arithmetic; no
floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator


@dataclass(frozen=True)
class Seed:
    """Initial pair (g0, g1) of a Gibonacci sequence."""

    g0: int
    g1: int

    @property
    def is_degenerate(self) -> bool:
        return self.g0 == 0 and self.g1 == 0

    @property
    def is_coprime(self) -> bool:
        return math.gcd(self.g0, self.g1) == 1

    def require_nondegenerate(self) -> None:
        if self.is_degenerate:
            raise ValueError("seed (0, 0) is degenerate")

    def require_coprime(self) -> None:
        if not self.is_coprime:
            raise ValueError(f"seed {(self.g0, self.g1)} must have coprime entries")

    def __str__(self) -> str:
        return f"({self.g0},{self.g1})"


FIBONACCI = Seed(0, 1)
LUCAS = Seed(2, 1)


def _fib_pair(n: int) -> tuple[int, int]:
    """Return (F_n, F_{n+1}) for n >= 0 via fast doubling."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """The n-th Fibonacci number, for any integer n.

    Negative indices follow the negafibonacci extension
    F_{-n} = (-1)^{n+1} F_n.
    """
    if n >= 0:
        return _fib_pair(n)[0]
    f = _fib_pair(-n)[0]
    return f if n & 1 else -f


def lucas(n: int) -> int:
    """The n-th Lucas number (L_0 = 2, L_1 = 1), for any integer n."""
    return fib(n + 1) + fib(n - 1)


def gib_term(seed: Seed, n: int) -> int:
    """The n-th term of the Gibonacci sequence with the given seed.

    Valid for any integer n: G_n = G_0 F_{n-1} + G_1 F_n holds over all
    of Z once F is extended to negative indices.
    """
    return seed.g0 * fib(n - 1) + seed.g1 * fib(n)


def window_sum(seed: Seed, n: int, k: int) -> int:
    """Sum of the k consecutive terms G_n + G_{n+1} + ... + G_{n+k-1}.

    Computed by the telescoped form G_{n+k+1} - G_{n+1}.
    """
    if k < 1:
        raise ValueError("window length k must be >= 1")
    if n < 1:
        raise ValueError("window start n must be >= 1")
    return gib_term(seed, n + k + 1) - gib_term(seed, n + 1)


@dataclass(frozen=True)
class SeedInvariants:
    """The two seed parameters controlling GCD-of-sums behavior.

    delta = gcd(G_0 + G_2, G_1 + G_3); always 1 or 5 for coprime seeds.
    d = G_1^2 - G_0 G_1 - G_0^2, the generalized Cassini constant
    (sign preserved).
    """

    delta: int
    d: int

    @property
    def d_is_unit(self) -> bool:
        return self.d in (1, -1)


def seed_invariants(seed: Seed) -> SeedInvariants:
    seed.require_nondegenerate()
    g0, g1 = seed.g0, seed.g1
    g2 = g0 + g1
    g3 = g1 + g2
    delta = math.gcd(g0 + g2, g1 + g3)
    d = g1 * g1 - g0 * g1 - g0 * g0
    return SeedInvariants(delta=delta, d=d)


def coprime_seed_grid(limit: int = 10) -> list[Seed]:
    """All seeds with coprime entries and |g0|, |g1| <= limit.

    (0,1) and (2,1) come first so the Fibonacci and Lucas cases always
    lead any scan over the grid.
    """
    grid = [FIBONACCI, LUCAS]
    for g0 in range(-limit, limit + 1):
        for g1 in range(-limit, limit + 1):
            s = Seed(g0, g1)
            if s in (FIBONACCI, LUCAS):
                continue
            if math.gcd(g0, g1) == 1:
                grid.append(s)
    return grid


#: A fixed 25-seed subgrid used by the identity suites.  Covers both
#: delta classes (1 and 5), both signs of the Cassini constant, and the
#: worked (1,4) example with |d| = 11.
SMALL_SEED_GRID: tuple[Seed, ...] = (
    Seed(0, 1), Seed(2, 1), Seed(1, 4), Seed(1, 1), Seed(1, 2),
    Seed(1, 3), Seed(2, 3), Seed(3, 2), Seed(1, -1), Seed(-1, 2),
    Seed(3, 1), Seed(1, 5), Seed(5, 2), Seed(2, -1), Seed(-2, 1),
    Seed(4, 1), Seed(1, 10), Seed(10, 1), Seed(3, -5), Seed(-3, 7),
    Seed(7, 3), Seed(5, 8), Seed(8, 5), Seed(9, 4), Seed(-5, 3),
)


class _TermTable:
    """Dense lookup tables for F_n, L_n, and G_n over an index range.

    The identity suite evaluates both sides of every identity at up to a
    million grid points; per-point fast doubling would dominate, so each
    sequence is tabulated once over [lo, hi].
    """

    def __init__(self, seed: Seed, lo: int, hi: int):
        # L needs F at lo-1 and hi+1
        self._flo = lo - 1
        f = [fib(lo - 1), fib(lo)]
        for _ in range(lo + 1, hi + 2):
            f.append(f[-1] + f[-2])
        self._f = f
        self._glo = lo
        g = [gib_term(seed, lo), gib_term(seed, lo + 1)]
        for _ in range(lo + 2, hi + 1):
            g.append(g[-1] + g[-2])
        self._g = g

    def F(self, n: int) -> int:
        return self._f[n - self._flo]

    def L(self, n: int) -> int:
        return self._f[n - self._flo + 1] + self._f[n - self._flo - 1]

    def G(self, n: int) -> int:
        return self._g[n - self._glo]


class Identity(Enum):
    """Executable identity families.

    Each member names what the identity relates; both sides are always
    evaluated independently, never rewritten into each other.
    """

    LUCAS_FROM_FIB = "lucas_from_fib"          # L_n = F_{n+1} + F_{n-1}
    FIB_DOUBLE = "fib_double"                  # F_{2n} = F_n L_n
    GIB_ADDITION = "gib_addition"              # G_{m+n} = F_{m-1} G_n + F_m G_{n+1}
    GIB_FROM_SEED = "gib_from_seed"            # G_i = G_0 F_{i-1} + G_1 F_i
    GIB_PARTIAL_SUM = "gib_partial_sum"        # sum_{i=1..n} G_i = G_{n+2} - G_2
    CASSINI = "cassini"                        # G_{n+1} G_{n-1} - G_n^2 = (-1)^n d
    GAP_TWO_SUM = "gap_two_sum"                # G_{j-1} + G_{j+1} = G_0 L_{j-1} + G_1 L_j
    FIB_4J1 = "fib_4j_plus_1"                  # F_{4j+1} - 1 = F_{2j} L_{2j+1}
    FIB_4J3 = "fib_4j_plus_3"                  # F_{4j+3} - 1 = F_{2j+2} L_{2j+1}
    FIB_4J4 = "fib_4j_plus_4"                  # F_{4j+4} - 1 = F_{2j+3} L_{2j+1}
    FIB_SHIFT_FAMILY = "fib_shift_family"      # F_{4j+r+1} - F_{r-1} = F_{2j+r} L_{2j+1}
    GIB_4J1 = "gib_4j_plus_1"                  # G_{4j+1} - G_1 = F_{2j}(G_{2j} + G_{2j+2})
    GIB_4J2 = "gib_4j_plus_2"                  # G_{4j+2} - G_2 = F_{2j}(G_{2j+1} + G_{2j+3})
    GIB_4J3 = "gib_4j_plus_3"                  # G_{4j+3} - G_1 = L_{2j+1} G_{2j+2}
    GIB_4J4 = "gib_4j_plus_4"                  # G_{4j+4} - G_2 = L_{2j+1} G_{2j+3}
    PERTURBED = "perturbed_fixture"            # deliberately false; harness sanity check


@dataclass
class _IdentitySpec:
    params: tuple[str, ...]
    lower: dict[str, int]           # hard lower bound per parameter, if any
    seed_dependent: bool
    extent: Callable[[int, int], tuple[int, int]]   # (min param, max param) -> index span
    sides: Callable[..., tuple[int, int]]           # (table, seed, *params) -> (lhs, rhs)


def _spec_1param(lower: int | None, seed_dependent: bool, extent, sides) -> _IdentitySpec:
    lo = {} if lower is None else {"n": lower}
    return _IdentitySpec(("n",), lo, seed_dependent, extent, sides)


_IDENTITY_SPECS: dict[Identity, _IdentitySpec] = {
    Identity.LUCAS_FROM_FIB: _spec_1param(
        None, False,
        lambda lo, hi: (lo - 1, hi + 1),
        lambda t, s, n: (t.L(n), t.F(n + 1) + t.F(n - 1)),
    ),
    Identity.FIB_DOUBLE: _spec_1param(
        None, False,
        lambda lo, hi: (2 * min(lo, 0) - 1, 2 * max(hi, 0) + 1),
        lambda t, s, n: (t.F(2 * n), t.F(n) * t.L(n)),
    ),
    Identity.GIB_ADDITION: _IdentitySpec(
        ("m", "n"), {"m": 1, "n": 1}, True,
        lambda lo, hi: (lo - 1, 2 * hi + 1),
        lambda t, s, m, n: (t.G(m + n), t.F(m - 1) * t.G(n) + t.F(m) * t.G(n + 1)),
    ),
    Identity.GIB_FROM_SEED: _spec_1param(
        1, True,
        lambda lo, hi: (lo - 1, hi + 1),
        lambda t, s, n: (t.G(n), s.g0 * t.F(n - 1) + s.g1 * t.F(n)),
    ),
    Identity.GIB_PARTIAL_SUM: _spec_1param(
        1, True,
        lambda lo, hi: (1, hi + 2),
        # lhs by direct summation, on purpose: the telescoped rhs is what
        # window_sum uses, so the two sides must stay independent here.
        lambda t, s, n: (sum(t.G(i) for i in range(1, n + 1)), t.G(n + 2) - t.G(2)),
    ),
    Identity.CASSINI: _spec_1param(
        0, True,
        lambda lo, hi: (lo - 1, hi + 1),
        lambda t, s, n: (
            t.G(n + 1) * t.G(n - 1) - t.G(n) ** 2,
            (-1) ** n * (s.g1 * s.g1 - s.g0 * s.g1 - s.g0 * s.g0),
        ),
    ),
    Identity.GAP_TWO_SUM: _spec_1param(
        1, True,
        lambda lo, hi: (lo - 2, hi + 2),
        lambda t, s, n: (t.G(n - 1) + t.G(n + 1), s.g0 * t.L(n - 1) + s.g1 * t.L(n)),
    ),
    Identity.FIB_4J1: _spec_1param(
        0, False,
        lambda lo, hi: (min(2 * lo, 0), 4 * hi + 2),
        lambda t, s, n: (t.F(4 * n + 1) - 1, t.F(2 * n) * t.L(2 * n + 1)),
    ),
    Identity.FIB_4J3: _spec_1param(
        0, False,
        lambda lo, hi: (min(2 * lo, 0), 4 * hi + 4),
        lambda t, s, n: (t.F(4 * n + 3) - 1, t.F(2 * n + 2) * t.L(2 * n + 1)),
    ),
    Identity.FIB_4J4: _spec_1param(
        0, False,
        lambda lo, hi: (min(2 * lo, 0), 4 * hi + 5),
        lambda t, s, n: (t.F(4 * n + 4) - 1, t.F(2 * n + 3) * t.L(2 * n + 1)),
    ),
    Identity.FIB_SHIFT_FAMILY: _IdentitySpec(
        ("r", "j"), {}, False,
        lambda lo, hi: (5 * lo - 3, 5 * hi + 3),
        lambda t, s, r, j: (t.F(4 * j + r + 1) - t.F(r - 1), t.F(2 * j + r) * t.L(2 * j + 1)),
    ),
    Identity.GIB_4J1: _spec_1param(
        0, True,
        lambda lo, hi: (0, 4 * hi + 2),
        lambda t, s, n: (t.G(4 * n + 1) - t.G(1), t.F(2 * n) * (t.G(2 * n) + t.G(2 * n + 2))),
    ),
    Identity.GIB_4J2: _spec_1param(
        0, True,
        lambda lo, hi: (0, 4 * hi + 3),
        lambda t, s, n: (t.G(4 * n + 2) - t.G(2), t.F(2 * n) * (t.G(2 * n + 1) + t.G(2 * n + 3))),
    ),
    Identity.GIB_4J3: _spec_1param(
        0, True,
        lambda lo, hi: (0, 4 * hi + 3),
        lambda t, s, n: (t.G(4 * n + 3) - t.G(1), t.L(2 * n + 1) * t.G(2 * n + 2)),
    ),
    Identity.GIB_4J4: _spec_1param(
        0, True,
        lambda lo, hi: (0, 4 * hi + 4),
        lambda t, s, n: (t.G(4 * n + 4) - t.G(2), t.L(2 * n + 1) * t.G(2 * n + 3)),
    ),
    Identity.PERTURBED: _spec_1param(
        None, False,
        lambda lo, hi: (lo - 1, hi + 1),
        lambda t, s, n: (t.F(n + 1), t.F(n) + t.F(n - 1) + 1),
    ),
}


@dataclass
class IdentityReport:
    """Outcome of checking one identity family over a parameter grid."""

    identity: Identity
    ranges: dict[str, tuple[int, int]]
    seeds: tuple[Seed, ...]
    checked: int
    failures: list[tuple[Seed, tuple[int, ...], int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_identity(
    identity: Identity,
    ranges: dict[str, tuple[int, int]],
    seeds: Iterable[Seed] = SMALL_SEED_GRID,
) -> IdentityReport:
    """Evaluate both sides of an identity exactly over a parameter grid.

    `ranges` maps each parameter name of the identity to an inclusive
    (lo, hi) pair.  Seed-independent identities are checked once; the
    others once per seed.  Every failing point is recorded with both
    sides' values.
    """
    spec = _IDENTITY_SPECS.get(identity)
    if spec is None:
        raise ValueError(f"unknown identity {identity!r}")
    for p in spec.params:
        if p not in ranges:
            raise ValueError(f"identity {identity.value} needs a range for {p!r}")
        lo, hi = ranges[p]
        if lo > hi:
            raise ValueError(f"empty range for {p!r}")
        floor = spec.lower.get(p)
        if floor is not None and lo < floor:
            raise ValueError(f"identity {identity.value} requires {p} >= {floor}")

    seed_tuple = tuple(seeds) if spec.seed_dependent else (FIBONACCI,)
    all_lo = min(ranges[p][0] for p in spec.params)
    all_hi = max(ranges[p][1] for p in spec.params)
    tlo, thi = spec.extent(all_lo, all_hi)

    def points() -> Iterator[tuple[int, ...]]:
        if len(spec.params) == 1:
            lo, hi = ranges[spec.params[0]]
            for a in range(lo, hi + 1):
                yield (a,)
        else:
            (alo, ahi) = ranges[spec.params[0]]
            (blo, bhi) = ranges[spec.params[1]]
            for a in range(alo, ahi + 1):
                for b in range(blo, bhi + 1):
                    yield (a, b)

    report = IdentityReport(identity, dict(ranges), seed_tuple, checked=0)
    for seed in seed_tuple:
        table = _TermTable(seed, tlo, thi)
        for pt in points():
            lhs, rhs = spec.sides(table, seed, *pt)
            report.checked += 1
            if lhs != rhs:
                report.failures.append((seed, pt, lhs, rhs))
    return report


def default_identity_ranges(identity: Identity, lo: int = 0, hi: int = 200) -> dict[str, tuple[int, int]]:
    """The standard suite ranges: [lo, hi] per parameter, lifted to each
    identity's domain floor; the two-sided shift family runs [-10, 10]."""
    spec = _IDENTITY_SPECS[identity]
    if identity is Identity.FIB_SHIFT_FAMILY:
        return {"r": (-10, 10), "j": (-10, 10)}
    out = {}
    for p in spec.params:
        floor = spec.lower.get(p)
        out[p] = (max(lo, floor) if floor is not None else lo, hi)
    return out
