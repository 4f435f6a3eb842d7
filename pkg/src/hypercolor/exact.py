"""Closed-form counts of properly (r, p)-colored edges of the complete k-uniform hypergraph.

All arithmetic is on Python integers (or :class:`fractions.Fraction` for the
x-recurrence), so results are exact at any size.

Terminology used throughout:

* ``m(n, k, r, p)`` -- edges of K_n^k with exactly ``p`` colors under a balanced
  r-coloring (requires ``r | n``).
* ``M(n, k, r, p)`` -- the maximum over all r-colorings of the number of edges
  carrying at least ``p`` colors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from hypercolor.errors import InvalidParameters
from hypercolor.hypergraph import balanced_sizes, complete_profile

KINDS = ("exactly_p", "at_least_p", "at_most_p")


@dataclass(frozen=True)
class ParamSet:
    """The tuple (n, k, r, p) with 1 <= k <= n, r >= 2 and 1 <= p <= min(r, k)."""

    n: int
    k: int
    r: int
    p: int

    def __post_init__(self):
        for name in ("n", "k", "r", "p"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParameters(f"{name} must be an integer, got {value!r}")
        if not 1 <= self.k <= self.n:
            raise InvalidParameters(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.r < 2:
            raise InvalidParameters(f"need r >= 2, got r={self.r}")
        if not 1 <= self.p <= min(self.r, self.k):
            raise InvalidParameters(
                f"need 1 <= p <= min(r, k) = {min(self.r, self.k)}, got p={self.p}"
            )

    @property
    def divisible(self) -> bool:
        return self.n % self.r == 0

    @property
    def cutoff(self) -> int:
        """Smallest c with (n/r)*c >= k. Only defined when r divides n."""
        if not self.divisible:
            raise InvalidParameters(f"cutoff needs r | n, got n={self.n}, r={self.r}")
        return -(-self.k // (self.n // self.r))


@dataclass(frozen=True)
class CountResult:
    params: ParamSet
    value: int
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class BoundsResult:
    """Envelope for M computed from the padded-down (n1) and padded-up (n2) vertex counts."""

    lower: int
    upper: int
    n1: int
    n2: int


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative integers; 0 when k > n."""
    if n < 0 or k < 0:
        raise InvalidParameters(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def exactly_count(sizes: Sequence[int], k: int) -> int:
    """Number of k-subsets of the disjoint union of the classes meeting every class.

    Inclusion-exclusion over the subsets T of classes,
    ``sum_T (-1)^(len(sizes) - |T|) * C(sum(T), k)``.  Subsets are grouped by
    their total size, so the work is polynomial in ``sum(sizes)`` rather than
    exponential in the number of classes.
    """
    sizes = list(sizes)
    if not sizes:
        raise InvalidParameters("exactly_count needs at least one class")
    if any(s < 1 for s in sizes):
        raise InvalidParameters(f"class sizes must be >= 1, got {sizes}")
    if k < 1:
        raise InvalidParameters(f"k must be >= 1, got {k}")
    # signed[s] = sum of (-1)^(#excluded classes) over subsets with total size s
    signed = {0: 1}
    for size in sizes:
        nxt: dict[int, int] = {}
        for total, weight in signed.items():
            nxt[total] = nxt.get(total, 0) - weight
            nxt[total + size] = nxt.get(total + size, 0) + weight
        signed = nxt
    return sum(weight * math.comb(total, k) for total, weight in signed.items())


def _m_balanced(q: int, k: int, r: int, p: int) -> int:
    """m for r classes of size q each, without range checks on q.

    Alternating sum over j of (-1)^j C(p, j) C(q(p-j), k), stopping once
    q(p-j) < k since every later binomial vanishes.
    """
    total = 0
    for j in range(p + 1):
        pool = q * (p - j)
        if pool < k:
            break
        total += (-1) ** j * math.comb(p, j) * math.comb(pool, k)
    return math.comb(r, p) * total


def _require_divisible(ps: ParamSet) -> None:
    if not ps.divisible:
        raise InvalidParameters(
            f"r must divide n (got n={ps.n}, r={ps.r}); use M_general or M_bounds"
        )


def m_exact(n: int, k: int, r: int, p: int) -> CountResult:
    """Edges with exactly p colors under the balanced r-coloring of K_n^k (r | n)."""
    ps = ParamSet(n, k, r, p)
    _require_divisible(ps)
    return CountResult(ps, _m_balanced(n // r, k, r, p), "exactly_p")


def cumulative_below(n: int, k: int, r: int, p: int) -> CountResult:
    """Edges with at most p-1 colors under the balanced coloring; 2 <= p <= min(r, k) + 1.

    The result is labelled ``at_most_p`` with ``params.p == p - 1``.
    """
    if not 2 <= p <= min(r, k) + 1:
        raise InvalidParameters(f"need 2 <= p <= min(r, k) + 1, got p={p}")
    ps = ParamSet(n, k, r, p - 1)
    _require_divisible(ps)
    value = sum(_m_balanced(n // r, k, r, i) for i in range(1, p))
    return CountResult(ps, value, "at_most_p")


def _check_m_params(n: int, k: int, r: int, p: int) -> ParamSet:
    ps = ParamSet(n, k, r, p)
    if p < 2:
        raise InvalidParameters(f"need p >= 2 for maximum counts, got p={p}")
    return ps


def M_exact(n: int, k: int, r: int, p: int) -> CountResult:
    """M(n, k, r, p) = C(n, k) - sum_{i<p} m(n, k, r, i), for r | n."""
    ps = _check_m_params(n, k, r, p)
    _require_divisible(ps)
    below = sum(_m_balanced(n // r, k, r, i) for i in range(1, p))
    return CountResult(ps, math.comb(n, k) - below, "at_least_p")


def M_general(n: int, k: int, r: int, p: int) -> CountResult:
    """M for any n, evaluated on the balanced class sizes through the implicit profile."""
    ps = _check_m_params(n, k, r, p)
    profile = complete_profile(balanced_sizes(n, r), k)
    return CountResult(ps, profile.at_least(p), "at_least_p")


def M_bounds(n: int, k: int, r: int, p: int) -> BoundsResult:
    """Upper bound from n1 = floor(n/r)*r vertices, lower bound from n2 = ceil(n/r)*r."""
    _check_m_params(n, k, r, p)
    down, up = n // r, -(-n // r)
    total = math.comb(n, k)
    upper = total - sum(_m_balanced(down, k, r, i) for i in range(1, p))
    lower = total - sum(_m_balanced(up, k, r, i) for i in range(1, p))
    return BoundsResult(lower=lower, upper=upper, n1=down * r, n2=up * r)


def x_recurrence(i: int, j: int, n: int, k: int, r: int) -> Fraction:
    """Literal recurrence x(i, j) = C(r, i) C((n/r) i, k) - (r-j)/(i-j+1) * x(i, j-1).

    Base case x(i, 0) = 0.  This quantity is exploratory: it does not in
    general equal the at-most-j count (see :func:`x_consistency_report`).
    """
    if n < 1 or k < 1:
        raise InvalidParameters(f"need n, k >= 1, got n={n}, k={k}")
    if r < 2 or n % r:
        raise InvalidParameters(f"need r >= 2 dividing n, got n={n}, r={r}")
    if not 1 <= j <= i < r:
        raise InvalidParameters(f"need 1 <= j <= i < r, got i={i}, j={j}, r={r}")
    head = math.comb(r, i) * math.comb((n // r) * i, k)
    x = Fraction(0)
    for step in range(1, j + 1):
        x = head - Fraction(r - step, i - step + 1) * x
    return x


def x_consistency_report(n: int, k: int, r: int) -> list[dict]:
    """Compare x(p-1, p-1) with cumulative_below(n, k, r, p) for each feasible p.

    Rows carry both values and an ``agrees`` flag; disagreement is expected for
    some inputs and is reported rather than raised.
    """
    rows = []
    for p in range(2, min(r, k + 1) + 1):
        x = x_recurrence(p - 1, p - 1, n, k, r)
        below = cumulative_below(n, k, r, p).value
        rows.append({"n": n, "k": k, "r": r, "p": p, "x": x,
                     "cumulative_below": below, "agrees": x == below})
    return rows


def corollary_product(n: int, k: int) -> CountResult:
    """Rainbow edge count |A_1|...|A_k| of the balanced k-coloring (r = p = k)."""
    if k < 2:
        raise InvalidParameters(f"need k >= 2, got k={k}")
    ps = ParamSet(n, k, k, k)
    return CountResult(ps, math.prod(balanced_sizes(n, k)), "at_least_p")


def winning_threshold(n: int, k: int, r: int, p: int) -> int:
    """Smallest edge count the player can announce and be sure to win: M + 1."""
    return M_general(n, k, r, p).value + 1
