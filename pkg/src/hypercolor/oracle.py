"""Brute-force ground truth for the closed-form counts.

Nothing here calls into :mod:`hypercolor.exact`; the full-enumeration paths
also avoid :func:`hypercolor.hypergraph.complete_profile`, so they stay
independent of the formulas they check.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterator, Optional, Sequence

from hypercolor.errors import FeasibilityError, InvalidParameters
from hypercolor.hypergraph import (
    Coloring,
    Hypergraph,
    balanced_coloring,
    balanced_sizes,
    complete,
    complete_profile,
)

COLORING_CAP = 10**8
COMPOSITION_CAP = 10**7

FULL = "full_enumeration"
REDUCED = "composition_reduced"


@dataclass(frozen=True)
class OracleReport:
    best_value: int
    witness: Coloring
    search_space_size: int
    mode: str
    sizes: Optional[tuple[int, ...]] = None


def _check_coloring_space(n: int, r: int, cap: int) -> int:
    if n < 0 or r < 1:
        raise InvalidParameters(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    space = r**n
    if space > cap:
        raise FeasibilityError(f"{r}^{n} = {space} colorings exceeds the cap of {cap}")
    return space


def enumerate_colorings(n: int, r: int, cap: int = COLORING_CAP) -> Iterator[Coloring]:
    """All r^n colorings, in lexicographic order of the assignment."""
    _check_coloring_space(n, r, cap)
    return (Coloring(r, a) for a in product(range(r), repeat=n))


def _chunk_best(edges, n, r, p, prefix):
    """Best (value, assignment) over assignments beginning with prefix; lex-least on ties."""
    best_value, best = -1, None
    tail = n - len(prefix)
    for rest in product(range(r), repeat=tail):
        a = prefix + rest
        value = 0
        for e in edges:
            if len({a[v] for v in e}) >= p:
                value += 1
        if value > best_value:
            best_value, best = value, a
    return best_value, best


def brute_max(H: Hypergraph, r: int, p: int, cap: int = COLORING_CAP,
              workers: int = 1) -> OracleReport:
    """Maximum, over every r-coloring, of the number of edges with >= p colors.

    With ``workers > 1`` the space is split on the first vertex's color; the
    merge keeps the lexicographically least maximizer, so the report does not
    depend on the worker count.
    """
    if not 1 <= p <= min(H.k, r):
        raise InvalidParameters(f"need 1 <= p <= min(k, r), got p={p}")
    space = _check_coloring_space(H.n, r, cap)
    if H.n == 0:
        return OracleReport(0, Coloring(r, ()), space, FULL)
    prefixes = [(c,) for c in range(r)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_best, *zip(*[(H.edges, H.n, r, p, pre) for pre in prefixes])))
    else:
        parts = [_chunk_best(H.edges, H.n, r, p, pre) for pre in prefixes]
    # prefixes are in lexicographic order, so the first strict max is the lex-least witness
    best_value, best = max(parts, key=lambda part: part[0])
    return OracleReport(best_value, Coloring(r, best), space, FULL)


def compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """Ordered r-tuples of nonnegative integers summing to n, in lexicographic order."""
    if r == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, r - 1):
            yield (first,) + rest


def brute_max_complete(n: int, k: int, r: int, p: int,
                       cap: int = COMPOSITION_CAP) -> OracleReport:
    """Maximum of the >= p count on K_n^k over all class-size compositions of n into r parts."""
    if not 1 <= k <= n or r < 1 or not 1 <= p <= min(k, r):
        raise InvalidParameters(f"invalid (n, k, r, p) = ({n}, {k}, {r}, {p})")
    space = comb(n + r - 1, r - 1)
    if space > cap:
        raise FeasibilityError(f"{space} compositions exceeds the cap of {cap}")
    best_value, best = -1, None
    for sizes in compositions(n, r):
        value = complete_profile(sizes, k).at_least(p)
        if value > best_value:
            best_value, best = value, sizes
    balanced = balanced_sizes(n, r)
    if complete_profile(balanced, k).at_least(p) == best_value:
        best = balanced
    return OracleReport(best_value, Coloring.from_sizes(best), space, REDUCED, sizes=best)


def brute_m(n: int, k: int, r: int, p: int) -> int:
    """Edges of K_n^k with exactly p colors under the balanced coloring, by listing edges."""
    if r < 1 or n % r:
        raise InvalidParameters(f"need r | n, got n={n}, r={r}")
    a = balanced_coloring(n, r).assignment
    return sum(1 for e in complete(n, k).edges if len({a[v] for v in e}) == p)


def brute_min_exactly(n: int, k: int, r: int, p: int, cap: int = COLORING_CAP) -> int:
    """y(n, k, r, p): minimum over all r-colorings of the exactly-p edge count of K_n^k.

    0 when n < k, since there are no edges.
    """
    if k < 1 or r < 1 or p < 1:
        raise InvalidParameters(f"need k, r, p >= 1, got k={k}, r={r}, p={p}")
    if n < k:
        return 0
    _check_coloring_space(n, r, cap)
    edges = list(combinations(range(n), k))
    best = None
    for a in product(range(r), repeat=n):
        count = sum(1 for e in edges if len({a[v] for v in e}) == p)
        if best is None or count < best:
            best = count
            if best == 0:
                break
    return best


def gain_loss(sizes: Sequence[int], k: int, t: int, from_class: int,
              to_class: int) -> tuple[int, int]:
    """(g, l) for recoloring one vertex of ``from_class`` into ``to_class`` on K_n^k.

    g counts edges through the moved vertex going from more than t colors to at
    most t; l counts those going from at most t to more than t.  Both are found
    by listing the (k-1)-sets of other vertices.
    """
    sizes = list(sizes)
    r = len(sizes)
    if not (0 <= from_class < r and 0 <= to_class < r) or from_class == to_class:
        raise InvalidParameters(f"bad class pair ({from_class}, {to_class}) for {r} classes")
    if sizes[from_class] < 1:
        raise InvalidParameters(f"class {from_class} is empty")
    if any(s < 0 for s in sizes) or k < 1:
        raise InvalidParameters(f"invalid sizes {sizes} or k={k}")
    if not 1 <= t <= min(k, r):
        raise InvalidParameters(f"need 1 <= t <= min(k, r) = {min(k, r)}, got t={t}")
    colors = [c for c, s in enumerate(sizes) for _ in range(s)]
    moved = colors.index(from_class)
    others = [colors[v] for v in range(len(colors)) if v != moved]
    g = l = 0
    for rest in combinations(others, k - 1):
        seen = set(rest)
        before = len(seen | {from_class})
        after = len(seen | {to_class})
        if before > t >= after:
            g += 1
        elif before <= t < after:
            l += 1
    return g, l
