"""k-uniform hypergraphs, r-colorings and per-edge color statistics.

Vertices are the integers ``0 .. n-1``.  Edges are stored as sorted tuples and
the edge list is kept in lexicographic order.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from hypercolor.errors import FeasibilityError, InvalidHypergraph, InvalidParameters

EXPLICIT_EDGE_CAP = 10**6


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the edges containing it."""
        incident: list[list[int]] = [[] for _ in range(self.n)]
        for idx, edge in enumerate(self.edges):
            for v in edge:
                incident[v].append(idx)
        return tuple(tuple(row) for row in incident)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Coloring:
    r: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if self.r < 1:
            raise InvalidParameters(f"need r >= 1, got r={self.r}")
        for v, c in enumerate(self.assignment):
            if not 0 <= c < self.r:
                raise InvalidParameters(f"vertex {v} has color {c} outside [0, {self.r})")

    def __len__(self) -> int:
        return len(self.assignment)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.r)]
        for v, c in enumerate(self.assignment):
            buckets[c].append(v)
        return tuple(tuple(b) for b in buckets)

    @property
    def sizes(self) -> tuple[int, ...]:
        counts = Counter(self.assignment)
        return tuple(counts.get(c, 0) for c in range(self.r))

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "Coloring":
        """Coloring with class j on a contiguous ascending vertex range of length sizes[j]."""
        assignment = [c for c, s in enumerate(sizes) for _ in range(s)]
        return cls(len(sizes), tuple(assignment))


@dataclass(frozen=True)
class ColorProfile:
    """Histogram t -> number of edges with exactly t distinct colors (zero counts omitted)."""

    histogram: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "histogram", {t: c for t, c in sorted(self.histogram.items()) if c}
        )

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    def at_least(self, p: int) -> int:
        return sum(c for t, c in self.histogram.items() if t >= p)

    def at_most(self, t: int) -> int:
        return sum(c for s, c in self.histogram.items() if s <= t)


def build_hypergraph(n: int, k: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and normalize a raw edge list into a :class:`Hypergraph`."""
    if not isinstance(n, int) or n < 0:
        raise InvalidHypergraph(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise InvalidHypergraph(f"k must be a positive integer, got {k!r}")
    normalized = []
    for idx, raw in enumerate(edges):
        edge = list(raw)
        if len(edge) != k:
            raise InvalidHypergraph(f"edges[{idx}] has {len(edge)} vertices, expected k={k}")
        for v in edge:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InvalidHypergraph(f"edges[{idx}] has vertex {v!r} outside [0, {n})")
        if len(set(edge)) != k:
            raise InvalidHypergraph(f"edges[{idx}] repeats a vertex: {edge}")
        normalized.append(tuple(sorted(edge)))
    ordered = sorted(normalized)
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise InvalidHypergraph(f"duplicate edge {list(a)}")
    return Hypergraph(n, k, tuple(ordered))


def complete(n: int, k: int, cap: int = EXPLICIT_EDGE_CAP) -> Hypergraph:
    """The complete k-uniform hypergraph K_n^k, edges in lexicographic order."""
    if not 1 <= k <= n:
        raise InvalidParameters(f"need 1 <= k <= n, got k={k}, n={n}")
    if comb(n, k) > cap:
        raise FeasibilityError(
            f"K_{n}^{k} has {comb(n, k)} edges, over the cap of {cap}; use complete_profile"
        )
    return Hypergraph(n, k, tuple(combinations(range(n), k)))


def balanced_sizes(n: int, r: int) -> tuple[int, ...]:
    """Class sizes of the canonical balanced split: the first n mod r classes get one extra."""
    if r < 1 or n < 0:
        raise InvalidParameters(f"need r >= 1 and n >= 0, got n={n}, r={r}")
    q, extra = divmod(n, r)
    return tuple(q + 1 if j < extra else q for j in range(r))


def balanced_coloring(n: int, r: int) -> Coloring:
    if r > n:
        raise InvalidParameters(f"balanced coloring needs r <= n, got r={r}, n={n}")
    return Coloring.from_sizes(balanced_sizes(n, r))


def _check_pair(H: Hypergraph, X: Coloring) -> None:
    if len(X.assignment) != H.n:
        raise InvalidParameters(
            f"coloring has {len(X.assignment)} vertices, hypergraph has {H.n}"
        )


def color_histogram(H: Hypergraph, X: Coloring) -> ColorProfile:
    _check_pair(H, X)
    a = X.assignment
    counts = Counter(len({a[v] for v in edge}) for edge in H.edges)
    return ColorProfile(dict(counts))


def _check_p(H: Hypergraph, X: Coloring, p: int) -> None:
    if not 1 <= p <= min(H.k, X.r):
        raise InvalidParameters(f"need 1 <= p <= min(k, r) = {min(H.k, X.r)}, got p={p}")


def properly_colored_count(H: Hypergraph, X: Coloring, p: int) -> int:
    """Number of edges carrying at least p distinct colors under X."""
    _check_p(H, X, p)
    return color_histogram(H, X).at_least(p)


def is_strong_coloring(H: Hypergraph, X: Coloring, p: int) -> bool:
    return properly_colored_count(H, X, p) == len(H.edges)


@lru_cache(maxsize=65536)
def _profile_sorted(sizes: tuple[int, ...], k: int) -> tuple[tuple[int, int], ...]:
    # ways[t][j]: ways to pick j vertices touching exactly t of the classes seen so far
    ways = [[0] * (k + 1) for _ in range(len(sizes) + 1)]
    ways[0][0] = 1
    used = 0
    for s in sizes:
        if s == 0:
            continue
        row = [comb(s, a) for a in range(min(s, k) + 1)]
        for t in range(used, -1, -1):
            for j in range(k, -1, -1):
                w = ways[t][j]
                if not w:
                    continue
                for a in range(1, min(len(row) - 1, k - j) + 1):
                    ways[t + 1][j + a] += w * row[a]
        used += 1
    return tuple((t, ways[t][k]) for t in range(1, used + 1) if ways[t][k])


def complete_profile(sizes: Sequence[int], k: int) -> ColorProfile:
    """Color profile of K_n^k under a coloring with the given class sizes, without listing edges.

    Computed as the coefficient of x^k y^t in prod_j (1 + y((1 + x)^s_j - 1)).
    """
    sizes = tuple(sizes)
    if not sizes:
        raise InvalidParameters("complete_profile needs at least one class")
    if any(s < 0 for s in sizes):
        raise InvalidParameters(f"class sizes must be >= 0, got {list(sizes)}")
    if k < 1:
        raise InvalidParameters(f"k must be >= 1, got {k}")
    return ColorProfile(dict(_profile_sorted(tuple(sorted(sizes)), k)))


def random_hypergraph(n: int, k: int, m: int, seed: int) -> Hypergraph:
    """m distinct k-edges drawn uniformly by rejection, reproducible for a fixed seed.

    Uses :class:`random.Random` (MT19937) seeded with the integer ``seed``; each
    draw is ``rng.sample(range(n), k)`` and repeats are rejected.
    """
    if not 1 <= k <= n:
        raise InvalidParameters(f"need 1 <= k <= n, got k={k}, n={n}")
    if not 0 <= m <= comb(n, k):
        raise InvalidParameters(f"need 0 <= m <= C({n},{k}) = {comb(n, k)}, got m={m}")
    rng = random.Random(seed)
    chosen: set[tuple[int, ...]] = set()
    while len(chosen) < m:
        chosen.add(tuple(sorted(rng.sample(range(n), k))))
    return Hypergraph(n, k, tuple(sorted(chosen)))


def hypergraph_from_dict(doc) -> Hypergraph:
    if not isinstance(doc, dict):
        raise InvalidHypergraph("top-level JSON value must be an object")
    for key in ("n", "k", "edges"):
        if key not in doc:
            raise InvalidHypergraph(f"missing field {key!r}")
    if not isinstance(doc["edges"], list):
        raise InvalidHypergraph("field 'edges' must be a list")
    for idx, edge in enumerate(doc["edges"]):
        if not isinstance(edge, list):
            raise InvalidHypergraph(f"edges[{idx}] must be a list of integers")
    return build_hypergraph(doc["n"], doc["k"], doc["edges"])


def loads_hypergraph(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidHypergraph(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return hypergraph_from_dict(doc)


def dumps_hypergraph(H: Hypergraph) -> str:
    return json.dumps(H.to_dict(), separators=(",", ":")) + "\n"


def load_hypergraph(path: str | Path) -> Hypergraph:
    return loads_hypergraph(Path(path).read_text())


def dump_hypergraph(H: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(dumps_hypergraph(H))
