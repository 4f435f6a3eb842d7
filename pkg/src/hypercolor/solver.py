"""Single-vertex recolor hill climbing for the properly-colored edge count.

Each step applies the best strictly improving recoloring of one vertex.  On
complete hypergraphs moving a vertex from a class at least two larger than
another never increases the number of poorly colored edges, which is what
drives the search toward balanced colorings.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from hypercolor.errors import InvalidParameters
from hypercolor.hypergraph import Coloring, Hypergraph

STRATEGY = "best-improvement"


@dataclass(frozen=True)
class Move:
    vertex: int
    new_color: int
    delta: int


@dataclass(frozen=True)
class SolveConfig:
    seed: int = 0
    restarts: int = 1
    max_moves: Optional[int] = None  # None means n * r * 10
    strategy: str = STRATEGY

    def __post_init__(self):
        if self.restarts < 1:
            raise InvalidParameters(f"restarts must be >= 1, got {self.restarts}")
        if self.max_moves is not None and self.max_moves < 1:
            raise InvalidParameters(f"max_moves must be >= 1, got {self.max_moves}")
        if self.strategy != STRATEGY:
            raise InvalidParameters(f"only {STRATEGY!r} is supported, got {self.strategy!r}")


@dataclass(frozen=True)
class SolveResult:
    best_value: int
    best_coloring: Coloring
    moves_taken: int
    restarts_used: int
    converged: bool
    trace: tuple[int, ...] = ()


class _ClimbState:
    """Per-edge color multiplicities for the current coloring, updated move by move."""

    def __init__(self, H: Hypergraph, X: Coloring):
        if len(X.assignment) != H.n:
            raise InvalidParameters(
                f"coloring has {len(X.assignment)} vertices, hypergraph has {H.n}"
            )
        self.hypergraph = H
        self.incident = H.incidence
        self.r = X.r
        self.assignment = list(X.assignment)
        self.counts = []
        for edge in H.edges:
            row = [0] * X.r
            for v in edge:
                row[self.assignment[v]] += 1
            self.counts.append(row)
        self.distinct = [sum(1 for c in row if c) for row in self.counts]

    def delta(self, vertex: int, new_color: int, p: int) -> int:
        old = self.assignment[vertex]
        if new_color == old:
            return 0
        change = 0
        for idx in self.incident[vertex]:
            row = self.counts[idx]
            before = self.distinct[idx]
            after = before - (row[old] == 1) + (row[new_color] == 0)
            change += (after >= p) - (before >= p)
        return change

    def apply(self, vertex: int, new_color: int) -> None:
        old = self.assignment[vertex]
        if new_color == old:
            return
        for idx in self.incident[vertex]:
            row = self.counts[idx]
            row[old] -= 1
            row[new_color] += 1
            self.distinct[idx] += (row[new_color] == 1) - (row[old] == 0)
        self.assignment[vertex] = new_color

    def value(self, p: int) -> int:
        return sum(1 for d in self.distinct if d >= p)

    def coloring(self) -> Coloring:
        return Coloring(self.r, tuple(self.assignment))

    def best_move(self, p: int) -> Optional[Move]:
        best = None
        for v in range(self.hypergraph.n):
            for c in range(self.r):
                if c == self.assignment[v]:
                    continue
                d = self.delta(v, c, p)
                if d > 0 and (best is None or d > best.delta):
                    best = Move(v, c, d)
        return best


def _check(H: Hypergraph, r: int, p: int) -> None:
    if r < 2:
        raise InvalidParameters(f"need r >= 2, got r={r}")
    if not 1 <= p <= min(H.k, r):
        raise InvalidParameters(f"need 1 <= p <= min(k, r) = {min(H.k, r)}, got p={p}")


def incremental_delta(H: Hypergraph, X: Coloring, vertex: int, new_color: int,
                      p: int) -> int:
    """Objective change from recoloring ``vertex``, rescanning only its incident edges.

    Uses the vertex -> edges index cached on ``H``.
    """
    if len(X.assignment) != H.n:
        raise InvalidParameters(f"coloring has {len(X.assignment)} vertices, hypergraph has {H.n}")
    a = X.assignment
    old = a[vertex]
    change = 0
    for idx in H.incidence[vertex]:
        rest = {a[u] for u in H.edges[idx] if u != vertex}
        change += (len(rest | {new_color}) >= p) - (len(rest | {old}) >= p)
    return change


def improve_step(H: Hypergraph, X: Coloring, p: int) -> Optional[Move]:
    """Best strictly improving single-vertex recolor; ties go to lowest vertex, then color."""
    _check(H, X.r, p)
    return _ClimbState(H, X).best_move(p)


def restart_rng(seed: int, restart: int) -> random.Random:
    """PRNG for one restart: MT19937 seeded with the string ``"restart:{seed}:{restart}"``."""
    return random.Random(f"restart:{seed}:{restart}")


def _climb(H: Hypergraph, r: int, p: int, seed: int, restart: int, max_moves: int):
    rng = restart_rng(seed, restart)
    start = Coloring(r, tuple(rng.randrange(r) for _ in range(H.n)))
    index = _ClimbState(H, start)
    trace = [index.value(p)]
    moves = 0
    converged = False
    while moves < max_moves:
        move = index.best_move(p)
        if move is None:
            converged = True
            break
        index.apply(move.vertex, move.new_color)
        trace.append(trace[-1] + move.delta)
        moves += 1
    else:
        converged = index.best_move(p) is None
    return trace[-1], index.coloring(), moves, converged, tuple(trace)


def local_search(H: Hypergraph, r: int, p: int, config: SolveConfig = SolveConfig(),
                 workers: int = 1) -> SolveResult:
    """Hill climb from ``config.restarts`` seeded random colorings and keep the best.

    Ties between restarts go to the lowest restart index, so the result does
    not depend on ``workers``.  ``moves_taken``, ``converged`` and ``trace``
    describe the winning restart.
    """
    _check(H, r, p)
    max_moves = config.max_moves if config.max_moves is not None else max(1, H.n * r * 10)
    jobs = [(H, r, p, config.seed, i, max_moves) for i in range(config.restarts)]
    if workers > 1 and config.restarts > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_climb, *zip(*jobs)))
    else:
        runs = [_climb(*job) for job in jobs]
    value, coloring, moves, converged, trace = max(runs, key=lambda run: run[0])
    return SolveResult(value, coloring, moves, config.restarts, converged, trace)
