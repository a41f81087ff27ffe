"""Deterministic test-corpus construction.

Random member graphs are grown edge by edge from a seeded splitmix64 stream;
every proposal is a uniformly random non-edge and is kept only if the graph
stays in the family. Exhaustive small members come from nonisomorphic
spanning trees (networkx supplies those) augmented with extra edges under
member-monotone pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .budget import Budget, ensure_budget
from .catalog import are_isomorphic
from .errors import CapExceededError, InputError
from .graph import Graph
from .recognizer import membership

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator; tiny, fast, and stable across platforms."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1DEADB42) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection of the biased tail."""
        if bound <= 0:
            raise InputError("bound must be positive")
        limit = _MASK - (_MASK + 1) % bound
        while True:
            r = self.next_u64()
            if r <= limit:
                return r % bound


@dataclass(frozen=True)
class GenSpec:
    n: int
    target_m: int
    seed: int
    ell: int = 3

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be at least 1")
        if self.target_m < 0:
            raise InputError("target_m must be nonnegative")


def _creates_short_cycle(adj: list[set[int]], u: int, v: int, ell: int) -> bool:
    """Would adding uv close a cycle of length < 2*ell+1? BFS from u up to
    depth 2*ell-1 in the current graph."""
    max_path = 2 * ell - 1  # path u..v of this length closes a cycle of 2*ell
    dist = {u: 0}
    frontier = [u]
    d = 0
    while frontier and d < max_path:
        nxt = []
        for x in frontier:
            for w in adj[x]:
                if w not in dist:
                    dist[w] = d + 1
                    if w == v:
                        return True
                    nxt.append(w)
        frontier = nxt
        d += 1
    return v in dist


def _creates_big_odd_hole(
    adj: list[set[int]], adj_sets: list[set[int]], u: int, v: int, ell: int
) -> bool:
    """Would adding uv create an induced odd cycle of length >= 2*ell+3?

    Any new induced cycle must use the new edge, so it suffices to scan the
    induced u-v paths of the old graph (the new edge would chord any path it
    connects internally, so paths avoiding adjacency to both ends are enough).
    """
    threshold = 2 * ell + 3
    path = [u]
    on_path = {u}

    def dfs() -> bool:
        last = path[-1]
        for w in sorted(adj[last]):
            if w == v:
                k = len(path) + 1  # cycle length once uv closes it
                if k >= threshold and k % 2 == 1 and not any(
                    v in adj_sets[x] for x in path[1:-1]
                ):
                    return True
                continue
            if w in on_path or any(w in adj_sets[x] for x in path[:-1]):
                continue
            path.append(w)
            on_path.add(w)
            if dfs():
                return True
            on_path.discard(w)
            path.pop()
        return False

    return dfs()


def random_member(spec: GenSpec) -> Graph:
    """A seeded random member: propose uniform non-edges, keep those that
    preserve membership, stop at target_m edges or after 50 * target_m
    consecutive rejections. The result is re-audited before returning.
    """
    rng = SplitMix64(spec.seed)
    n = spec.n
    adj: list[set[int]] = [set() for _ in range(n)]
    adj_sets = adj  # same structure serves both roles
    edges: list[tuple[int, int]] = []
    rejections = 0
    max_rejections = 50 * spec.target_m if spec.target_m else 0
    while len(edges) < spec.target_m:
        non_edges = [
            (a, b)
            for a, b in combinations(range(n), 2)
            if b not in adj[a]
        ]
        if not non_edges:
            break
        u, v = non_edges[rng.below(len(non_edges))]
        if _creates_short_cycle(adj, u, v, spec.ell) or _creates_big_odd_hole(
            adj, adj_sets, u, v, spec.ell
        ):
            rejections += 1
            if rejections >= max_rejections:
                break
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
        rejections = 0
    g = Graph(n, edges)
    verdict = membership(g, spec.ell)
    if not verdict.member:
        raise AssertionError("generator audit failed: produced a non-member")
    return g


def attach_path(g: Graph, s: int, t: int, length: int) -> Graph:
    """g plus a fresh path of `length` edges between s and t.

    The length-1 new vertices take ids g.n .. g.n+length-2.
    """
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise InputError(f"endpoints ({s}, {t}) out of range")
    if s == t:
        raise InputError("endpoints must differ")
    if length < 2:
        raise InputError("path length must be at least 2")
    new = list(range(g.n, g.n + length - 1))
    chain = [s, *new, t]
    extra = list(zip(chain, chain[1:]))
    return g.with_edges(extra, new_n=g.n + length - 1)


def enumerate_members(
    n: int, ell: int = 3, cap: int = 12, budget: Budget | int | None = None
) -> list[Graph]:
    """Every connected member on n vertices, exactly once up to isomorphism.

    Seeds are the nonisomorphic trees on n vertices; extra edges are added in
    increasing order with pruning (at this scale a supergraph of a non-member
    is never a member: a new edge cannot repair a short cycle, and chording
    away a big odd hole of length <= 12 always creates a short cycle).
    """
    if n > cap:
        raise CapExceededError(f"exhaustive enumeration capped at n={cap}, got {n}")
    if n < 1:
        raise InputError("n must be at least 1")
    b = ensure_budget(budget, "member enumeration")
    if n == 1:
        return [Graph(1, [])]
    all_pairs = list(combinations(range(n), 2))
    found: list[Graph] = []

    def grow(g: Graph, last_index: int) -> None:
        found.append(g)
        for idx in range(last_index + 1, len(all_pairs)):
            u, v = all_pairs[idx]
            if g.has_edge(u, v):
                continue
            b.spend()
            cand = g.with_edges([(u, v)])
            if membership(cand, ell, b).member:
                grow(cand, idx)

    for tree in nx.nonisomorphic_trees(n):
        edges = [tuple(sorted(e)) for e in tree.edges()]
        g = Graph(n, edges)
        grow(g, -1)

    return _dedup_isomorphs(found, b)


def _dedup_isomorphs(graphs: list[Graph], budget: Budget) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    out = []
    for g in graphs:
        key = (g.m, tuple(sorted(g.degree(v) for v in g.vertices())))
        bucket = buckets.setdefault(key, [])
        if any(are_isomorphic(g, h, budget) is not None for h in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out
