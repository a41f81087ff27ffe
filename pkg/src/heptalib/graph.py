"""Simple undirected graphs and the path/cycle checker used by every certificate.

Vertices are dense integers, 0-based inside the library. Text formats and the
CLI present them 1-based, matching the usual edge-list and DIMACS conventions;
the shift happens only at the I/O boundary.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError


class Graph:
    """An immutable simple undirected graph on vertices 0..n-1.

    Neighbor lists are kept sorted so every iteration in the library is
    deterministic and certificates are reproducible.
    """

    __slots__ = ("n", "_adj", "_adj_sets", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj_sets = tuple(frozenset(s) for s in adj)
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._m = sum(len(s) for s in adj) // 2

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def with_edges(self, extra: Iterable[tuple[int, int]], new_n: int | None = None) -> "Graph":
        """A new graph with the given edges added (and optionally more vertices)."""
        n = self.n if new_n is None else new_n
        return Graph(n, list(self.edges()) + list(extra))

    def is_anticomplete(self, xs: Iterable[int], ys: Iterable[int]) -> bool:
        ys = set(ys)
        return all(not (self._adj_sets[x] & ys) for x in xs)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out: list[list[int]] = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexSeq:
    """An ordered vertex sequence claimed to be a path or a cycle."""

    vertices: tuple[int, ...]
    kind: str  # "path" | "cycle"

    def __post_init__(self):
        if self.kind not in ("path", "cycle"):
            raise InputError(f"unknown sequence kind {self.kind!r}")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        """Number of edges."""
        if self.kind == "path":
            return len(self.vertices) - 1
        return len(self.vertices)

    def interior(self) -> tuple[int, ...]:
        if self.kind != "path":
            raise InputError("interior is defined for paths only")
        return self.vertices[1:-1]


def path_seq(vertices: Sequence[int]) -> VertexSeq:
    return VertexSeq(tuple(vertices), "path")


def cycle_seq(vertices: Sequence[int]) -> VertexSeq:
    return VertexSeq(tuple(vertices), "cycle")


@dataclass(frozen=True)
class Hole:
    """An induced cycle of length at least 4."""

    cycle: VertexSeq

    def __post_init__(self):
        if self.cycle.kind != "cycle":
            raise InputError("a hole must wrap a cycle sequence")
        if len(self.cycle) < 4:
            raise InputError("a hole has length at least 4")

    def __len__(self) -> int:
        return len(self.cycle)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.cycle.vertices


@dataclass(frozen=True)
class SequenceViolation:
    reason: str
    pair: tuple[int, int] | None = None

    def __str__(self) -> str:
        if self.pair is None:
            return self.reason
        return f"{self.reason}: ({self.pair[0]}, {self.pair[1]})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from 1-based edge pairs, deduplicating parallel edges."""
    shifted = []
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"vertex out of range in edge ({u}, {v}), n={n}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        shifted.append((u - 1, v - 1))
    return Graph(n, shifted)


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """The subgraph induced by `subset`, plus the old->new relabeling map.

    New labels follow the sorted order of the subset.
    """
    vs = sorted(set(subset))
    for v in vs:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} not in graph with n={g.n}")
    relabel = {v: i for i, v in enumerate(vs)}
    edges = [
        (relabel[u], relabel[v])
        for u in vs
        for v in g.neighbors(u)
        if u < v and v in relabel
    ]
    return Graph(len(vs), edges), relabel


def degree_profile(g: Graph) -> tuple[int | None, list[int]]:
    """(minimum degree, sorted degree sequence). Min is None on the empty graph."""
    seq = sorted(g.degree(v) for v in g.vertices())
    return (seq[0] if seq else None, seq)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None if the graph is acyclic.

    Per-vertex BFS; the minimum closure over all roots is exact.
    """
    length, _ = girth_with_witness(g)
    return length


def girth_with_witness(g: Graph) -> tuple[int | None, VertexSeq | None]:
    """Girth together with one shortest cycle (always induced)."""
    best: int | None = None
    best_cycle: VertexSeq | None = None
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            u = q.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        # Tree paths meet only at the root exactly when the
                        # closure is tight, which it is at the global minimum.
                        pu = _path_to_root(parent, u)
                        pw = _path_to_root(parent, w)
                        if set(pu) & set(pw) == {root}:
                            best = cand
                            best_cycle = cycle_seq(pu[::-1] + pw[:-1])
    return best, best_cycle


def _path_to_root(parent: dict[int, int], v: int) -> list[int]:
    out = [v]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return out


def is_bipartite(g: Graph) -> tuple[bool, object]:
    """(True, (side0, side1)) or (False, odd cycle VertexSeq).

    The witness cycle is obtained by shrinking the odd closed walk formed by
    two BFS tree paths and one cross edge.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in g.vertices():
        if color[root] != -1:
            continue
        color[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    q.append(w)
                elif color[w] == color[u]:
                    return False, _odd_cycle_from_clash(parent, u, w)
    side0 = sorted(v for v in g.vertices() if color[v] == 0)
    side1 = sorted(v for v in g.vertices() if color[v] == 1)
    return True, (side0, side1)


def _odd_cycle_from_clash(parent: list[int], u: int, w: int) -> VertexSeq:
    pu, pw = [u], [w]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    while parent[pw[-1]] != -1:
        pw.append(parent[pw[-1]])
    common = set(pu) & set(pw)
    # Walk each branch up to the lowest common ancestor.
    iu = next(i for i, v in enumerate(pu) if v in common)
    lca = pu[iu]
    iw = pw.index(lca)
    cyc = pu[: iu + 1] + pw[:iw][::-1]
    return cycle_seq(cyc)


def validate_sequence(
    g: Graph, seq: VertexSeq, require_induced: bool = False
) -> SequenceViolation | None:
    """Check adjacency, distinctness and optionally inducedness of a sequence.

    Returns None when the claim holds, otherwise a violation naming the
    offending pair.
    """
    vs = seq.vertices
    for v in vs:
        if not (0 <= v < g.n):
            return SequenceViolation(f"vertex {v} out of range")
    if len(set(vs)) != len(vs):
        dup = next(v for i, v in enumerate(vs) if v in vs[:i])
        return SequenceViolation("repeated vertex", (dup, dup))
    if seq.kind == "cycle" and len(vs) < 3:
        return SequenceViolation("cycle needs at least 3 vertices")
    if seq.kind == "path" and len(vs) < 1:
        return SequenceViolation("empty path")
    k = len(vs)
    steps = k if seq.kind == "cycle" else k - 1
    for i in range(steps):
        u, w = vs[i], vs[(i + 1) % k]
        if not g.has_edge(u, w):
            return SequenceViolation("missing edge", (u, w))
    if require_induced:
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (
                    seq.kind == "cycle" and i == 0 and j == k - 1
                )
                if consecutive:
                    continue
                if g.has_edge(vs[i], vs[j]):
                    return SequenceViolation("chord", (vs[i], vs[j]))
    return None


# ---------------------------------------------------------------------------
# Text formats. Plain edge list: first line "n m", then one "u v" per line.
# DIMACS .col: "p edge n m" then "e u v" lines. Both 1-based.
# ---------------------------------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Parse either plain edge-list or DIMACS .col format, auto-detected."""
    tokens: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens.append(line.split())
    if not tokens:
        raise InputError("empty graph input")
    first = tokens[0]
    if first[0] == "p":
        if len(first) < 4 or first[1] not in ("edge", "edges", "col"):
            raise InputError(f"bad DIMACS problem line: {' '.join(first)}")
        n = _parse_int(first[2])
        edges = []
        for t in tokens[1:]:
            if t[0] != "e" or len(t) != 3:
                raise InputError(f"bad DIMACS edge line: {' '.join(t)}")
            edges.append((_parse_int(t[1]), _parse_int(t[2])))
        return from_edge_list(n, edges)
    if len(first) != 2:
        raise InputError(f"expected 'n m' header, got: {' '.join(first)}")
    n = _parse_int(first[0])
    m = _parse_int(first[1])
    edges = []
    for t in tokens[1:]:
        if len(t) != 2:
            raise InputError(f"bad edge line: {' '.join(t)}")
        edges.append((_parse_int(t[0]), _parse_int(t[1])))
    if len(edges) != m:
        raise InputError(f"header promises {m} edges, got {len(edges)}")
    return from_edge_list(n, edges)


def _parse_int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError as exc:
        raise InputError(f"not an integer: {tok!r}") from exc


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
