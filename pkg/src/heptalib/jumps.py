"""Jump analysis relative to a distinguished 7-hole.

Fix an induced 7-cycle C = c1..c7 in a graph G. An induced path between two
C-vertices at cyclic distance 2 (resp. 3) whose interior avoids C "jumps
across" the one vertex (resp. the edge) between its ends. A jump is *local*
when the C-vertices outside its own segment have no neighbors in its
interior, and *short* when it is local and has the minimum possible length
in this graph family: 5 for a v-jump, 4 for an e-jump. Equivalently, a short
jump's interior sees nothing of C beyond the jump's own ends.

Index arithmetic on c1..c7 is modulo 7 with positions written 1..7.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .budget import Budget, ensure_budget
from .catalog import catalog_graph, find_induced_copy, induced_copies_in_subset
from .errors import InputError, SearchExhaustedError
from .graph import (
    Graph,
    Hole,
    VertexSeq,
    cycle_seq,
    girth_with_witness,
    induced_subgraph,
    path_seq,
    validate_sequence,
)
from .recognizer import enumerate_holes, find_big_odd_hole


def _canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate to the smallest vertex and keep the lexicographically lesser
    of the two directions."""
    vs = tuple(vertices)
    k = len(vs)
    i = vs.index(min(vs))
    fwd = vs[i:] + vs[:i]
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, rev)


@dataclass(frozen=True)
class SevenHoleContext:
    """A graph together with a distinguished induced 7-cycle.

    The stored orientation is canonical, so two contexts built from the same
    hole (in either direction, any rotation) compare equal and all derived
    operations agree.
    """

    g: Graph
    cycle: tuple[int, ...]

    def __init__(self, g: Graph, cycle: Sequence[int]):
        canon = _canonical_cycle(cycle)
        if len(canon) != 7:
            raise InputError(f"need a 7-cycle, got {len(canon)} vertices")
        bad = validate_sequence(g, cycle_seq(canon), require_induced=True)
        if bad is not None:
            raise InputError(f"not an induced 7-cycle: {bad}")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "cycle", canon)

    def vertex_at(self, pos: int) -> int:
        """Cycle vertex at position pos, positions taken modulo 7 in 1..7."""
        return self.cycle[(pos - 1) % 7]

    def position(self, v: int) -> int:
        try:
            return self.cycle.index(v) + 1
        except ValueError:
            raise InputError(f"vertex {v} is not on the 7-hole") from None

    def cyclic_distance(self, u: int, v: int) -> int:
        d = abs(self.position(u) - self.position(v)) % 7
        return min(d, 7 - d)

    def cycle_set(self) -> frozenset[int]:
        return frozenset(self.cycle)


@dataclass(frozen=True)
class Jump:
    """An induced path between C-vertices at cyclic distance 2 or 3.

    `ends` is ordered so the forward arc of C from ends[0] to ends[1] covers
    the across vertices; `path` runs from ends[0] to ends[1].
    """

    ends: tuple[int, int]
    kind: str  # "v" | "e"
    across: tuple[int, ...]
    path: VertexSeq
    local: bool
    short: bool

    @property
    def length(self) -> int:
        return self.path.length

    def interior(self) -> tuple[int, ...]:
        return self.path.interior()

    def to_json(self) -> dict:
        return {
            "ends": [v + 1 for v in self.ends],
            "kind": self.kind,
            "across": [v + 1 for v in self.across],
            "path": [v + 1 for v in self.path.vertices],
            "local": self.local,
            "short": self.short,
        }


class PairOutcome:
    """Base for the possible results of analyzing a pair of jumps."""


@dataclass(frozen=True)
class ShortJump(PairOutcome):
    jump: Jump


@dataclass(frozen=True)
class InducedP(PairOutcome):
    mapping: dict[int, int]  # pattern vertex -> host vertex

    def __hash__(self):
        return hash(tuple(sorted(self.mapping.items())))


@dataclass(frozen=True)
class InducedPprime(PairOutcome):
    mapping: dict[int, int]

    def __hash__(self):
        return hash(tuple(sorted(self.mapping.items())))


@dataclass(frozen=True)
class BigOddHole(PairOutcome):
    hole: Hole


@dataclass(frozen=True)
class ShortCycleFound(PairOutcome):
    cycle: VertexSeq


def seven_holes(g: Graph, budget: Budget | int | None = None) -> list[SevenHoleContext]:
    """All 7-holes of g as contexts, in canonical order."""
    b = ensure_budget(budget, "7-hole enumeration")
    return [
        SevenHoleContext(g, h.vertices)
        for h in enumerate_holes(g, 7, b)
        if len(h) == 7
    ]


def classify_jump(ctx: SevenHoleContext, path: VertexSeq | Sequence[int]) -> Jump:
    """Validate a path as a jump of the context's hole and compute its flags."""
    seq = path if isinstance(path, VertexSeq) else path_seq(tuple(path))
    if seq.kind != "path" or len(seq) < 3:
        raise InputError("a jump is a path on at least 3 vertices")
    bad = validate_sequence(ctx.g, seq, require_induced=True)
    if bad is not None:
        raise InputError(f"jump path invalid: {bad}")
    s, t = seq.vertices[0], seq.vertices[-1]
    con = ctx.cycle_set()
    if s not in con or t not in con:
        raise InputError("jump endpoints must lie on the 7-hole")
    interior = seq.interior()
    touched = [v for v in interior if v in con]
    if touched:
        raise InputError(f"jump interior touches the hole at {touched[0]}")
    ps, pt = ctx.position(s), ctx.position(t)
    fwd = (pt - ps) % 7
    if fwd in (2, 3):
        base, d = ps, fwd
        ends = (s, t)
        ordered = seq.vertices
    elif (ps - pt) % 7 in (2, 3):
        base, d = pt, (ps - pt) % 7
        ends = (t, s)
        ordered = tuple(reversed(seq.vertices))
    else:
        raise InputError(
            f"jump ends must be at cyclic distance 2 or 3, got {ctx.cyclic_distance(s, t)}"
        )
    across = tuple(ctx.vertex_at(base + k) for k in range(1, d))
    kind = "v" if d == 2 else "e"
    outside = con - set(ends) - set(across)
    local = ctx.g.is_anticomplete(interior, outside)
    short = local and seq.length == (5 if kind == "v" else 4)
    return Jump(ends, kind, across, path_seq(ordered), local, short)


def _end_position_pairs() -> list[tuple[int, int]]:
    """All unordered position pairs at cyclic distance 2 or 3, sorted."""
    pairs = set()
    for i in range(1, 8):
        for d in (2, 3):
            j = (i + d - 1) % 7 + 1
            pairs.add((min(i, j), max(i, j)))
    return sorted(pairs)


def _induced_paths(
    g: Graph,
    s: int,
    t: int,
    allowed_interior: set[int],
    budget: Budget,
    max_len: int | None = None,
    exact_len: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Induced s-t paths with interior inside `allowed_interior`, DFS in
    lexicographic vertex order. Lengths bounded or pinned as requested."""
    limit = exact_len if exact_len is not None else max_len
    if limit is None:
        limit = len(allowed_interior) + 1
    path = [s]
    on_path = {s}

    def extend() -> Iterator[tuple[int, ...]]:
        last = path[-1]
        cur_len = len(path) - 1
        for w in g.neighbors(last):
            budget.spend()
            if w == t:
                if cur_len + 1 < 2:
                    continue
                if exact_len is not None and cur_len + 1 != exact_len:
                    continue
                if any(g.has_edge(t, x) for x in path[1:-1]):
                    continue
                yield tuple(path) + (t,)
                continue
            if w not in allowed_interior or w in on_path:
                continue
            if cur_len + 2 > limit:
                continue
            if any(g.has_edge(w, x) for x in path[:-1]):
                continue
            path.append(w)
            on_path.add(w)
            yield from extend()
            on_path.discard(w)
            path.pop()

    yield from extend()


def list_jumps(
    ctx: SevenHoleContext, max_len: int = 12, budget: Budget | int | None = None
) -> list[Jump]:
    """All jumps of the hole up to the given length, in canonical order."""
    b = ensure_budget(budget, "jump enumeration")
    allowed = set(ctx.g.vertices()) - ctx.cycle_set()
    out = []
    for i, j in _end_position_pairs():
        u, v = ctx.vertex_at(i), ctx.vertex_at(j)
        s, t = min(u, v), max(u, v)
        for p in _induced_paths(ctx.g, s, t, allowed, b, max_len=max_len):
            out.append(classify_jump(ctx, p))
    out.sort(key=lambda jp: (ctx.position(jp.ends[0]), ctx.position(jp.ends[1]),
                             jp.length, jp.path.vertices))
    return out


@dataclass(frozen=True)
class JumpInteriorIndex:
    """For each end pair (i, j), the vertices interior to some short jump
    between c_i and c_j; `union` collects them all."""

    by_ends: dict[tuple[int, int], frozenset[int]]
    union: frozenset[int]

    def __hash__(self):
        return hash((tuple(sorted(self.by_ends.items())), self.union))

    def to_json(self) -> dict:
        return {
            "X": {
                f"{i},{j}": sorted(v + 1 for v in vs)
                for (i, j), vs in sorted(self.by_ends.items())
            },
            "union": sorted(v + 1 for v in self.union),
        }


def _short_jumps_between(
    ctx: SevenHoleContext,
    pos_i: int,
    pos_j: int,
    allowed_interior: set[int],
    budget: Budget,
) -> Iterator[Jump]:
    """All short jumps with the given end positions and interior inside
    `allowed_interior`, lexicographic order."""
    u, v = ctx.vertex_at(pos_i), ctx.vertex_at(pos_j)
    d = ctx.cyclic_distance(u, v)
    need = 5 if d == 2 else 4
    s, t = min(u, v), max(u, v)
    if ctx.g.has_edge(s, t):
        return
    for p in _induced_paths(ctx.g, s, t, allowed_interior, budget, exact_len=need):
        j = classify_jump(ctx, p)
        if j.short:
            yield j


def short_jump_interiors(
    ctx: SevenHoleContext, budget: Budget | int | None = None
) -> JumpInteriorIndex:
    """Exact interior index of all short jumps of the hole."""
    b = ensure_budget(budget, "short jump interiors")
    con = ctx.cycle_set()
    allowed = set(ctx.g.vertices()) - con
    by_ends = {}
    union: set[int] = set()
    for i, j in _end_position_pairs():
        xs: set[int] = set()
        for jp in _short_jumps_between(ctx, i, j, allowed, b):
            xs.update(jp.interior())
        by_ends[(i, j)] = frozenset(xs)
        union |= xs
    return JumpInteriorIndex(by_ends, frozenset(union))


# ---------------------------------------------------------------------------
# Shortest (set, set)-paths with constrained interior: the workhorse of the
# localization ladder. Deterministic: among shortest paths it returns the one
# that is lexicographically least as a vertex sequence, starting from the
# least eligible source.
# ---------------------------------------------------------------------------


def _shortest_setpath(
    g: Graph, sources: set[int], targets: set[int], allowed_interior: set[int]
) -> list[int] | None:
    interior = allowed_interior - sources - targets
    dist: dict[int, int] = {t: 0 for t in targets}
    frontier = sorted(targets)
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if w in interior and w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = sorted(nxt)
    best: tuple[int, int] | None = None
    for a in sorted(sources):
        da = min(
            (dist[w] + 1 for w in g.neighbors(a) if w in dist),
            default=None,
        )
        if da is not None and (best is None or da < best[0]):
            best = (da, a)
    if best is None:
        return None
    total, a = best
    path = [a]
    remaining = total
    cur = a
    while remaining > 0:
        step = min(
            w
            for w in g.neighbors(cur)
            if w in dist and dist[w] == remaining - 1 and w not in path
        )
        path.append(step)
        cur = step
        remaining -= 1
    return path


def _try_jump(ctx: SevenHoleContext, vertices: Sequence[int] | None) -> Jump | None:
    if vertices is None:
        return None
    try:
        return classify_jump(ctx, tuple(vertices))
    except InputError:
        return None


def _first_short_jump_within(
    ctx: SevenHoleContext,
    allowed_interior: set[int],
    budget: Budget,
    mandated: list[tuple[int, int]] | None = None,
) -> Jump | None:
    """First short jump with interior inside `allowed_interior`, trying end
    position pairs in mandated order first (if given), then canonical order."""
    pairs = list(mandated) if mandated is not None else []
    if mandated is None:
        pairs = _end_position_pairs()
    for i, j in pairs:
        for jp in _short_jumps_between(ctx, i, j, allowed_interior, budget):
            return jp
    return None


def _subgraph_big_odd_hole(
    g: Graph, vertices: list[int], budget: Budget
) -> Hole | None:
    sub, relabel = induced_subgraph(g, vertices)
    back = {new: old for old, new in relabel.items()}
    hole = find_big_odd_hole(sub, 3, budget)
    if hole is None:
        return None
    return Hole(cycle_seq(_canonical_cycle([back[v] for v in hole.vertices])))


def _subgraph_short_cycle(g: Graph, vertices: list[int]) -> VertexSeq | None:
    sub, relabel = induced_subgraph(g, vertices)
    back = {new: old for old, new in relabel.items()}
    gi, cyc = girth_with_witness(sub)
    if gi is None or gi > 6:
        return None
    return cycle_seq(_canonical_cycle([back[v] for v in cyc.vertices]))


def _localize_candidates(
    ctx: SevenHoleContext, jump: Jump, budget: Budget
) -> Iterator[list[int] | None]:
    """Candidate paths in the constructive case order of the localization
    argument, phrased in a frame where the jump runs c1..c3 (v) or c1..c4 (e).

    Every yielded candidate is validated by the caller; exhausting them falls
    back to the canonical scan.
    """
    g = ctx.g
    interior = set(jump.interior())
    base = ctx.position(jump.ends[0])
    c = lambda i: ctx.vertex_at(base + i - 1)  # frame position -> vertex
    nbr = lambda v: set(g.neighbors(v)) & interior

    if jump.kind == "v":
        c1, c2, c3, c4, c5, c6, c7 = (c(i) for i in range(1, 8))
        if nbr(c2):
            yield _shortest_setpath(g, {c2}, {c4, c5, c6, c7}, interior)
        for near_end, outer, far, flank_in, flank_out in (
            (c1, c4, c6, c5, c7),
            (c3, c7, c5, c6, c4),
        ):
            if not nbr(outer):
                continue
            q = _shortest_setpath(g, {near_end}, {outer}, interior)
            if q is None:
                continue
            qs = set(q[1:-1])
            far_n = set(g.neighbors(far)) & qs
            if far_n:
                yield _shortest_setpath(g, {near_end}, {far}, qs)
                yield _shortest_setpath(g, {outer}, {far}, qs)
            else:
                has_in = bool(set(g.neighbors(flank_in)) & qs)
                has_out = bool(set(g.neighbors(flank_out)) & qs)
                if has_in and has_out:
                    yield _shortest_setpath(g, {flank_in}, {flank_out}, qs)
                elif has_in:
                    yield _shortest_setpath(g, {near_end}, {flank_in}, qs)
                elif has_out:
                    yield _shortest_setpath(g, {outer}, {flank_out}, qs)
        yield _shortest_setpath(g, {c1, c3}, {c5, c6}, interior)
    else:
        c1, c2, c3, c4, c5, c6, c7 = (c(i) for i in range(1, 8))
        if nbr(c2) or nbr(c3):
            yield _shortest_setpath(g, {c2, c3}, {c5, c6, c7}, interior)
        if nbr(c6):
            yield _shortest_setpath(g, {c1, c4}, {c6}, interior)
        if nbr(c5):
            yield _shortest_setpath(g, {c1}, {c5}, interior)
            if nbr(c7):
                yield _shortest_setpath(g, {c5}, {c7}, interior)
        if nbr(c7):
            yield _shortest_setpath(g, {c4}, {c7}, interior)
        yield _shortest_setpath(g, {c1, c4}, {c5, c6, c7}, interior)


def localize_jump(
    ctx: SevenHoleContext, jump: Jump, budget: Budget | int | None = None
) -> Jump | BigOddHole:
    """Shrink a jump to a short jump with interior inside the jump's own.

    A short input comes back unchanged. For a non-local jump in a graph of
    girth >= 7 that is a family member inducing neither of the two 12-vertex
    obstructions, a short jump is guaranteed; on non-members the search may
    instead surface a big odd hole. Inputs outside those hypotheses (a local
    but non-short jump, or an obstruction-carrying member) can exhaust every
    candidate, which raises SearchExhaustedError.
    """
    if jump.short:
        return jump
    b = ensure_budget(budget, "jump localization")
    interior = set(jump.interior())
    for cand in _localize_candidates(ctx, jump, b):
        j = _try_jump(ctx, cand)
        if j is not None and j.short and set(j.interior()) <= interior:
            return j
    j = _first_short_jump_within(ctx, interior, b)
    if j is not None:
        return j
    scope = sorted(ctx.cycle_set() | interior)
    hole = _subgraph_big_odd_hole(ctx.g, scope, b)
    if hole is not None:
        return BigOddHole(hole)
    raise SearchExhaustedError(
        "no short jump inside the given interior and no big odd hole in scope"
    )


def _shared_end(j1: Jump, j2: Jump) -> int | None:
    shared = set(j1.ends) & set(j2.ends)
    return next(iter(shared)) if len(shared) == 1 else None


def analyze_jump_pair(
    ctx: SevenHoleContext, j1: Jump, j2: Jump, budget: Budget | int | None = None
) -> PairOutcome:
    """Resolve a pair of jumps into the structure it forces.

    Accepted pairs either share exactly one end, or are two v-jumps whose
    across vertices sit at cyclic distance 3 (the disjoint-ends variant).
    The search order is: a short jump with the mandated ends (across the
    shared position, or the edge on either side of it) with interior inside
    the union of the two interiors; an induced copy of either 12-vertex
    obstruction, first within hole + interiors, then anywhere; a big odd
    hole in that scope; a short cycle in that scope.
    """
    b = ensure_budget(budget, "jump pair analysis")
    shared = _shared_end(j1, j2)
    if shared is None:
        if not (
            j1.kind == "v"
            and j2.kind == "v"
            and ctx.cyclic_distance(j1.across[0], j2.across[0]) == 3
            and not set(j1.ends) & set(j2.ends)
        ):
            raise InputError(
                "jumps must share exactly one end, or be v-jumps across "
                "vertices at cyclic distance 3"
            )
    union = set(j1.interior()) | set(j2.interior())
    if shared is not None:
        p = ctx.position(shared)
        wrap = lambda k: (k - 1) % 7 + 1
        mandated = [
            tuple(sorted((wrap(p - 1), wrap(p + 1)))),  # v-jump across c_p
            tuple(sorted((wrap(p - 2), wrap(p + 1)))),  # e-jump across c_{p-1} c_p
            tuple(sorted((wrap(p - 1), wrap(p + 2)))),  # e-jump across c_p c_{p+1}
        ]
        t = _first_short_jump_within(ctx, union, b, mandated=mandated)
        if t is not None:
            return ShortJump(t)
    scope = sorted(ctx.cycle_set() | union)
    for name, wrap_cls in (("P", InducedP), ("Pprime", InducedPprime)):
        pattern = catalog_graph(name)
        found = induced_copies_in_subset(ctx.g, pattern, scope, b)
        if found is None and ctx.g.n > len(scope):
            found = find_induced_copy(ctx.g, pattern, b)
        if found is not None:
            return wrap_cls(found)
    hole = _subgraph_big_odd_hole(ctx.g, scope, b)
    if hole is not None:
        return BigOddHole(hole)
    cyc = _subgraph_short_cycle(ctx.g, scope)
    if cyc is not None:
        return ShortCycleFound(cyc)
    raise SearchExhaustedError("jump pair forced none of the expected outcomes")
