"""Membership testing for the girth/odd-hole graph families, with witnesses.

The family with parameter ell >= 2 contains the graphs that have no cycle of
length below 2*ell+1 and no odd hole of length 2*ell+3 or more. ell=3 is the
main case throughout the library; ell=2 gives the well-known smaller family
(the Petersen graph is its classic non-bipartite member).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .budget import Budget, ensure_budget
from .errors import InputError
from .graph import Graph, Hole, VertexSeq, cycle_seq, girth_with_witness, is_bipartite


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    witness: VertexSeq | Hole | None = None

    @property
    def witness_kind(self) -> str | None:
        if self.witness is None:
            return None
        return "big_odd_hole" if isinstance(self.witness, Hole) else "short_cycle"

    def to_json(self) -> dict:
        if self.witness is None:
            return {"member": self.member, "witness": None}
        verts = (
            self.witness.vertices
            if isinstance(self.witness, Hole)
            else self.witness.vertices
        )
        return {
            "member": self.member,
            "witness": {
                "kind": self.witness_kind,
                "vertices": [v + 1 for v in verts],
            },
        }


def _hole_dfs(
    g: Graph, max_len: int | None, budget: Budget
) -> Iterator[tuple[int, ...]]:
    """Yield every induced cycle of length 4..max_len exactly once.

    Canonical form: the cycle starts at its smallest vertex (the DFS root),
    and of the two directions the one whose second vertex is smaller is kept.
    All other cycle vertices exceed the root, so each hole appears for exactly
    one root.
    """
    limit = g.n if max_len is None else min(max_len, g.n)
    if limit < 4:
        return
    adj = g.neighbors
    for root in g.vertices():
        root_adj = set(adj(root))
        path: list[int] = []
        path_set: set[int] = set()

        def extend() -> Iterator[tuple[int, ...]]:
            last = path[-1]
            for w in adj(last):
                budget.spend()
                if w <= root or w in path_set:
                    continue
                # chordlessness against everything between root and endpoint
                if any(g.has_edge(w, x) for x in path[1:-1]):
                    continue
                if w in root_adj:
                    # closing edge; keep one direction per hole
                    if len(path) >= 3 and path[1] < w:
                        yield tuple(path) + (w,)
                    continue  # extending past a root neighbor would leave a chord
                if len(path) + 2 <= limit:
                    path.append(w)
                    path_set.add(w)
                    yield from extend()
                    path_set.discard(w)
                    path.pop()

        for v1 in adj(root):
            if v1 <= root:
                continue
            path = [root, v1]
            path_set = {root, v1}
            yield from extend()


def enumerate_holes(
    g: Graph, max_len: int | None = None, budget: Budget | int | None = None
) -> list[Hole]:
    """All induced cycles of length 4..max_len, canonical and duplicate-free.

    Sorted by (length, vertex tuple). Worst case exponential; the budget
    bounds the DFS extension count.
    """
    b = ensure_budget(budget, "hole enumeration")
    found = sorted(_hole_dfs(g, max_len, b), key=lambda c: (len(c), c))
    return [Hole(cycle_seq(c)) for c in found]


def find_big_odd_hole(
    g: Graph, ell: int = 3, budget: Budget | int | None = None
) -> Hole | None:
    """Some odd hole of length >= 2*ell+3, or None when no such hole exists.

    Returns a shortest one (deterministic choice); exits early when a hole of
    the minimum possible length turns up. Bipartite graphs are dismissed
    without any enumeration.
    """
    if ell < 2:
        raise InputError(f"family parameter must be >= 2, got {ell}")
    threshold = 2 * ell + 3
    bipartite, _ = is_bipartite(g)
    if bipartite:
        return None
    b = ensure_budget(budget, "odd hole search")
    best: tuple[int, ...] | None = None
    for cyc in _hole_dfs(g, None, b):
        k = len(cyc)
        if k % 2 == 1 and k >= threshold:
            if best is None or (k, cyc) < (len(best), best):
                best = cyc
            if k == threshold:
                break
    return None if best is None else Hole(cycle_seq(best))


def membership(
    g: Graph, ell: int = 3, budget: Budget | int | None = None
) -> MembershipVerdict:
    """Decide family membership; a violation comes with a checkable witness.

    The short-cycle witness is preferred when both kinds of violation exist.
    """
    if ell < 2:
        raise InputError(f"family parameter must be >= 2, got {ell}")
    gi, cyc = girth_with_witness(g)
    if gi is not None and gi < 2 * ell + 1:
        return MembershipVerdict(member=False, witness=cyc)
    hole = find_big_odd_hole(g, ell, budget)
    if hole is not None:
        return MembershipVerdict(member=False, witness=hole)
    return MembershipVerdict(member=True)
