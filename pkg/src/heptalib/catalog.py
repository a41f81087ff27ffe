"""Reference graphs with audited invariants, plus isomorphism utilities.

The four obstruction fixtures are built on their conventional labels
(presented 1-based, stored 0-based):

* P0: the 8-cycle 1..8 plus the four chordal paths 1-13-15-5, 2-12-10-6,
  3-16-14-7 and 4-11-9-8.
* P1: P0 with vertices 14 and 16 deleted.
* P: P1 with vertices 13 and 15 deleted (so 1..12 keep their labels).
* Pprime: the 12-cycle 1..12 plus the edges {3,9} and {6,12}.

The cages come from their standard LCF codes; every entry is audited against
its expected (n, m, girth, membership) on first load.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import Budget, ensure_budget
from .errors import HeptalibError, InputError
from .graph import Graph, from_edge_list, girth, induced_subgraph
from .recognizer import membership


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def lcf_graph(n: int, shifts: list[int], repeats: int) -> Graph:
    """Hamiltonian cycle 0..n-1 plus the chords given by an LCF code."""
    if len(shifts) * repeats != n:
        raise InputError("LCF code length does not match vertex count")
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.append((min(i, j), max(i, j)))
    return Graph(n, set(edges))


def _p0() -> Graph:
    c8 = [(i, i % 8 + 1) for i in range(1, 9)]
    paths = [
        (1, 13), (13, 15), (15, 5),
        (2, 12), (12, 10), (10, 6),
        (3, 16), (16, 14), (14, 7),
        (4, 11), (11, 9), (9, 8),
    ]
    return from_edge_list(16, c8 + paths)


def _delete(g: Graph, labels_1based: set[int]) -> Graph:
    keep = [v for v in g.vertices() if v + 1 not in labels_1based]
    sub, _ = induced_subgraph(g, keep)
    return sub


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    expected_n: int
    expected_m: int
    expected_girth: int
    expected_member_ell3: bool


_BUILDERS = {
    "P0": lambda: _p0(),
    "P1": lambda: _delete(_p0(), {14, 16}),
    "P": lambda: _delete(_p0(), {13, 14, 15, 16}),
    "Pprime": lambda: from_edge_list(
        12, [(i, i % 12 + 1) for i in range(1, 13)] + [(3, 9), (6, 12)]
    ),
    "C7": lambda: cycle_graph(7),
    "petersen": lambda: _petersen(),
    "mcgee": lambda: lcf_graph(24, [12, 7, -7], 8),
    "tutte_coxeter": lambda: lcf_graph(30, [-13, -9, 7, -7, 9, 13], 5),
}

_EXPECTED = {
    "P0": (16, 20, 7, True),
    "P1": (14, 17, 7, True),
    "P": (12, 14, 7, True),
    "Pprime": (12, 14, 7, True),
    "C7": (7, 7, 7, True),
    "petersen": (10, 15, 5, False),
    "mcgee": (24, 36, 7, False),
    "tutte_coxeter": (30, 45, 8, True),
}

_CATALOG: dict[str, CatalogEntry] | None = None


def _load() -> dict[str, CatalogEntry]:
    global _CATALOG
    if _CATALOG is not None:
        return _CATALOG
    catalog = {}
    for name, build in _BUILDERS.items():
        g = build()
        n, m, gi, member = _EXPECTED[name]
        entry = CatalogEntry(name, g, n, m, gi, member)
        _audit(entry)
        catalog[name] = entry
    _CATALOG = catalog
    return catalog


def _audit(entry: CatalogEntry) -> None:
    g = entry.graph
    if g.n != entry.expected_n or g.m != entry.expected_m:
        raise HeptalibError(
            f"catalog {entry.name}: built (n={g.n}, m={g.m}), "
            f"expected ({entry.expected_n}, {entry.expected_m})"
        )
    gi = girth(g)
    if gi != entry.expected_girth:
        raise HeptalibError(
            f"catalog {entry.name}: girth {gi}, expected {entry.expected_girth}"
        )
    verdict = membership(g, 3)
    if verdict.member != entry.expected_member_ell3:
        raise HeptalibError(
            f"catalog {entry.name}: membership {verdict.member}, "
            f"expected {entry.expected_member_ell3}"
        )


def catalog_names() -> list[str]:
    return list(_BUILDERS)


def catalog_entry(name: str) -> CatalogEntry:
    catalog = _load()
    if name not in catalog:
        raise InputError(
            f"unknown catalog name {name!r}; known: {', '.join(catalog)}"
        )
    return catalog[name]


def catalog_graph(name: str) -> Graph:
    return catalog_entry(name).graph


# ---------------------------------------------------------------------------
# Isomorphism and induced-copy search. Plain backtracking with degree and
# neighbor-degree-multiset pruning; every use in this library is small.
# ---------------------------------------------------------------------------


def _refinement_keys(g: Graph) -> list[tuple]:
    deg = [g.degree(v) for v in g.vertices()]
    return [
        (deg[v], tuple(sorted(deg[w] for w in g.neighbors(v))))
        for v in g.vertices()
    ]


def are_isomorphic(
    g: Graph, h: Graph, budget: Budget | int | None = None
) -> dict[int, int] | None:
    """A bijection V(g)->V(h) preserving adjacency both ways, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    kg, kh = _refinement_keys(g), _refinement_keys(h)
    if sorted(kg) != sorted(kh):
        return None
    b = ensure_budget(budget, "isomorphism search")
    # Map rarest-key vertices first.
    order = sorted(g.vertices(), key=lambda v: (kg.count(kg[v]), -g.degree(v), v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        u = order[i]
        for v in h.vertices():
            b.spend()
            if v in used or kh[v] != kg[u]:
                continue
            ok = True
            for w in g.neighbors(u):
                if w in mapping and not h.has_edge(v, mapping[w]):
                    ok = False
                    break
            if ok:
                for w, wv in mapping.items():
                    if not g.has_edge(u, w) and h.has_edge(v, wv):
                        ok = False
                        break
            if not ok:
                continue
            mapping[u] = v
            used.add(v)
            if extend(i + 1):
                return True
            del mapping[u]
            used.discard(v)
        return False

    return dict(mapping) if extend(0) else None


def find_induced_copy(
    g: Graph, pattern: Graph, budget: Budget | int | None = None
) -> dict[int, int] | None:
    """An injective map V(pattern)->V(g) preserving edges and non-edges, or None.

    Pattern vertices are matched in descending-degree order (ties by id) for
    early pruning.
    """
    if pattern.n > g.n or pattern.m > g.m:
        return None
    b = ensure_budget(budget, "induced copy search")
    order = sorted(pattern.vertices(), key=lambda v: (-pattern.degree(v), v))
    deg_g = [g.degree(v) for v in g.vertices()]
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def candidates(u: int) -> list[int]:
        placed = [w for w in pattern.neighbors(u) if w in mapping]
        if placed:
            anchor = mapping[placed[0]]
            return [v for v in g.neighbors(anchor)]
        return list(g.vertices())

    def extend(i: int) -> bool:
        if i == pattern.n:
            return True
        u = order[i]
        for v in candidates(u):
            b.spend()
            if v in used or deg_g[v] < pattern.degree(u):
                continue
            ok = True
            for w, wv in mapping.items():
                if pattern.has_edge(u, w) != g.has_edge(v, wv):
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = v
            used.add(v)
            if extend(i + 1):
                return True
            del mapping[u]
            used.discard(v)
        return False

    return dict(mapping) if extend(0) else None


def induced_copies_in_subset(
    g: Graph, pattern: Graph, subset: list[int], budget: Budget | int | None = None
) -> dict[int, int] | None:
    """find_induced_copy restricted to g's induced subgraph on `subset`.

    The returned map targets original g labels.
    """
    sub, relabel = induced_subgraph(g, subset)
    back = {new: old for old, new in relabel.items()}
    found = find_induced_copy(sub, pattern, budget)
    if found is None:
        return None
    return {u: back[v] for u, v in found.items()}


def disjoint_induced_path_deletions(
    g: Graph, pattern: Graph, groups: int = 4, budget: Budget | int | None = None
) -> tuple[list[tuple[int, int, int]], dict[int, int]] | None:
    """Search for `groups` disjoint induced 3-vertex paths whose deletion
    leaves a graph isomorphic to `pattern`.

    Returns (list of paths as (end, mid, end) triples, isomorphism from the
    remainder onto the pattern) or None. Exists for one catalog fact: the
    24-vertex cage minus four such groups is Pprime.
    """
    b = ensure_budget(budget, "path deletion search")
    p3s = []
    for mid in g.vertices():
        for a, c in combinations(g.neighbors(mid), 2):
            if not g.has_edge(a, c):
                p3s.append((a, mid, c))
    p3s.sort(key=lambda t: (min(t), t))
    target_degseq = sorted(pattern.degree(v) for v in pattern.vertices())

    def search(start: int, chosen: list[tuple[int, int, int]], taken: set[int]):
        if len(chosen) == groups:
            rest = [v for v in g.vertices() if v not in taken]
            sub, relabel = induced_subgraph(g, rest)
            if sorted(sub.degree(v) for v in sub.vertices()) != target_degseq:
                return None
            iso = are_isomorphic(sub, pattern, b)
            if iso is not None:
                back = {new: old for old, new in relabel.items()}
                return list(chosen), {back[u]: v for u, v in iso.items()}
            return None
        for idx in range(start, len(p3s)):
            b.spend()
            trip = p3s[idx]
            if taken & set(trip):
                continue
            chosen.append(trip)
            taken.update(trip)
            hit = search(idx + 1, chosen, taken)
            if hit is not None:
                return hit
            chosen.pop()
            taken.difference_update(trip)
        return None

    return search(0, [], set())
