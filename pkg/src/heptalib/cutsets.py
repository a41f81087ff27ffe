"""Cutset and ear discovery with independently checkable certificates.

Three cutset kinds are searched: cliques, induced 3-vertex paths, and parity
stars. A parity star-cutset is a cutset X with a vertex x adjacent to all of
X - {x}, such that some component A of G - X joins every pair of X - {x} by
an induced even path with interior inside A. In triangle-free graphs every
clique cutset is also a parity star-cutset (its pair condition is vacuous).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .budget import Budget, ensure_budget
from .errors import InputError
from .graph import Graph, VertexSeq, path_seq, validate_sequence

PAIR_PATH_BUDGET = 1_000_000


@dataclass(frozen=True)
class CutsetCertificate:
    kind: str  # "clique" | "p3" | "parity_star"
    cut: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    p3: tuple[int, int, int] | None = None
    center: int | None = None
    component_a: tuple[int, ...] | None = None
    even_paths: tuple[tuple[tuple[int, int], tuple[int, ...]], ...] = field(
        default_factory=tuple
    )

    def even_path_map(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return dict(self.even_paths)

    def to_json(self) -> dict:
        out: dict = {
            "kind": self.kind,
            "cut": [v + 1 for v in self.cut],
            "components": [[v + 1 for v in comp] for comp in self.components],
        }
        if self.kind == "p3":
            out["path"] = [v + 1 for v in self.p3]
        if self.kind == "parity_star":
            out["center"] = self.center + 1
            out["component_a"] = [v + 1 for v in self.component_a]
            out["even_paths"] = {
                f"{u + 1},{v + 1}": [w + 1 for w in path]
                for (u, v), path in self.even_paths
            }
        return out


@dataclass(frozen=True)
class CutsetViolation:
    reason: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.reason}: {self.detail}" if self.detail else self.reason


@dataclass(frozen=True)
class EarCertificate:
    s: int
    t: int
    path: VertexSeq

    def to_json(self) -> dict:
        return {
            "s": self.s + 1,
            "t": self.t + 1,
            "path": [v + 1 for v in self.path.vertices],
        }


def _components_without(g: Graph, cut: set[int]) -> tuple[tuple[int, ...], ...]:
    seen = set(cut)
    comps = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(sorted(comps, key=lambda c: c[0]))


def _is_cutset(g: Graph, cut: set[int]) -> tuple[tuple[int, ...], ...] | None:
    comps = _components_without(g, cut)
    return comps if len(comps) >= 2 else None


def _has_triangle(g: Graph) -> bool:
    for u in g.vertices():
        nb = g.neighbors(u)
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if g.has_edge(nb[i], nb[j]):
                    return True
    return False


def find_clique_cutset(g: Graph) -> CutsetCertificate | None:
    """A clique whose removal disconnects the graph, smallest first.

    Sizes 1 and 2 always; larger cliques only when the graph has a triangle.
    """
    for v in g.vertices():
        comps = _is_cutset(g, {v})
        if comps:
            return CutsetCertificate("clique", (v,), comps)
    for u, v in g.edges():
        comps = _is_cutset(g, {u, v})
        if comps:
            return CutsetCertificate("clique", (u, v), comps)
    if not _has_triangle(g):
        return None
    cliques = [frozenset(e) for e in g.edges()]
    while cliques:
        grown = set()
        for cl in cliques:
            for w in g.vertices():
                if w in cl or any(not g.has_edge(w, x) for x in cl):
                    continue
                grown.add(cl | {w})
        cliques = sorted(grown, key=sorted)
        for cl in cliques:
            comps = _is_cutset(g, set(cl))
            if comps:
                return CutsetCertificate("clique", tuple(sorted(cl)), comps)
    return None


def _induced_p3s(g: Graph) -> Iterator[tuple[int, int, int]]:
    """Induced a-b-c paths, middle vertex ascending, then end pair ascending."""
    for b in g.vertices():
        nb = g.neighbors(b)
        for a, c in combinations(nb, 2):
            if not g.has_edge(a, c):
                yield a, b, c


def find_p3_cutset(g: Graph) -> CutsetCertificate | None:
    """First induced 3-vertex path whose vertex set is a cutset, or None
    after trying all of them."""
    for a, b, c in _induced_p3s(g):
        comps = _is_cutset(g, {a, b, c})
        if comps:
            return CutsetCertificate(
                "p3", tuple(sorted((a, b, c))), comps, p3=(a, b, c)
            )
    return None


def _induced_paths_in(
    g: Graph, s: int, t: int, allowed_interior: set[int], budget: Budget
) -> Iterator[tuple[int, ...]]:
    """All induced s-t paths with interior inside `allowed_interior`, in
    lexicographic DFS order."""
    path = [s]
    on_path = {s}

    def extend() -> Iterator[tuple[int, ...]]:
        last = path[-1]
        for w in g.neighbors(last):
            budget.spend()
            if w == t:
                if len(path) >= 2 and not any(
                    g.has_edge(t, x) for x in path[1:-1]
                ):
                    yield tuple(path) + (t,)
                continue
            if w not in allowed_interior or w in on_path:
                continue
            if any(g.has_edge(w, x) for x in path[:-1]):
                continue
            path.append(w)
            on_path.add(w)
            yield from extend()
            on_path.discard(w)
            path.pop()

    yield from extend()


def _even_induced_path(
    g: Graph, u: int, v: int, region: set[int], budget: Budget
) -> tuple[int, ...] | None:
    for p in _induced_paths_in(g, u, v, region, budget):
        if (len(p) - 1) % 2 == 0:
            return p
    return None


def find_parity_star_cutset(
    g: Graph, budget: Budget | int | None = None
) -> CutsetCertificate | None:
    """First parity star-cutset in deterministic order, or None.

    Order: center x by vertex id; X = {x} + subset of N(x) by increasing size
    then lexicographically; component A by increasing smallest vertex. Every
    pair of X - {x} needs an induced even path with interior in A; each pair
    search gets its own step budget unless an overall one is supplied.
    """
    for x in g.vertices():
        nb = g.neighbors(x)
        for size in range(0, len(nb) + 1):
            for extra in combinations(nb, size):
                cut = {x, *extra}
                comps = _is_cutset(g, cut)
                if comps is None:
                    continue
                others = sorted(set(extra))
                for comp in comps:
                    region = set(comp)
                    witnesses = []
                    ok = True
                    for u, v in combinations(others, 2):
                        b = (
                            ensure_budget(budget, "even path search")
                            if budget is not None
                            else Budget(PAIR_PATH_BUDGET, label="even path search")
                        )
                        p = _even_induced_path(g, u, v, region, b)
                        if p is None:
                            ok = False
                            break
                        witnesses.append(((u, v), p))
                    if ok:
                        return CutsetCertificate(
                            "parity_star",
                            tuple(sorted(cut)),
                            comps,
                            center=x,
                            component_a=comp,
                            even_paths=tuple(witnesses),
                        )
    return None


def verify_cutset(g: Graph, cert: CutsetCertificate) -> CutsetViolation | None:
    """Recheck every claim a certificate makes, independently of the finders."""
    cut = set(cert.cut)
    for v in cut:
        if not (0 <= v < g.n):
            return CutsetViolation("bad vertex", str(v))
    comps = _components_without(g, cut)
    if comps != cert.components:
        return CutsetViolation("components mismatch")
    if len(comps) < 2:
        return CutsetViolation("not a cutset")
    if cert.kind == "clique":
        for u, v in combinations(sorted(cut), 2):
            if not g.has_edge(u, v):
                return CutsetViolation("not a clique", f"({u}, {v})")
        return None
    if cert.kind == "p3":
        if cert.p3 is None or set(cert.p3) != cut or len(cut) != 3:
            return CutsetViolation("cut is not the path's vertex set")
        a, b, c = cert.p3
        if not (g.has_edge(a, b) and g.has_edge(b, c)):
            return CutsetViolation("not a path", f"{cert.p3}")
        if g.has_edge(a, c):
            return CutsetViolation("not induced", f"({a}, {c})")
        return None
    if cert.kind == "parity_star":
        x = cert.center
        if x is None or x not in cut:
            return CutsetViolation("center not in cut")
        for v in sorted(cut - {x}):
            if not g.has_edge(x, v):
                return CutsetViolation("center not adjacent", str(v))
        if cert.component_a not in cert.components:
            return CutsetViolation("component A not a component")
        region = set(cert.component_a)
        others = sorted(cut - {x})
        paths = cert.even_path_map()
        for u, v in combinations(others, 2):
            p = paths.get((u, v)) or paths.get((v, u))
            if p is None:
                return CutsetViolation("missing pair witness", f"({u}, {v})")
            if {p[0], p[-1]} != {u, v}:
                return CutsetViolation("wrong endpoints", f"({u}, {v})")
            if (len(p) - 1) % 2 != 0:
                return CutsetViolation("parity", f"({u}, {v})")
            bad = validate_sequence(g, path_seq(p), require_induced=True)
            if bad is not None:
                return CutsetViolation("witness path invalid", str(bad))
            if not set(p[1:-1]) <= region:
                return CutsetViolation("interior leaves component A", f"({u}, {v})")
        return None
    return CutsetViolation("unknown kind", cert.kind)


def find_ear(
    g: Graph, h: set[int] | list[int], budget: Budget | int | None = None
) -> EarCertificate | None:
    """An ear of the induced subgraph on `h`: an induced s-t path of length
    at least 3 between nonadjacent vertices of h, interior outside h, where
    any h-vertex seeing the interior is adjacent to both s and t.

    Precondition (checked): |h| >= 3 and every vertex outside h has at most
    one neighbor inside h.
    """
    hs = set(h)
    if len(hs) < 3:
        raise InputError("need |H| >= 3")
    for v in hs:
        if not (0 <= v < g.n):
            raise InputError(f"H contains invalid vertex {v}")
    outside = [v for v in g.vertices() if v not in hs]
    for v in outside:
        k = sum(1 for w in g.neighbors(v) if w in hs)
        if k > 1:
            raise InputError(
                f"vertex {v} outside H has {k} neighbors in H (at most 1 allowed)"
            )
    b = ensure_budget(budget, "ear search")
    allowed = set(outside)
    rest = sorted(hs)
    for i, s in enumerate(rest):
        for t in rest[i + 1 :]:
            if g.has_edge(s, t):
                continue
            for p in _induced_paths_in(g, s, t, allowed, b):
                if len(p) - 1 < 3:
                    continue
                interior = set(p[1:-1])
                ok = True
                for hv in hs - {s, t}:
                    if set(g.neighbors(hv)) & interior:
                        if not (g.has_edge(hv, s) and g.has_edge(hv, t)):
                            ok = False
                            break
                if ok:
                    return EarCertificate(s, t, path_seq(p))
    return None
