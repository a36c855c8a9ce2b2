"""Simplicial complexes, posets and quivers, and the constructions between them.

Every structure is immutable and stored in canonical (lexicographically sorted)
form, so two values built from the same data compare equal and serialize to
the same bytes.

Arrows of a Hasse quiver point from the smaller element to the larger one.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    CyclicQuiver,
    EmptySimplex,
    FGToolError,
    InvalidPoset,
    MissingFace,
    NotOrdered,
    ParallelArrows,
    UnknownVertex,
)

POS_SEPARATOR = "+"


def _connected(vertices, adjacency) -> bool:
    if not vertices:
        return False
    start = vertices[0]
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adjacency.get(v, ()):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(vertices)


# ---------------------------------------------------------------------------
# simplicial complexes


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    simplexes: frozenset[frozenset[str]]
    connected: bool

    def faces(self, dim: int) -> list[tuple[str, ...]]:
        """Simplexes of dimension ``dim`` as sorted vertex tuples, in lexicographic order."""
        return sorted(tuple(sorted(s)) for s in self.simplexes if len(s) == dim + 1)

    @property
    def dimension(self) -> int:
        return max(len(s) for s in self.simplexes) - 1

    def neighbours(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.faces(1):
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(d)) for d in range(self.dimension + 1))

    def __len__(self):
        return len(self.simplexes)


def validate_complex(vertices: Iterable[str], simplexes: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Check a candidate complex and return it in canonical form.

    Missing faces are reported, never filled in; use :func:`close_down` first
    when the input only lists maximal simplexes.
    """
    verts = sorted(set(vertices))
    if not verts:
        raise FGToolError("a simplicial complex needs at least one vertex")
    known = set(verts)
    simps = set()
    for s in simplexes:
        s = frozenset(s)
        if not s:
            raise EmptySimplex("empty simplex")
        unknown = s - known
        if unknown:
            raise UnknownVertex(f"simplex {sorted(s)} uses unknown vertices {sorted(unknown)}")
        simps.add(s)
    for v in verts:
        if frozenset([v]) not in simps:
            raise MissingFace(f"vertex simplex {{{v}}} is absent")
    for s in simps:
        if len(s) < 2:
            continue
        for v in s:
            face = s - {v}
            if face not in simps:
                raise MissingFace(f"face {sorted(face)} of simplex {sorted(s)} is absent")
    adj = defaultdict(list)
    for s in simps:
        if len(s) == 2:
            u, v = sorted(s)
            adj[u].append(v)
            adj[v].append(u)
    return SimplicialComplex(tuple(verts), frozenset(simps), _connected(verts, adj))


def close_down(simplexes: Iterable[Iterable[str]]) -> set[frozenset[str]]:
    """All non-empty subsets of the given simplexes."""
    out = set()
    for s in simplexes:
        s = tuple(sorted(set(s)))
        for r in range(1, len(s) + 1):
            out.update(frozenset(c) for c in itertools.combinations(s, r))
    return out


def complex_from_facets(facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    faces = close_down(facets)
    return validate_complex(set().union(*faces), faces)


# ---------------------------------------------------------------------------
# posets


@dataclass(frozen=True)
class Poset:
    """Finite strict partial order; ``less`` holds every pair (x, y) with x < y."""

    elements: tuple[str, ...]
    less: frozenset[tuple[str, str]]

    def lt(self, x, y) -> bool:
        return (x, y) in self.less

    def le(self, x, y) -> bool:
        return x == y or (x, y) in self.less

    def comparable(self, x, y) -> bool:
        return x == y or (x, y) in self.less or (y, x) in self.less

    def up(self) -> dict[str, list[str]]:
        """Strict up-sets, sorted."""
        ups: dict[str, list[str]] = {x: [] for x in self.elements}
        for x, y in sorted(self.less):
            ups[x].append(y)
        return ups

    def down(self) -> dict[str, list[str]]:
        downs: dict[str, list[str]] = {x: [] for x in self.elements}
        for x, y in sorted(self.less):
            downs[y].append(x)
        return downs

    def covers(self) -> list[tuple[str, str]]:
        ups = self.up()
        out = []
        for x, y in sorted(self.less):
            if not any((z, y) in self.less for z in ups[x]):
                out.append((x, y))
        return out

    def minimal(self) -> list[str]:
        return [y for y in self.elements if not any((x, y) in self.less for x in self.elements)]

    def maximal(self) -> list[str]:
        return [x for x in self.elements if not any((x, y) in self.less for y in self.elements)]

    def is_connected(self) -> bool:
        adj = defaultdict(list)
        for x, y in self.less:
            adj[x].append(y)
            adj[y].append(x)
        return _connected(self.elements, adj)

    def intervals(self) -> list[tuple[str, str]]:
        """All pairs x <= y, including x == y, in lexicographic order."""
        return sorted([(x, x) for x in self.elements] + list(self.less))

    def chains(self) -> list[tuple[str, ...]]:
        """Every non-empty chain, listed bottom-up."""
        ups = self.up()
        out = []

        def extend(chain):
            out.append(chain)
            for y in ups[chain[-1]]:
                extend(chain + (y,))

        for x in self.elements:
            extend((x,))
        return out

    def maximal_chains_between(self, x, y) -> list[tuple[str, ...]]:
        """Saturated chains from x up to y (x < y), sorted lexicographically."""
        upper_covers: dict[str, list[str]] = {e: [] for e in self.elements}
        for a, b in self.covers():
            upper_covers[a].append(b)
        out = []

        def extend(chain):
            last = chain[-1]
            if last == y:
                out.append(chain)
                return
            for z in upper_covers[last]:
                if z == y or (z, y) in self.less:
                    extend(chain + (z,))

        extend((x,))
        return sorted(out)

    def __len__(self):
        return len(self.elements)


def transitive_closure(elements, relations) -> set[tuple[str, str]]:
    ups = {x: set() for x in elements}
    for x, y in relations:
        ups[x].add(y)
    closed = set()
    for x in elements:
        seen = set()
        todo = list(ups[x])
        while todo:
            y = todo.pop()
            if y in seen:
                continue
            seen.add(y)
            todo.extend(ups[y])
        closed.update((x, y) for y in seen)
    return closed


def make_poset(elements: Iterable[str], relations: Iterable[tuple[str, str]] = ()) -> Poset:
    """Poset generated by ``relations`` (transitive closure is taken)."""
    elems = sorted(set(elements))
    if not elems:
        raise InvalidPoset("a poset needs at least one element")
    known = set(elems)
    rels = set()
    for x, y in relations:
        if x not in known or y not in known:
            raise InvalidPoset(f"relation {x} < {y} uses an unknown element")
        if x == y:
            raise InvalidPoset(f"relation {x} < {x} is reflexive")
        rels.add((x, y))
    closed = transitive_closure(elems, rels)
    for x, y in closed:
        if x == y:
            raise InvalidPoset(f"relations contain a cycle through {x}")
    return Poset(tuple(elems), frozenset(closed))


# ---------------------------------------------------------------------------
# quivers


class Arrow(NamedTuple):
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def arrow(self, arrow_id: str) -> Arrow:
        return self._by_id()[arrow_id]

    def _by_id(self):
        return {a.id: a for a in self.arrows}

    def has_arrow(self, arrow_id: str) -> bool:
        return any(a.id == arrow_id for a in self.arrows)

    def out_arrows(self) -> dict[str, list[Arrow]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return out

    def pairs(self) -> set[tuple[str, str]]:
        return {(a.source, a.target) for a in self.arrows}

    def arrow_between(self, source, target):
        for a in self.arrows:
            if a.source == source and a.target == target:
                return a
        return None

    def is_connected(self) -> bool:
        adj = defaultdict(list)
        for a in self.arrows:
            adj[a.source].append(a.target)
            adj[a.target].append(a.source)
        return _connected(self.vertices, adj)

    def is_acyclic(self) -> bool:
        try:
            topological_order(self)
        except CyclicQuiver:
            return False
        return True

    def has_parallel_arrows(self) -> bool:
        pairs = [(a.source, a.target) for a in self.arrows]
        return len(pairs) != len(set(pairs))

    def reachability(self) -> set[tuple[str, str]]:
        """Pairs (a, b), a != b, joined by a directed path of length >= 1."""
        return transitive_closure(self.vertices, self.pairs())

    def subquiver(self, arrow_ids: Iterable[str]) -> "Quiver":
        """Subquiver spanned by the given arrows (vertices = their endpoints)."""
        keep = set(arrow_ids)
        arrows = [a for a in self.arrows if a.id in keep]
        verts = {a.source for a in arrows} | {a.target for a in arrows}
        return make_quiver(verts, arrows)


class OrderedQuiver(Quiver):
    """A quiver that passed :func:`check_ordered`."""

    validated = True


def make_quiver(vertices: Iterable[str], arrows: Iterable[tuple[str, str, str]]) -> Quiver:
    verts = sorted(set(vertices))
    if not verts:
        raise FGToolError("a quiver needs at least one vertex")
    known = set(verts)
    out = []
    seen = set()
    for a in arrows:
        a = Arrow(*a)
        if a.id in seen:
            raise FGToolError(f"duplicate arrow id {a.id!r}")
        seen.add(a.id)
        for end in (a.source, a.target):
            if end not in known:
                raise UnknownVertex(f"arrow {a.id!r} uses unknown vertex {end!r}")
        out.append(a)
    return Quiver(tuple(verts), tuple(sorted(out)))


def topological_order(q: Quiver) -> list[str]:
    indeg = {v: 0 for v in q.vertices}
    out = q.out_arrows()
    for a in q.arrows:
        indeg[a.target] += 1
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in out[v]:
            indeg[a.target] -= 1
            if indeg[a.target] == 0:
                ready.append(a.target)
        ready.sort()
    if len(order) != len(q.vertices):
        raise CyclicQuiver("quiver has an oriented cycle")
    return order


def _require_acyclic(q: Quiver):
    topological_order(q)


def _require_no_parallel_arrows(q: Quiver):
    seen = {}
    for a in q.arrows:
        key = (a.source, a.target)
        if key in seen:
            raise ParallelArrows(f"arrows {seen[key]!r} and {a.id!r} are parallel")
        seen[key] = a.id


def _redundant_pairs(q: Quiver) -> set[tuple[str, str]]:
    """Pairs (a, b) joined by some directed path of length >= 2."""
    reach = q.reachability()
    out = set()
    for a in q.arrows:
        for b in q.vertices:
            if (a.target, b) in reach:
                out.add((a.source, b))
    return out


def check_ordered(q: Quiver) -> OrderedQuiver:
    """Validate ``q`` as an ordered quiver (a Hasse diagram)."""
    _require_acyclic(q)
    try:
        _require_no_parallel_arrows(q)
    except ParallelArrows as exc:
        raise NotOrdered(str(exc)) from None
    redundant = _redundant_pairs(q)
    for a in q.arrows:
        if (a.source, a.target) in redundant:
            raise NotOrdered(f"arrow {a.id!r} is parallel to a longer path")
    return OrderedQuiver(q.vertices, q.arrows)


def is_ordered(q: Quiver) -> bool:
    try:
        check_ordered(q)
    except FGToolError:
        return False
    return True


def is_completed(q: Quiver) -> bool:
    if not q.is_acyclic() or q.has_parallel_arrows():
        return False
    return q.reachability() == q.pairs()


@dataclass(frozen=True)
class DirectedPath:
    arrows: tuple[str, ...]
    source: str
    target: str

    def __len__(self):
        return len(self.arrows)


def enumerate_paths(q: Quiver, max_len: int | None = None) -> list[DirectedPath]:
    """All directed paths of length >= 1, ordered by length then arrow ids."""
    _require_acyclic(q)
    out_arrows = q.out_arrows()
    paths = []

    def extend(arrows, source, target):
        paths.append(DirectedPath(arrows, source, target))
        if max_len is not None and len(arrows) >= max_len:
            return
        for a in out_arrows[target]:
            extend(arrows + (a.id,), source, a.target)

    for a in q.arrows:
        extend((a.id,), a.source, a.target)
    paths.sort(key=lambda p: (len(p.arrows), p.arrows))
    return paths


def parallel_pairs(q: Quiver) -> list[tuple[DirectedPath, DirectedPath]]:
    groups = defaultdict(list)
    for p in enumerate_paths(q):
        groups[(p.source, p.target)].append(p)
    out = []
    for key in sorted(groups):
        out.extend(itertools.combinations(groups[key], 2))
    return out


def complete_quiver(q: Quiver) -> Quiver:
    """Add one arrow ``c:a>b`` for every pair joined by a path but not by an arrow."""
    _require_acyclic(q)
    _require_no_parallel_arrows(q)
    present = q.pairs()
    added = [
        Arrow(f"c:{a}>{b}", a, b) for (a, b) in sorted(q.reachability()) if (a, b) not in present
    ]
    return make_quiver(q.vertices, list(q.arrows) + added)


def order_quiver(q: Quiver) -> OrderedQuiver:
    """Delete every arrow parallel to a path of length >= 2."""
    _require_acyclic(q)
    _require_no_parallel_arrows(q)
    redundant = _redundant_pairs(q)
    kept = [a for a in q.arrows if (a.source, a.target) not in redundant]
    return check_ordered(make_quiver(q.vertices, kept))


# ---------------------------------------------------------------------------
# constructions between the three worlds


def pos_label(simplex: Iterable[str]) -> str:
    return POS_SEPARATOR.join(sorted(simplex))


def pos_of_complex(c: SimplicialComplex) -> Poset:
    labels = {s: pos_label(s) for s in c.simplexes}
    rels = [(labels[s], labels[t]) for s in c.simplexes for t in c.simplexes if s < t]
    return Poset(tuple(sorted(labels.values())), frozenset(rels))


def sim_of_poset(p: Poset) -> SimplicialComplex:
    return validate_complex(p.elements, (frozenset(ch) for ch in p.chains()))


def barycentric(c: SimplicialComplex) -> SimplicialComplex:
    return sim_of_poset(pos_of_complex(c))


def hasse_quiver(p: Poset) -> OrderedQuiver:
    arrows = [Arrow(f"{x}|{y}", x, y) for x, y in p.covers()]
    return check_ordered(make_quiver(p.elements, arrows))


def quiver_to_poset(q: Quiver) -> Poset:
    """Reachability order of an acyclic quiver."""
    _require_acyclic(q)
    return Poset(q.vertices, frozenset(q.reachability()))


def underlying_graph(q: Quiver) -> dict[str, list[tuple[str, Arrow]]]:
    """Undirected adjacency: vertex -> sorted (neighbour, arrow) pairs."""
    adj: dict[str, list[tuple[str, Arrow]]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        adj[a.source].append((a.target, a))
        if a.target != a.source:
            adj[a.target].append((a.source, a))
    for v in adj:
        adj[v].sort()
    return adj


def bfs_tree(vertices, adjacency, root):
    """Breadth-first spanning tree; returns (parent map, tree edge keys).

    ``adjacency`` maps a vertex to sorted (neighbour, edge key) pairs.
    """
    parent = {root: None}
    tree = set()
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, key in adjacency[v]:
            if w not in parent:
                parent[w] = (v, key)
                tree.add(key)
                queue.append(w)
    return parent, tree
