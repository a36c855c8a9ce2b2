"""Fundamental-group presentations of complexes and of quivers with parallel ideal.

Walks are stored left to right: ``steps[0]`` is taken first. Edge-paths keep
the right-to-left writing used for composition of edge-paths, so
``vertices[-1]`` is where an edge-path starts and ``vertices[0]`` where it
ends.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .combinatorics import (
    Arrow,
    Poset,
    Quiver,
    SimplicialComplex,
    bfs_tree,
    check_ordered,
    complete_quiver,
    enumerate_paths,
    hasse_quiver,
    make_quiver,
    order_quiver,
    parallel_pairs,
    quiver_to_poset,
    sim_of_poset,
    topological_order,
    underlying_graph,
)
from .errors import (
    BadBasepoint,
    CoverViolation,
    Disconnected,
    DisconnectedPiece,
    FGToolError,
    MalformedWalk,
    NotAnEdgePath,
    UnknownBasepoint,
)
from .groups import (
    Presentation,
    Word,
    abelian_image_in_lattice,
    cyclic_reduce,
    free_reduce,
    inverse,
    rewrite,
    tietze_reduce,
)

FORWARD = 1
BACKWARD = -1
DEFAULT_REWRITE_BUDGET = 20_000


@dataclass(frozen=True)
class Walk:
    steps: tuple[tuple[str, int], ...]
    source: str
    target: str

    @property
    def closed(self) -> bool:
        return self.source == self.target

    def __len__(self):
        return len(self.steps)

    def inverse(self) -> "Walk":
        return Walk(tuple((a, -d) for a, d in reversed(self.steps)), self.target, self.source)

    def then(self, other: "Walk") -> "Walk":
        if self.target != other.source:
            raise MalformedWalk("walks do not compose")
        return Walk(self.steps + other.steps, self.source, other.target)


def trivial_walk(vertex: str) -> Walk:
    return Walk((), vertex, vertex)


@dataclass(frozen=True)
class EdgePath:
    vertices: tuple[str, ...]

    def __post_init__(self):
        if not self.vertices:
            raise NotAnEdgePath("an edge-path has at least one vertex")

    @property
    def start(self) -> str:
        return self.vertices[-1]

    @property
    def end(self) -> str:
        return self.vertices[0]

    def travel_order(self) -> tuple[str, ...]:
        return tuple(reversed(self.vertices))


@dataclass(frozen=True)
class SpanningTree:
    root: str
    tree_edges: frozenset
    parent: dict = field(compare=False)

    def path_from_root(self, v):
        """Edge keys and vertices along the tree from the root to ``v``."""
        chain = []
        while self.parent[v] is not None:
            u, key = self.parent[v]
            chain.append((u, key, v))
            v = u
        chain.reverse()
        return chain


def walk_vertices(w: Walk, q: Quiver) -> list[str]:
    """Vertices visited by ``w``, in order; raises MalformedWalk if it does not chain."""
    arrows = {a.id: a for a in q.arrows}
    current = w.source
    out = [current]
    if w.source not in set(q.vertices):
        raise MalformedWalk(f"unknown start vertex {w.source!r}")
    for arrow_id, direction in w.steps:
        a = arrows.get(arrow_id)
        if a is None:
            raise MalformedWalk(f"unknown arrow {arrow_id!r}")
        if direction == FORWARD:
            start, end = a.source, a.target
        elif direction == BACKWARD:
            start, end = a.target, a.source
        else:
            raise MalformedWalk(f"bad direction {direction!r}")
        if start != current:
            raise MalformedWalk(f"step {arrow_id} starts at {start}, walk is at {current}")
        current = end
        out.append(current)
    if current != w.target:
        raise MalformedWalk(f"walk ends at {current}, not at {w.target}")
    return out


# ---------------------------------------------------------------------------
# edge-path group of a complex


@dataclass(frozen=True)
class EdgePathGroup:
    complex: SimplicialComplex
    tree: SpanningTree
    presentation: Presentation
    generator_of: dict = field(compare=False)  # frozenset edge -> generator name

    def letter(self, x, y) -> Word:
        """Word of the oriented edge x -> y (empty for tree edges)."""
        if x == y:
            return ()
        edge = frozenset((x, y))
        if edge not in self.complex.simplexes:
            raise NotAnEdgePath(f"{{{x}, {y}}} is not an edge")
        g = self.generator_of.get(edge)
        if g is None:
            return ()
        return ((g, 1),) if x < y else ((g, -1),)

    def word_of(self, path: EdgePath) -> Word:
        seq = path.travel_order()
        out = []
        for x, y in zip(seq, seq[1:]):
            out.extend(self.letter(x, y))
        return free_reduce(out)


def _default_basepoint(vertices, basepoint):
    if basepoint is None:
        return vertices[0]
    if basepoint not in set(vertices):
        raise UnknownBasepoint(f"basepoint {basepoint!r} is not a vertex")
    return basepoint


def _unique_names(candidates, prefix):
    if len(set(candidates)) == len(candidates):
        return list(candidates)
    return [f"{prefix}{i + 1}" for i in range(len(candidates))]


def edge_path_group(c: SimplicialComplex, basepoint: str | None = None) -> EdgePathGroup:
    if not c.connected:
        raise Disconnected("edge-path group needs a connected complex")
    root = _default_basepoint(c.vertices, basepoint)
    adj = {v: [(w, frozenset((v, w))) for w in ns] for v, ns in c.neighbours().items()}
    parent, tree_edges = bfs_tree(c.vertices, adj, root)
    tree = SpanningTree(root, frozenset(tree_edges), parent)
    free_edges = [(u, v) for u, v in c.faces(1) if frozenset((u, v)) not in tree_edges]
    names = _unique_names([f"{u}-{v}" for u, v in free_edges], "e")
    generator_of = {frozenset(e): n for e, n in zip(free_edges, names)}
    group = EdgePathGroup(c, tree, Presentation(tuple(names)), generator_of)
    relators = []
    for u, v, w in c.faces(2):
        relators.append(free_reduce(group.letter(u, v) + group.letter(v, w) + group.letter(w, u)))
    return EdgePathGroup(c, tree, Presentation(tuple(names), tuple(relators)), generator_of)


def edge_path_presentation(c: SimplicialComplex, basepoint: str | None = None) -> Presentation:
    """Presentation of the edge-path group: one generator per non-tree edge,
    one relator per 2-simplex."""
    return edge_path_group(c, basepoint).presentation


# ---------------------------------------------------------------------------
# quivers with the parallel ideal


@dataclass(frozen=True)
class QuiverGroup:
    quiver: Quiver
    tree: SpanningTree
    presentation: Presentation

    def letter(self, arrow_id: str, direction: int) -> Word:
        if arrow_id in self.tree.tree_edges:
            return ()
        return ((arrow_id, direction),)

    def word_of(self, w: Walk) -> Word:
        out = []
        for arrow_id, direction in w.steps:
            out.extend(self.letter(arrow_id, direction))
        return free_reduce(out)

    def path_word(self, arrows) -> Word:
        return self.word_of(Walk(tuple((a, FORWARD) for a in arrows), "", ""))

    def tree_walk(self, v: str) -> Walk:
        """Walk along the spanning tree from the root to ``v``."""
        arrows = {a.id: a for a in self.quiver.arrows}
        steps = []
        for u, arrow_id, x in self.tree.path_from_root(v):
            a = arrows[arrow_id]
            steps.append((arrow_id, FORWARD if (a.source, a.target) == (u, x) else BACKWARD))
        return Walk(tuple(steps), self.tree.root, v)

    def generator_loop(self, arrow_id: str) -> Walk:
        a = self.quiver.arrow(arrow_id)
        there = self.tree_walk(a.source)
        back = self.tree_walk(a.target).inverse()
        return there.then(Walk(((arrow_id, FORWARD),), a.source, a.target)).then(back)


def quiver_group(q: Quiver, basepoint: str | None = None) -> QuiverGroup:
    topological_order(q)
    if not q.is_connected():
        raise Disconnected("fundamental group needs a connected quiver")
    root = _default_basepoint(q.vertices, basepoint)
    adj = {v: [(w, a.id) for w, a in ns] for v, ns in underlying_graph(q).items()}
    parent, tree_edges = bfs_tree(q.vertices, adj, root)
    tree = SpanningTree(root, frozenset(tree_edges), parent)
    gens = tuple(a.id for a in q.arrows if a.id not in tree_edges)
    group = QuiverGroup(q, tree, Presentation(gens))
    relators = [
        free_reduce(group.path_word(p.arrows) + inverse(group.path_word(p2.arrows)))
        for p, p2 in parallel_pairs(q)
    ]
    return QuiverGroup(q, tree, Presentation(gens, tuple(relators)))


def quiver_pi1_presentation(q: Quiver, basepoint: str | None = None) -> Presentation:
    """Presentation of the fundamental group of ``q`` with its parallel ideal.

    Generators are the arrows outside a breadth-first spanning tree of the
    underlying graph; every pair of distinct parallel paths gives a relator.
    """
    return quiver_group(q, basepoint).presentation


# ---------------------------------------------------------------------------
# the maps between walks and edge-paths


def phi_walk_to_edgepath(w: Walk, q: Quiver) -> EdgePath:
    """Vertex sequence of a walk, read as an edge-path of Sim of the poset of ``q``."""
    return EdgePath(tuple(reversed(walk_vertices(w, q))))


def psi_edgepath_to_walk(e: EdgePath, p: Poset) -> Walk:
    """Replace each edge of ``e`` by the lexicographically least saturated chain
    between its ends, walked up or down the Hasse quiver."""
    seq = e.travel_order()
    known = set(p.elements)
    for v in seq:
        if v not in known:
            raise NotAnEdgePath(f"{v!r} is not an element of the poset")
    steps = []
    for x, y in zip(seq, seq[1:]):
        if x == y:
            continue
        if p.lt(x, y):
            chain = p.maximal_chains_between(x, y)[0]
            steps.extend((f"{a}|{b}", FORWARD) for a, b in zip(chain, chain[1:]))
        elif p.lt(y, x):
            chain = p.maximal_chains_between(y, x)[0]
            steps.extend((f"{a}|{b}", BACKWARD) for a, b in reversed(list(zip(chain, chain[1:]))))
        else:
            raise NotAnEdgePath(f"{x!r} and {y!r} are incomparable")
    return Walk(tuple(steps), seq[0], seq[-1])


# ---------------------------------------------------------------------------
# word problem, bounded


def _dehn_search(p: Presentation, w: Word, budget: int):
    """Breadth-first search over length-non-increasing relator substitutions.

    Returns True when ``w`` is shown trivial, None when the budget runs out.
    """
    pieces = set()
    for r in p.relators:
        for s in (r, inverse(r)):
            for i in range(len(s)):
                pieces.add(s[i:] + s[:i])
    pieces = sorted(pieces)
    start = cyclic_reduce(w)
    if not start:
        return True
    seen = {start}
    queue = deque([start])
    while queue and len(seen) < budget:
        cur = queue.popleft()
        n = len(cur)
        doubled = cur + cur
        for s in pieces:
            m = len(s)
            # replace a cyclic subword equal to a prefix u of s = u v by v^-1
            for k in range((m + 1) // 2, min(m, n) + 1):
                u = s[:k]
                rest = inverse(s[k:])
                for i in range(n):
                    if doubled[i : i + k] == u:
                        nxt = cyclic_reduce(doubled[i + k : i + n] + rest)
                        if not nxt:
                            return True
                        if len(nxt) <= n and nxt not in seen:
                            seen.add(nxt)
                            queue.append(nxt)
    return None


def decide_equal(p: Presentation, w1: Word, w2: Word, budget: int = DEFAULT_REWRITE_BUDGET):
    """True if ``w1 = w2`` in the group, False if they differ, None if undecided.

    Tietze simplification settles free and trivial groups exactly; otherwise
    the abelianization and small finite quotients can separate the words, and
    a bounded relator-rewriting search can identify them.
    """
    from .homcount import builtin_group, find_separating_hom

    w = free_reduce(tuple(w1) + inverse(w2))
    if not w:
        return True
    simple, subst = tietze_reduce(p)
    w = cyclic_reduce(rewrite(w, subst))
    if not w:
        return True
    if not simple.relators:
        return False
    if not abelian_image_in_lattice(simple, w):
        return False
    for name in ("C2", "C3", "S3", "S4"):
        if find_separating_hom(simple, w, builtin_group(name), budget=10**6) is not None:
            return False
    return _dehn_search(simple, w, budget)


# ---------------------------------------------------------------------------
# round-trip check of the two maps


@dataclass(frozen=True)
class SampleResult:
    walk: Walk
    edge_loop: EdgePath
    status: str  # "pass", "FAIL" or "INCONCLUSIVE"
    detail: str = ""


@dataclass(frozen=True)
class RoundtripReport:
    samples: tuple[SampleResult, ...]

    def count(self, status: str) -> int:
        return sum(1 for s in self.samples if s.status == status)

    @property
    def passed(self) -> int:
        return self.count("pass")

    @property
    def inconclusive(self) -> int:
        return self.count("INCONCLUSIVE")

    @property
    def failed(self) -> int:
        return self.count("FAIL")

    @property
    def ok(self) -> bool:
        return self.passed == len(self.samples)


def random_closed_walk(group: QuiverGroup, rng: random.Random, max_steps: int = 12) -> Walk:
    q = group.quiver
    adj = underlying_graph(q)
    root = group.tree.root
    steps = []
    v = root
    for _ in range(rng.randint(1, max_steps)):
        if not adj[v]:
            break
        w, a = rng.choice(adj[v])
        steps.append((a.id, FORWARD if a.source == v else BACKWARD))
        v = w
    out = Walk(tuple(steps), root, v)
    return out.then(group.tree_walk(v).inverse())


def random_edge_loop(group: EdgePathGroup, rng: random.Random, max_steps: int = 12) -> EdgePath:
    adj = group.complex.neighbours()
    root = group.tree.root
    seq = [root]
    for _ in range(rng.randint(1, max_steps)):
        if not adj[seq[-1]]:
            break
        seq.append(rng.choice(adj[seq[-1]]))
    back = [u for u, _key, _x in group.tree.path_from_root(seq[-1])]
    seq.extend(reversed(back))
    return EdgePath(tuple(reversed(seq)))


def check_phi_psi_roundtrip(
    p: Poset, samples: int = 50, seed: int = 0, budget: int = DEFAULT_REWRITE_BUDGET
) -> RoundtripReport:
    """Sample closed walks w of the Hasse quiver and closed edge-loops e of Sim(p);
    check psi(phi(w)) ~ w and phi(psi(e)) ~ e in the respective groups."""
    if not p.is_connected():
        raise Disconnected("round-trip check needs a connected poset")
    rng = random.Random(seed)
    q = hasse_quiver(p)
    qg = quiver_group(q)
    eg = edge_path_group(sim_of_poset(p), qg.tree.root)
    results = []
    for _ in range(samples):
        w = random_closed_walk(qg, rng)
        back = psi_edgepath_to_walk(phi_walk_to_edgepath(w, q), p)
        first = decide_equal(qg.presentation, qg.word_of(w), qg.word_of(back), budget)
        e = random_edge_loop(eg, rng)
        again = phi_walk_to_edgepath(psi_edgepath_to_walk(e, p), q)
        second = decide_equal(eg.presentation, eg.word_of(e), eg.word_of(again), budget)
        if first is False or second is False:
            status = "FAIL"
        elif first is None or second is None:
            status = "INCONCLUSIVE"
        else:
            status = "pass"
        detail = f"walk: {first}, edge-loop: {second}"
        results.append(SampleResult(w, e, status, detail))
    return RoundtripReport(tuple(results))


# ---------------------------------------------------------------------------
# Van Kampen


@dataclass(frozen=True)
class VanKampenData:
    presentation: Presentation
    intersection: Quiver
    pieces: tuple[Presentation, Presentation, Presentation]
    amalgamation: tuple[Word, ...]


def _least_path(q: Quiver, source: str, target: str) -> tuple[str, ...]:
    candidates = [p.arrows for p in enumerate_paths(q) if p.source == source and p.target == target]
    if not candidates:
        raise CoverViolation(f"no path {source} -> {target} in a piece")
    return min(candidates)


def _push_walk(walk_pairs, target_group: QuiverGroup) -> Word:
    """Word in ``target_group`` of a walk given as (source, target, direction) steps."""
    q = target_group.quiver
    out = []
    for a, b, direction in walk_pairs:
        arrow = q.arrow_between(a, b)
        arrows = (arrow.id,) if arrow is not None else _least_path(q, a, b)
        letters = target_group.path_word(arrows)
        out.extend(letters if direction == FORWARD else inverse(letters))
    return free_reduce(out)


def _prefixed(w: Word, prefix: str) -> Word:
    return tuple((prefix + g, e) for g, e in w)


def van_kampen_data(q: Quiver, q1: Quiver, q2: Quiver, basepoint: str | None = None) -> VanKampenData:
    q = check_ordered(q)
    if not q.is_connected():
        raise Disconnected("Van Kampen needs a connected quiver")
    for name, piece in (("first", q1), ("second", q2)):
        if not piece.is_connected():
            raise DisconnectedPiece(f"{name} piece is disconnected")
    full, c1, c2 = complete_quiver(q), complete_quiver(q1), complete_quiver(q2)
    if set(c1.vertices) | set(c2.vertices) != set(full.vertices) or c1.pairs() | c2.pairs() != full.pairs():
        raise CoverViolation("completions of the pieces do not cover the completed quiver")
    # the arrow cover alone is not enough: each chain (simplex) must lie in one piece
    p1, p2 = c1.pairs(), c2.pairs()
    for chain in quiver_to_poset(full).chains():
        if len(chain) < 3:
            continue
        links = set(zip(chain, chain[1:]))  # completions are transitive
        if not (links <= p1 or links <= p2):
            raise CoverViolation(f"chain {' < '.join(chain)} of the completed quiver lies in neither piece")
    shared = set(c1.vertices) & set(c2.vertices)
    if not shared:
        raise DisconnectedPiece("pieces do not meet")
    ids = {(a.source, a.target): a.id for a in c1.arrows}
    pairs = sorted(c1.pairs() & c2.pairs())
    q0 = order_quiver(make_quiver(shared, [(ids[pr], pr[0], pr[1]) for pr in pairs]))
    if not q0.is_connected():
        raise DisconnectedPiece("intersection quiver is disconnected")
    if basepoint is None:
        basepoint = q0.vertices[0]
    elif basepoint not in shared:
        raise BadBasepoint(f"basepoint {basepoint!r} is not a vertex of the intersection")
    g0 = quiver_group(q0, basepoint)
    g1 = quiver_group(q1, basepoint)
    g2 = quiver_group(q2, basepoint)
    gens = tuple("1:" + g for g in g1.presentation.generators) + tuple(
        "2:" + g for g in g2.presentation.generators
    )
    relators = [_prefixed(r, "1:") for r in g1.presentation.relators]
    relators += [_prefixed(r, "2:") for r in g2.presentation.relators]
    amalgamation = []
    for gen in g0.presentation.generators:
        loop = g0.generator_loop(gen)
        verts = walk_vertices(loop, q0)
        walk_pairs = []
        for (arrow_id, direction), x, y in zip(loop.steps, verts, verts[1:]):
            a, b = (x, y) if direction == FORWARD else (y, x)
            walk_pairs.append((a, b, direction))
        left = _prefixed(_push_walk(walk_pairs, g1), "1:")
        right = _prefixed(_push_walk(walk_pairs, g2), "2:")
        amalgamation.append(free_reduce(left + inverse(right)))
    presentation = Presentation(gens, tuple(relators + amalgamation))
    return VanKampenData(
        presentation, q0, (g0.presentation, g1.presentation, g2.presentation), tuple(amalgamation)
    )


def van_kampen_assemble(q: Quiver, q1: Quiver, q2: Quiver, basepoint: str | None = None) -> Presentation:
    """Free product of the pieces' groups amalgamated along the intersection's group."""
    return van_kampen_data(q, q1, q2, basepoint).presentation
