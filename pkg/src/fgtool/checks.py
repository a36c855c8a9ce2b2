"""Randomized and fixed-case harnesses comparing the two sides of each theorem.

Every harness is a pure function of its arguments: case ``i`` uses the seed
``seed + i``, so a failing case can be replayed on its own.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import h1_cohomology_dim, h1_integral, hh1_dimension
from .combinatorics import (
    Poset,
    Quiver,
    complete_quiver,
    hasse_quiver,
    make_poset,
    make_quiver,
    order_quiver,
    pos_of_complex,
    sim_of_poset,
    barycentric,
)
from .errors import FGToolError
from .groups import abelianization_invariants, hom_kplus_dimension, invariant_suite
from .pi1 import (
    check_phi_psi_roundtrip,
    edge_path_presentation,
    phi_walk_to_edgepath,
    psi_edgepath_to_walk,
    quiver_pi1_presentation,
    van_kampen_assemble,
    Walk,
    FORWARD,
)

CHARACTERISTICS = (0, 2, 3)
NAMES = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class CaseResult:
    label: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckSummary:
    name: str
    cases: tuple[CaseResult, ...]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.ok)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.cases)

    def lines(self) -> list[str]:
        out = [f"{'ok  ' if c.ok else 'FAIL'} {c.label}: {c.detail}" for c in self.cases]
        out.append(f"{self.name}: {self.passed}/{len(self.cases)} matches")
        return out


# ---------------------------------------------------------------------------
# random structures


def _random_dag_pairs(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Index pairs i -> j of a random DAG on n nodes.

    Mostly layered: nodes get levels and arrows join consecutive levels, with
    a few level-skipping arrows. Dense random DAGs almost always have
    contractible order complexes, so layering is what produces loops.
    """
    if rng.random() < 0.25:
        density = rng.uniform(0.15, 0.6)
        return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    levels = rng.randint(2, min(4, n))
    level = sorted(list(range(levels)) + [rng.randrange(levels) for _ in range(n - levels)])
    adjacent = rng.uniform(0.35, 0.8)
    skip = rng.uniform(0.0, 0.2)
    pairs = []
    for i in range(n):
        for j in range(n):
            gap = level[j] - level[i]
            if gap == 1 and rng.random() < adjacent or gap > 1 and rng.random() < skip:
                pairs.append((i, j))
    return pairs


def random_connected_poset(rng: random.Random, max_size: int, min_size: int = 2) -> Poset:
    while True:
        n = rng.randint(min(min_size, max_size), max_size)
        labels = rng.sample(NAMES, n)
        rels = [(labels[i], labels[j]) for i, j in _random_dag_pairs(rng, n)]
        p = make_poset(labels, rels)
        if p.is_connected():
            return p


def random_quiver(rng: random.Random, max_size: int, min_size: int = 2) -> Quiver:
    """Connected acyclic quiver without parallel arrows (not necessarily ordered)."""
    while True:
        n = rng.randint(min(min_size, max_size), max_size)
        labels = rng.sample(NAMES, n)
        arrows = [(labels[i] + labels[j], labels[i], labels[j]) for i, j in _random_dag_pairs(rng, n)]
        q = make_quiver(labels, arrows)
        if q.is_connected():
            return q


def random_split(rng: random.Random, q: Quiver, attempts: int = 200):
    """Two subquivers satisfying the Van Kampen hypotheses, or None."""
    ids = [a.id for a in q.arrows]
    for _ in range(attempts):
        first, second = [], []
        for i in ids:
            r = rng.random()
            if r < 0.4:
                first.append(i)
            elif r < 0.8:
                second.append(i)
            else:
                first.append(i)
                second.append(i)
        if not first or not second:
            continue
        q1, q2 = q.subquiver(first), q.subquiver(second)
        try:
            van_kampen_assemble(q, q1, q2)
        except FGToolError:
            continue
        return q1, q2
    return None


# ---------------------------------------------------------------------------
# harnesses


def _compare(reports) -> tuple[bool, str]:
    first = reports[0]
    for other in reports[1:]:
        diff = first.differences(other)
        if diff:
            return False, "DISTINGUISHED by " + ", ".join(diff)
    return True, f"invariant suites equal (rank {first.abelian_rank}, torsion {list(first.torsion)})"


def theorem2_case(p: Poset) -> CaseResult:
    quiver_side = invariant_suite(quiver_pi1_presentation(hasse_quiver(p)))
    complex_side = invariant_suite(edge_path_presentation(sim_of_poset(p)))
    ok, detail = _compare([quiver_side, complex_side])
    return CaseResult(f"{len(p)} elements", ok, detail)


def check_theorem2(seed: int = 1, count: int = 25, max_size: int = 8) -> CheckSummary:
    cases = []
    for i in range(count):
        p = random_connected_poset(random.Random(seed + i), max_size)
        r = theorem2_case(p)
        cases.append(CaseResult(f"seed {seed + i}, {r.label}", r.ok, r.detail))
    return CheckSummary("theorem2", tuple(cases))


def complex_case(name, c) -> CaseResult:
    reports = [
        invariant_suite(edge_path_presentation(c)),
        invariant_suite(edge_path_presentation(barycentric(c))),
        invariant_suite(quiver_pi1_presentation(hasse_quiver(pos_of_complex(c)))),
    ]
    ok, detail = _compare(reports)
    return CaseResult(name, ok, detail)


def theorem3_case(label: str, p: Poset, characteristic: int) -> CaseResult:
    inv = abelianization_invariants(quiver_pi1_presentation(hasse_quiver(p)))
    expected = hom_kplus_dimension(inv, characteristic)
    got = hh1_dimension(p, characteristic)
    return CaseResult(
        f"{label}, char {characteristic}",
        got == expected,
        f"HH^1 dim {got}, Hom(pi_1, k+) dim {expected}",
    )


def check_theorem3(seed: int = 1, count: int = 10, max_size: int = 7, characteristics=CHARACTERISTICS) -> CheckSummary:
    cases = []
    for i in range(count):
        p = random_connected_poset(random.Random(seed + i), max_size)
        for k in characteristics:
            cases.append(theorem3_case(f"seed {seed + i} ({len(p)} elements)", p, k))
    return CheckSummary("theorem3", tuple(cases))


def theorem4_case(q: Quiver) -> CaseResult:
    reports = [
        invariant_suite(quiver_pi1_presentation(q)),
        invariant_suite(quiver_pi1_presentation(order_quiver(q))),
        invariant_suite(quiver_pi1_presentation(complete_quiver(q))),
    ]
    ok, detail = _compare(reports)
    return CaseResult(f"{len(q.vertices)} vertices, {len(q.arrows)} arrows", ok, detail)


def check_theorem4(seed: int = 1, count: int = 25, max_size: int = 8) -> CheckSummary:
    cases = []
    for i in range(count):
        q = random_quiver(random.Random(seed + i), max_size)
        r = theorem4_case(q)
        cases.append(CaseResult(f"seed {seed + i}, {r.label}", r.ok, r.detail))
    return CheckSummary("theorem4", tuple(cases))


def psi_phi_on_arrows(p: Poset) -> bool:
    """psi(phi(f)) == f exactly, for every arrow f of the Hasse quiver."""
    q = hasse_quiver(p)
    for a in q.arrows:
        w = Walk(((a.id, FORWARD),), a.source, a.target)
        if psi_edgepath_to_walk(phi_walk_to_edgepath(w, q), p) != w:
            return False
    return True


def check_roundtrip(seed: int = 1, count: int = 10, max_size: int = 8, samples: int = 10) -> CheckSummary:
    cases = []
    for i in range(count):
        p = random_connected_poset(random.Random(seed + i), max_size)
        exact = psi_phi_on_arrows(p)
        report = check_phi_psi_roundtrip(p, samples=samples, seed=seed + i)
        ok = exact and report.ok
        detail = (
            f"arrows exact: {exact}; loops {report.passed}/{len(report.samples)} pass, "
            f"{report.inconclusive} inconclusive, {report.failed} failed"
        )
        cases.append(CaseResult(f"seed {seed + i} ({len(p)} elements)", ok, detail))
    return CheckSummary("roundtrip", tuple(cases))


def check_vankampen(seed: int = 1, count: int = 10, max_size: int = 7) -> CheckSummary:
    """Random ordered quivers cut into two pieces; amalgam vs direct presentation."""
    cases = []
    i = 0
    while len(cases) < count and i < 50 * count:
        rng = random.Random(seed + i)
        i += 1
        q = order_quiver(random_quiver(rng, max_size, min_size=3))
        split = random_split(rng, q)
        if split is None:
            continue
        q1, q2 = split
        ok, detail = _compare(
            [invariant_suite(quiver_pi1_presentation(q)), invariant_suite(van_kampen_assemble(q, q1, q2))]
        )
        cases.append(CaseResult(f"seed {seed + i - 1}, {len(q.arrows)} arrows", ok, detail))
    return CheckSummary("vankampen", tuple(cases))


def universal_coefficients_case(name, c, characteristic) -> CaseResult:
    got = h1_cohomology_dim(c, characteristic)
    expected = hom_kplus_dimension(h1_integral(c), characteristic)
    return CaseResult(f"{name}, char {characteristic}", got == expected, f"H^1 dim {got}, predicted {expected}")


CHECKS = {
    "theorem2": check_theorem2,
    "theorem3": check_theorem3,
    "theorem4": check_theorem4,
    "roundtrip": check_roundtrip,
    "vankampen": check_vankampen,
}
