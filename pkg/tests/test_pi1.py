import random

import pytest
from hypothesis import given, settings

from fgtool import catalog
from fgtool.algebra import h1_integral
from fgtool.combinatorics import (
    complete_quiver,
    hasse_quiver,
    make_poset,
    make_quiver,
    order_quiver,
    sim_of_poset,
)
from fgtool.errors import (
    BadBasepoint,
    CoverViolation,
    CyclicQuiver,
    Disconnected,
    DisconnectedPiece,
    MalformedWalk,
    NotAnEdgePath,
    UnknownBasepoint,
)
from fgtool.groups import abelianization_invariants, invariant_suite, simplify_presentation
from fgtool.pi1 import (
    BACKWARD,
    FORWARD,
    EdgePath,
    Walk,
    check_phi_psi_roundtrip,
    edge_path_presentation,
    phi_walk_to_edgepath,
    psi_edgepath_to_walk,
    quiver_group,
    quiver_pi1_presentation,
    trivial_walk,
    van_kampen_assemble,
    van_kampen_data,
)

from .strategies import posets, quivers


def test_edge_path_presentation_shapes():
    ring = edge_path_presentation(catalog.triangle_boundary())
    assert (len(ring.generators), len(ring.relators)) == (1, 0)
    disk = edge_path_presentation(catalog.filled_triangle())
    assert (len(disk.generators), len(disk.relators)) == (1, 1)
    assert simplify_presentation(disk).is_trivial_form
    sphere = edge_path_presentation(catalog.tetrahedron_boundary())
    assert (len(sphere.generators), len(sphere.relators)) == (3, 4)
    assert set(invariant_suite(sphere).hom_counts.values()) == {1}


def test_edge_path_errors():
    with pytest.raises(UnknownBasepoint):
        edge_path_presentation(catalog.edge(), "z")
    with pytest.raises(Disconnected):
        edge_path_presentation(sim_of_poset(make_poset("ab")))


def test_quiver_presentations():
    hexagon = quiver_pi1_presentation(catalog.hexagon_quiver())
    assert (len(hexagon.generators), len(hexagon.relators)) == (1, 0)
    diamond = quiver_pi1_presentation(catalog.diamond_quiver())
    (g,) = diamond.generators
    assert [[x for x, _e in r] for r in diamond.relators] == [[g]]
    ex3 = quiver_pi1_presentation(catalog.example3()["Q"])
    assert simplify_presentation(ex3).is_free_form and len(simplify_presentation(ex3).generators) == 3


def test_quiver_presentation_errors():
    with pytest.raises(CyclicQuiver):
        quiver_pi1_presentation(make_quiver("ab", [("f", "a", "b"), ("g", "b", "a")]))
    with pytest.raises(Disconnected):
        quiver_pi1_presentation(make_quiver("abc", [("f", "a", "b")]))


def test_phi_examples():
    q = hasse_quiver(make_poset("ab", [("a", "b")]))
    f = Walk((("a|b", FORWARD),), "a", "b")
    assert phi_walk_to_edgepath(f, q) == EdgePath(("b", "a"))
    assert phi_walk_to_edgepath(trivial_walk("a"), q) == EdgePath(("a",))
    there_and_back = Walk((("a|b", FORWARD), ("a|b", BACKWARD)), "a", "a")
    assert phi_walk_to_edgepath(there_and_back, q) == EdgePath(("a", "b", "a"))
    with pytest.raises(MalformedWalk):
        phi_walk_to_edgepath(Walk((("a|b", BACKWARD),), "a", "b"), q)


def test_psi_examples():
    chain = catalog.chain_poset(3)
    assert psi_edgepath_to_walk(EdgePath(("b", "a")), chain) == Walk((("a|b", FORWARD),), "a", "b")
    assert psi_edgepath_to_walk(EdgePath(("a",)), chain) == trivial_walk("a")
    assert psi_edgepath_to_walk(EdgePath(("c", "a")), chain) == Walk(
        (("a|b", FORWARD), ("b|c", FORWARD)), "a", "c"
    )
    assert psi_edgepath_to_walk(EdgePath(("a", "c")), chain) == Walk(
        (("b|c", BACKWARD), ("a|b", BACKWARD)), "c", "a"
    )
    with pytest.raises(NotAnEdgePath):
        psi_edgepath_to_walk(EdgePath(("a", "b")), make_poset("ab"))


def test_hexagon_loop_maps_to_generator():
    p = catalog.hexagon_poset()
    g = quiver_group(hasse_quiver(p))
    (gen,) = g.presentation.generators
    loop = g.generator_loop(gen)
    back = psi_edgepath_to_walk(phi_walk_to_edgepath(loop, g.quiver), p)
    assert g.word_of(back) == ((gen, 1),)


def test_roundtrip_on_crown():
    report = check_phi_psi_roundtrip(catalog.crown_poset(), samples=20, seed=3)
    assert report.ok and report.inconclusive == 0


def test_van_kampen_examples():
    q, left, right = catalog.diamond_split()
    assert simplify_presentation(van_kampen_assemble(q, left, right)).is_trivial_form
    ex3 = catalog.example3()
    data = van_kampen_data(ex3["Q"], ex3["Q1"], ex3["Q2"])
    assert data.amalgamation == ((("1:v_s3", 1), ("2:v_s3", -1)),)
    simple = simplify_presentation(data.presentation)
    assert simple.is_free_form and len(simple.generators) == 3


def test_van_kampen_errors():
    q, left, right = catalog.diamond_split()
    with pytest.raises(CoverViolation):
        van_kampen_assemble(q, left, left)
    with pytest.raises(BadBasepoint):
        van_kampen_assemble(q, left, right, basepoint="l")
    split = q.subquiver(["t_l", "r_b"])
    with pytest.raises(DisconnectedPiece):
        van_kampen_assemble(q, split, q)


def test_van_kampen_rejects_chain_split_across_pieces():
    # w < x < s with w->x only in the first piece and x->s only in the second:
    # every arrow is covered, but the 2-simplex {w, x, s} is not
    q = make_quiver("wxs", [("wx", "w", "x"), ("xs", "x", "s")])
    q1 = make_quiver("wx", [("wx", "w", "x")])
    q2 = make_quiver("xs", [("xs", "x", "s")])
    with pytest.raises(CoverViolation):
        van_kampen_assemble(q, q1, q2)


@settings(max_examples=40)
@given(posets(min_size=2, max_size=7, connected=True))
def test_quiver_and_complex_groups_agree(p):
    a = invariant_suite(quiver_pi1_presentation(hasse_quiver(p)))
    b = invariant_suite(edge_path_presentation(sim_of_poset(p)))
    assert a == b
    assert (a.abelian_rank, a.torsion) == h1_integral(sim_of_poset(p))


@settings(max_examples=40)
@given(quivers(min_size=2, max_size=7, connected=True))
def test_order_and_completion_keep_the_group(q):
    reports = [invariant_suite(quiver_pi1_presentation(x)) for x in (q, order_quiver(q), complete_quiver(q))]
    assert reports[0] == reports[1] == reports[2]


@settings(max_examples=30)
@given(posets(min_size=2, max_size=6, connected=True))
def test_presentation_is_basepoint_independent(p):
    q = hasse_quiver(p)
    first = abelianization_invariants(quiver_pi1_presentation(q))
    for v in q.vertices:
        assert abelianization_invariants(quiver_pi1_presentation(q, v)) == first


def test_random_splits_match_direct_presentation():
    from fgtool.checks import check_vankampen

    summary = check_vankampen(seed=100, count=15)
    assert summary.ok, summary.lines()


def test_roundtrip_words_on_random_posets():
    from fgtool.checks import random_connected_poset

    for seed in range(5):
        p = random_connected_poset(random.Random(seed), 7)
        assert check_phi_psi_roundtrip(p, samples=5, seed=seed).ok
