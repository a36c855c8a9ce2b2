"""Named complexes, posets and quivers used by the checks, tests and data files."""

from __future__ import annotations

import itertools

from .combinatorics import (
    Poset,
    Quiver,
    SimplicialComplex,
    complex_from_facets,
    make_poset,
    make_quiver,
    pos_of_complex,
)


def _arrows(pairs):
    return [(f"{s}_{t}", s, t) for s, t in pairs]


def _quiver(pairs) -> Quiver:
    verts = {v for pr in pairs for v in pr}
    return make_quiver(verts, _arrows(pairs))


# --- complexes -------------------------------------------------------------


def single_vertex() -> SimplicialComplex:
    return complex_from_facets([["a"]])


def edge() -> SimplicialComplex:
    return complex_from_facets([["a", "b"]])


def triangle_boundary() -> SimplicialComplex:
    return complex_from_facets([["a", "b"], ["b", "c"], ["a", "c"]])


def filled_triangle() -> SimplicialComplex:
    return complex_from_facets([["a", "b", "c"]])


def tetrahedron_boundary() -> SimplicialComplex:
    return complex_from_facets(itertools.combinations("abcd", 3))


def torus7() -> SimplicialComplex:
    """Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    facets = []
    for i in range(7):
        facets.append([str(i), str((i + 1) % 7), str((i + 3) % 7)])
        facets.append([str(i), str((i + 2) % 7), str((i + 3) % 7)])
    return complex_from_facets(facets)


def projective_plane6() -> SimplicialComplex:
    """Six-vertex real projective plane (half of the icosahedron)."""
    facets = [
        "123", "134", "145", "156", "162",
        "235", "346", "452", "563", "624",
    ]
    return complex_from_facets([list(f) for f in facets])


def test_complexes() -> dict[str, SimplicialComplex]:
    return {
        "triangle_boundary": triangle_boundary(),
        "filled_triangle": filled_triangle(),
        "tetrahedron_boundary": tetrahedron_boundary(),
        "torus7": torus7(),
        "projective_plane6": projective_plane6(),
    }


# --- posets ----------------------------------------------------------------


def chain_poset(n: int = 3) -> Poset:
    names = "abcdefghijklmnopqrstuvwxyz"[:n]
    return make_poset(names, zip(names, names[1:]))


def crown_poset() -> Poset:
    """The seven-element poset a<b'<d, c<b'<d, a<c'<d, b<c'<d, b<a'<d, c<a'<d."""
    rels = [
        ("a", "b'"), ("c", "b'"), ("a", "c'"), ("b", "c'"), ("b", "a'"), ("c", "a'"),
        ("b'", "d"), ("c'", "d"), ("a'", "d"),
    ]
    return make_poset(["a", "b", "c", "a'", "b'", "c'", "d"], rels)


def hexagon_poset() -> Poset:
    rels = [("a", "ab"), ("b", "ab"), ("b", "bc"), ("c", "bc"), ("c", "ca"), ("a", "ca")]
    return make_poset(["a", "b", "c", "ab", "bc", "ca"], rels)


def diamond_poset() -> Poset:
    return make_poset(["t", "l", "r", "b"], [("t", "l"), ("t", "r"), ("l", "b"), ("r", "b")])


def theorem3_posets() -> dict[str, Poset]:
    return {
        "chain": chain_poset(3),
        "diamond": diamond_poset(),
        "hexagon": hexagon_poset(),
        "crown_with_top": crown_poset(),
        "pos_torus7": pos_of_complex(torus7()),
        "pos_projective_plane6": pos_of_complex(projective_plane6()),
    }


# --- quivers ---------------------------------------------------------------


def hexagon_quiver() -> Quiver:
    """Six alternating arrows around a hexagon; its group is infinite cyclic."""
    return _quiver([("a", "ab"), ("b", "ab"), ("b", "bc"), ("c", "bc"), ("c", "ca"), ("a", "ca")])


def square_quiver() -> Quiver:
    """Square with one diagonal: BL->TL->TR->BR and BL->TR."""
    return _quiver([("BL", "TL"), ("TL", "TR"), ("TR", "BR"), ("BL", "TR")])


def diamond_split() -> tuple[Quiver, Quiver, Quiver]:
    """Diamond t->l->b, t->r->b cut into its two sides."""
    q = _quiver([("t", "l"), ("t", "r"), ("l", "b"), ("r", "b")])
    return q, q.subquiver(["t_l", "l_b"]), q.subquiver(["t_r", "r_b"])


def diamond_quiver() -> Quiver:
    return diamond_split()[0]


def example2() -> dict[str, Quiver]:
    """Twelve-arrow quiver cut along a vertical line, each half cut again.

    Sources L, T, B, R; middle UL, DL, UR, DR; sink C.
    """
    q = _quiver([
        ("L", "UL"), ("UL", "C"), ("L", "DL"), ("DL", "C"),
        ("T", "UL"), ("T", "UR"), ("B", "DL"), ("B", "DR"),
        ("R", "UR"), ("R", "DR"), ("UR", "C"), ("DR", "C"),
    ])
    sub = q.subquiver
    return {
        "Q": q,
        "Q1": sub(["L_UL", "UL_C", "L_DL", "DL_C", "T_UL", "B_DL"]),
        "Q2": sub(["T_UR", "B_DR", "R_UR", "R_DR", "UR_C", "DR_C"]),
        "Q11": sub(["L_DL", "DL_C", "B_DL"]),
        "Q12": sub(["L_UL", "UL_C", "T_UL"]),
        "Q21": sub(["R_DR", "DR_C", "B_DR"]),
        "Q22": sub(["R_UR", "UR_C", "T_UR"]),
    }


def example3() -> dict[str, Quiver]:
    """Two hubs u, v, each with an arrow to the four spokes s1..s4."""
    pairs = [(h, s) for h in "uv" for s in ("s1", "s2", "s3", "s4")]
    q = _quiver(pairs)

    def spokes(*names):
        return q.subquiver([f"{h}_{s}" for h in "uv" for s in names])

    return {
        "Q": q,
        "Q1": spokes("s1", "s2", "s3"),
        "Q2": spokes("s2", "s3", "s4"),
        "Q11": spokes("s2", "s3"),
        "Q12": spokes("s1", "s2"),
        "Q21": spokes("s2", "s3"),
        "Q22": spokes("s3", "s4"),
    }
