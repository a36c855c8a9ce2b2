"""Hypothesis strategies for small random structures."""

from hypothesis import strategies as st

from fgtool.combinatorics import make_poset, make_quiver

NAMES = "abcdefgh"


@st.composite
def dag_pairs(draw, min_size=1, max_size=7):
    n = draw(st.integers(min_size, max_size))
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(possible), unique=True)) if possible else []
    # relabel so the topological order is not always alphabetical
    perm = draw(st.permutations(NAMES[:n]))
    return list(perm), [(perm[i], perm[j]) for i, j in chosen]


@st.composite
def posets(draw, min_size=1, max_size=7, connected=False):
    labels, pairs = draw(dag_pairs(min_size, max_size))
    p = make_poset(labels, pairs)
    if connected:
        from hypothesis import assume

        assume(p.is_connected())
    return p


@st.composite
def quivers(draw, min_size=1, max_size=7, connected=False):
    labels, pairs = draw(dag_pairs(min_size, max_size))
    q = make_quiver(labels, [(x + y, x, y) for x, y in pairs])
    if connected:
        from hypothesis import assume

        assume(q.is_connected())
    return q
