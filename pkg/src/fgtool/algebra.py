"""Simplicial (co)homology in degree one and Hochschild HH^1 of incidence algebras.

Simplexes are oriented by the lexicographic order of their vertices, so the
face obtained by deleting the i-th vertex carries sign (-1)^i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .combinatorics import Poset, SimplicialComplex
from .errors import Disconnected, FGToolError


@dataclass(frozen=True)
class ChainComplexData:
    simplexes: tuple[tuple[tuple[str, ...], ...], ...]  # per dimension 0, 1, 2
    boundary1: list = field(compare=False)  # vertices x edges
    boundary2: list = field(compare=False)  # edges x triangles

    def dims(self) -> tuple[int, int, int]:
        return tuple(len(s) for s in self.simplexes)


def boundary_matrix(lower, upper) -> list[list[int]]:
    """Matrix of the boundary map from ``upper`` simplexes to ``lower`` ones."""
    index = {s: i for i, s in enumerate(lower)}
    m = linalg.zeros(len(lower), len(upper))
    for j, s in enumerate(upper):
        for i in range(len(s)):
            face = s[:i] + s[i + 1 :]
            m[index[face]][j] += -1 if i % 2 else 1
    return m


def chain_complex(c: SimplicialComplex) -> ChainComplexData:
    v, e, t = c.faces(0), c.faces(1), c.faces(2)
    return ChainComplexData((tuple(v), tuple(e), tuple(t)), boundary_matrix(v, e), boundary_matrix(e, t))


def h1_integral(c: SimplicialComplex) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion divisor chain of H_1(c; Z)."""
    if not c.connected:
        raise Disconnected("H_1 is computed for connected complexes only")
    cc = chain_complex(c)
    nv, ne, nt = cc.dims()
    d1, _, _ = linalg.smith_normal_form(cc.boundary1, cols=ne)
    d2, _, _ = linalg.smith_normal_form(cc.boundary2, cols=nt)
    rank1 = sum(1 for d in d1 if d)
    rank2 = sum(1 for d in d2 if d)
    return ne - rank1 - rank2, tuple(d for d in d2 if d > 1)


def h1_cohomology_dim(c: SimplicialComplex, characteristic: int = 0) -> int:
    """dim_k H^1(c; k): cocycles minus coboundaries, by exact ranks over k."""
    linalg.check_characteristic(characteristic)
    cc = chain_complex(c)
    nv, ne, nt = cc.dims()
    # delta^0 = transpose of boundary1, delta^1 = transpose of boundary2
    delta0 = linalg.transpose(cc.boundary1, ne) if nv else []
    delta1 = linalg.transpose(cc.boundary2, nt) if ne else []
    cocycles = ne - linalg.rank_over(delta1, characteristic)
    coboundaries = linalg.rank_over(delta0, characteristic)
    return cocycles - coboundaries


# ---------------------------------------------------------------------------
# incidence algebras


@dataclass(frozen=True)
class IncidenceAlgebra:
    """Algebra with basis e_xy for x <= y and e_xy e_yz = e_xz, other products 0."""

    poset: Poset
    basis: tuple[tuple[str, str], ...]
    products: dict = field(compare=False)  # (i, j) -> k for nonzero e_i e_j = e_k

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index(self) -> dict[tuple[str, str], int]:
        return {b: i for i, b in enumerate(self.basis)}

    def identity(self) -> dict[int, int]:
        idx = self.index()
        return {idx[(x, x)]: 1 for x in self.poset.elements}

    def multiply(self, u: dict, v: dict) -> dict:
        """Product of two elements given as sparse coefficient dicts."""
        out: dict[int, int] = {}
        for i, a in u.items():
            for j, b in v.items():
                k = self.products.get((i, j))
                if k is not None:
                    out[k] = out.get(k, 0) + a * b
        return {k: x for k, x in out.items() if x}

    def is_associative(self) -> bool:
        # nonzero triple products, bracketed both ways, must coincide
        starting: dict[int, list[tuple[int, int]]] = {}
        for (i, j), k in self.products.items():
            starting.setdefault(i, []).append((j, k))
        left = {}
        for (i, j), k in self.products.items():
            for l, m in starting.get(k, ()):
                left[(i, j, l)] = m
        right = {}
        for (j, l), m in self.products.items():
            for i in range(self.dimension):
                n = self.products.get((i, m))
                if n is not None:
                    right[(i, j, l)] = n
        return left == right


def incidence_algebra_build(p: Poset) -> IncidenceAlgebra:
    basis = tuple(p.intervals())
    idx = {b: i for i, b in enumerate(basis)}
    by_start: dict[str, list[tuple[str, str]]] = {}
    for b in basis:
        by_start.setdefault(b[0], []).append(b)
    products = {}
    for (x, y) in basis:
        for (_, z) in by_start[y]:
            products[(idx[(x, y)], idx[(y, z)])] = idx[(x, z)]
    alg = IncidenceAlgebra(p, basis, products)
    if not alg.is_associative():
        raise FGToolError("incidence algebra multiplication is not associative")
    return alg


def center_dimension(alg: IncidenceAlgebra, characteristic: int = 0) -> int:
    """dim of {z : z b = b z for every basis element b}."""
    n = alg.dimension
    rows = []
    for b in range(n):
        # coefficient of e_c in (z e_b - e_b z), as a linear form in z
        eqs: dict[int, dict[int, int]] = {}
        for (i, j), k in alg.products.items():
            if j == b:
                eqs.setdefault(k, {})[i] = eqs.setdefault(k, {}).get(i, 0) + 1
            if i == b:
                eqs.setdefault(k, {})[j] = eqs.setdefault(k, {}).get(j, 0) - 1
        rows.extend(eq for eq in eqs.values() if any(eq.values()))
    return n - linalg.sparse_rank(rows, characteristic)


def derivation_equations(alg: IncidenceAlgebra):
    """Leibniz equations D(ab) = D(a) b + a D(b) over all basis pairs (a, b).

    Unknown ``a * n + c`` is the coefficient of e_c in D(e_a). Equations whose
    three terms all vanish identically are skipped.
    """
    n = alg.dimension
    basis = alg.basis
    idx = alg.index()
    var = lambda a, c: a * n + c  # noqa: E731
    ending: dict[str, list[int]] = {}
    starting: dict[str, list[int]] = {}
    for i, (x, y) in enumerate(basis):
        ending.setdefault(y, []).append(i)
        starting.setdefault(x, []).append(i)
    for a, (x, y) in enumerate(basis):
        for b, (z, w) in enumerate(basis):
            ab = alg.products.get((a, b))
            eqs: dict[int, dict[int, int]] = {}

            def add(c, v, coef):
                row = eqs.setdefault(c, {})
                row[v] = row.get(v, 0) + coef
                if not row[v]:
                    del row[v]

            if ab is not None:
                for c in range(n):
                    add(c, var(ab, c), 1)
            # (D(a) b)_c: coefficient of e_{sz} in D(a) contributes to c = e_{sw}
            for d in ending.get(z, ()):
                s = basis[d][0]
                add(idx[(s, w)], var(a, d), -1)
            # (a D(b))_c: coefficient of e_{yt} in D(b) contributes to c = e_{xt}
            for d in starting.get(y, ()):
                t = basis[d][1]
                add(idx[(x, t)], var(b, d), -1)
            for row in eqs.values():
                if row:
                    yield row


def derivation_dimension(alg: IncidenceAlgebra, characteristic: int = 0) -> int:
    n = alg.dimension
    return n * n - linalg.sparse_rank(derivation_equations(alg), characteristic)


def hh1_dimension(p: Poset, characteristic: int = 0) -> int:
    """dim HH^1 = dim Der(A) - dim Inn(A), with dim Inn(A) = dim A - dim Z(A)."""
    linalg.check_characteristic(characteristic)
    if not p.is_connected():
        raise Disconnected("HH^1 is computed for connected posets only")
    alg = incidence_algebra_build(p)
    inner = alg.dimension - center_dimension(alg, characteristic)
    return derivation_dimension(alg, characteristic) - inner
