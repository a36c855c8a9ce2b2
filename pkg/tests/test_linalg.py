import itertools
import math

import pytest
from hypothesis import given, strategies as st
from sympy import GF, ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix

from fgtool import linalg
from fgtool.errors import NonPrimeCharacteristic


def matrices(max_rows=6, max_cols=6, bound=20):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def check_snf(m):
    diag, left, right = linalg.smith_normal_form(m)
    rows, cols = len(m), len(m[0])
    assert len(diag) == min(rows, cols)
    assert abs(linalg.determinant(left)) == 1
    assert abs(linalg.determinant(right)) == 1
    product = linalg.matmul(linalg.matmul(left, m), right)
    for i in range(rows):
        for j in range(cols):
            assert product[i][j] == (diag[i] if i == j else 0)
    nonzero = [d for d in diag if d]
    assert all(d > 0 for d in nonzero)
    assert diag[: len(nonzero)] == nonzero
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    return diag


@given(matrices())
def test_snf_matches_sympy_invariant_factors(m):
    diag = check_snf(m)
    expected = [abs(int(x)) for x in invariant_factors(Matrix(m), domain=ZZ)]
    assert [d for d in diag if d] == [d for d in expected if d]


def _gcd_of_minors(m, k):
    g = 0
    for rows in itertools.combinations(range(len(m)), k):
        for cols in itertools.combinations(range(len(m[0])), k):
            g = math.gcd(g, linalg.determinant([[m[i][j] for j in cols] for i in rows]))
    return g


@given(matrices(4, 4, 9))
def test_snf_matches_determinantal_divisors(m):
    # d_1 ... d_k = gcd of k x k minors
    diag = check_snf(m)
    prod = 1
    for k, d in enumerate(diag, start=1):
        prod *= d
        assert prod == _gcd_of_minors(m, k)


def test_snf_edge_cases():
    assert linalg.smith_normal_form([[0, 0], [0, 0]])[0] == [0, 0]
    assert linalg.smith_normal_form([[2, 4], [6, 8]])[0] == [2, 4]
    diag, left, right = linalg.smith_normal_form([], cols=3)
    assert diag == [] and left == [] and right == linalg.identity(3)


@given(matrices(5, 5, 6), st.sampled_from([0, 2, 3, 5, 7]))
def test_rank_matches_sympy(m, p):
    if p == 0:
        expected = Matrix(m).rank()
    else:
        expected = DomainMatrix([[GF(p)(x) for x in r] for r in m], (len(m), len(m[0])), GF(p)).rank()
    assert linalg.rank_over(m, p) == expected
    sparse = [{j: x for j, x in enumerate(r) if x} for r in m]
    assert linalg.sparse_rank(sparse, p) == expected


@given(matrices(5, 5, 30))
def test_determinant_matches_sympy(m):
    n = min(len(m), len(m[0]))
    square = [r[:n] for r in m[:n]]
    assert linalg.determinant(square) == Matrix(square).det()


@pytest.mark.parametrize("p", [1, 4, 6, -3, 9])
def test_non_prime_characteristic_rejected(p):
    with pytest.raises(NonPrimeCharacteristic):
        linalg.rank_over([[1]], p)
