import pytest
from hypothesis import given, strategies as st

from nakayama_gp.poly import SparsePoly, identity, matmul, matpow

exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(lambda d: SparsePoly(2, d))


def test_zero_coefficients_dropped():
    p = SparsePoly(2, {(1, 0): 2, (0, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert not (p - p)


def test_arity_checked():
    with pytest.raises(ValueError):
        SparsePoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        SparsePoly.var(2, 3)


@pytest.mark.parametrize(
    "terms, text",
    [
        ({(2, 0): 1, (0, 1): 1}, "t1^2+t2"),
        ({(1, 1): 2, (3, 0): 1}, "t1^3+2*t1*t2"),
        ({(0, 0): 1}, "1"),
        ({(1, 0): -1, (0, 0): 3}, "-t1+3"),
        ({(2, 1): 1}, "t1^2*t2"),
    ],
)
def test_render(terms, text):
    assert str(SparsePoly(2, terms)) == text


def test_graded_lex_order():
    p = SparsePoly(2, {(0, 1): 1, (2, 0): 1, (1, 1): 1, (0, 2): 1, (1, 0): 1})
    assert [e for e, _ in p.monomials()] == [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1)]


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + 0 == p and p * 1 == p


@given(polys)
def test_json_round_trip(p):
    assert SparsePoly.from_json(2, p.to_json()) == p


def test_matpow_small():
    t1, t2 = SparsePoly.var(2, 1), SparsePoly.var(2, 2)
    one, zero = SparsePoly.one(2), SparsePoly.zero(2)
    N = ((zero, t2), (one, t1))
    assert matpow(N, 0) == identity(2, 2)
    assert matpow(N, 3) == matmul(N, matmul(N, N))
