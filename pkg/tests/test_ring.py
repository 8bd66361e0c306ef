"""Multivariate polynomial rings, parsing, grading, graded matrices."""

import pytest

from fpcurves.arith import SeededRng
from fpcurves.ring import GradedFreeModule, GradedMatrix, Polynomial, Ring


@pytest.fixture
def R():
    return Ring(10007, 3, names=("x0", "x1", "x2"))


def test_ring_construction_validates():
    with pytest.raises(ValueError):
        Ring(4, 2)  # not prime
    r = Ring(5, 2, weights=(1, 2))
    assert r.weights == (1, 2)
    assert r.p == 5


def test_parse_str_round_trip(R):
    rng = SeededRng(12)
    for d in range(1, 5):
        f = R.random_form(d, rng.substream(d))
        assert R.parse(str(f)) == f
    g = R.parse("x0^2 - 2*x1*x2 + 3")
    assert str(R.parse(str(g))) == str(g)


def test_parse_errors(R):
    for bad in ("x0 +", "y0", "x0^", "2**x0", "(x0", "x0^-1"):
        with pytest.raises(ValueError):
            R.parse(bad)


def test_arithmetic_matches_evaluation(R):
    rng = SeededRng(3)
    f = R.random_form(2, rng.substream("f"))
    g = R.random_form(3, rng.substream("g"))
    pt = (5, 11, 4001)
    p = R.p
    assert (f + g).evaluate(pt) == (f.evaluate(pt) + g.evaluate(pt)) % p
    assert (f - g).evaluate(pt) == (f.evaluate(pt) - g.evaluate(pt)) % p
    assert (f * g).evaluate(pt) == (f.evaluate(pt) * g.evaluate(pt)) % p
    assert (3 * f).evaluate(pt) == 3 * f.evaluate(pt) % p
    assert (f**2).evaluate(pt) == pow(f.evaluate(pt), 2, p)


def test_product_degree_and_support(R):
    x0, x1, x2 = R.variables
    f = x0 * x1 + x2 * x2
    g = x0 - x1
    prod = f * g
    assert prod.degree == 3
    assert prod * R.zero == R.zero
    assert prod * R.one == prod
    assert (f * g) - (g * f) == R.zero


def test_monomials_count(R):
    for d in range(5):
        ms = R.monomials(d)
        assert len(ms) == (d + 1) * (d + 2) // 2
        assert all(R.wdeg(e) == d for e in ms)
        assert len(set(ms)) == len(ms)


def test_random_form_homogeneous(R):
    rng = SeededRng(9)
    f = R.random_form(4, rng)
    assert {R.wdeg(e) for _, e in f.terms} == {4}
    again = R.random_form(4, SeededRng(9))
    assert f == again


def test_weighted_degree():
    r = Ring(101, 2, names=("x", "y"), weights=(1, 3))
    f = r.parse("x^3 + y")
    assert {r.wdeg(e) for _, e in f.terms} == {3}
    assert f.degree == 3


def test_constant_and_from_terms(R):
    c = R.constant(10010)
    assert c == R.constant(3)
    f = R.from_terms([(2, (1, 1, 0)), (10006, (0, 0, 2))])
    assert str(f) == "2*x0*x1 - x2^2" or f == R.parse("2*x0*x1 - x2^2")
    assert R.from_terms([]) == R.zero


def test_graded_matrix_product_and_shapes(R):
    rng = SeededRng(21)
    tgt = GradedFreeModule(R, (0, 0))
    src = GradedFreeModule(R, (1, 1, 2))
    entries = tuple(
        tuple(R.random_form(src.twists[j] - tgt.twists[i], rng.substream(i, j)) for j in range(3))
        for i in range(2)
    )
    m = GradedMatrix(tgt, src, entries)
    assert m.nrows == 2 and m.ncols == 3
    mid = GradedFreeModule(R, (2, 2))
    entries2 = tuple(
        tuple(R.random_form(mid.twists[j] - src.twists[i], rng.substream("b", i, j)) for j in range(2))
        for i in range(3)
    )
    m2 = GradedMatrix(src, mid, entries2)
    prod = m * m2
    assert prod.nrows == 2 and prod.ncols == 2
    pt = (3, 7, 2)
    lhs = [
        [sum(m.entries[i][k].evaluate(pt) * m2.entries[k][j].evaluate(pt) for k in range(3)) % R.p
            for j in range(2)]
        for i in range(2)
    ]
    rhs = [[prod.entries[i][j].evaluate(pt) for j in range(2)] for i in range(2)]
    assert lhs == rhs


def test_graded_matrix_degree_mismatch_raises(R):
    tgt = GradedFreeModule(R, (0,))
    src = GradedFreeModule(R, (2,))
    with pytest.raises(ValueError):
        GradedMatrix(tgt, src, ((R.variable(0),),))  # degree-1 entry in a degree-2 slot
