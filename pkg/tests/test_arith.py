"""Prime fields, seeded randomness, univariate factorization."""

import itertools

import pytest

from fpcurves.arith import (
    PrimeField,
    SeededRng,
    UnivariatePoly,
    equal_degree_split,
    factor,
    factor_degrees,
    is_prime,
    rational_roots,
    squarefree_decomposition,
)

PRIMES = (2, 3, 5, 7, 101)


def test_is_prime():
    known = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-2, 50):
        assert is_prime(n) == (n in known)
    assert is_prime(10007) and is_prime(32003)
    assert not is_prime(10007 * 32003)


@pytest.mark.parametrize("p", PRIMES)
def test_field_ops(p):
    F = PrimeField(p)
    for a in range(p):
        assert F.reduce(a - p) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inverse(a)) == 1
            assert F.div(1, a) == F.inverse(a)
    for a in range(p):
        for b in range(1, p):
            assert F.mul(F.div(a, b), b) == a % p


def test_field_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        PrimeField(7).inverse(0)


def test_rng_deterministic():
    a = SeededRng(42)
    b = SeededRng(42)
    F = PrimeField(101)
    assert [a.randint(1000) for _ in range(20)] == [b.randint(1000) for _ in range(20)]
    assert a.field_elements(10, F) == b.field_elements(10, F)


def test_rng_substreams_are_stable_and_disjoint():
    root = SeededRng(7)
    s1 = root.substream("job", 1)
    s2 = root.substream("job", 2)
    again = SeededRng(7).substream("job", 1)
    draws1 = [s1.randint(10**6) for _ in range(8)]
    assert draws1 == [again.randint(10**6) for _ in range(8)]
    assert draws1 != [s2.randint(10**6) for _ in range(8)]
    # drawing from the root does not disturb substreams
    fresh = SeededRng(7)
    fresh.randint(99)
    s = fresh.substream("job", 1)
    assert [s.randint(10**6) for _ in range(8)] == draws1


def test_rng_field_elements():
    F = PrimeField(13)
    rng = SeededRng(0)
    vals = rng.field_elements(200, F)
    assert len(vals) == 200 and all(0 <= v < 13 for v in vals)
    assert rng.nonzero_field_element(F) != 0
    assert len(set(vals)) == 13


def _random_poly(field, degree, rng):
    coeffs = rng.field_elements(degree + 1, field)
    return UnivariatePoly(field, coeffs)


def test_divmod_and_gcd_properties():
    F = PrimeField(101)
    rng = SeededRng(5)
    for trial in range(40):
        sub = rng.substream(trial)
        f = _random_poly(F, sub.randint(6) + 1, sub)
        g = _random_poly(F, sub.randint(4) + 1, sub)
        if g.is_zero():
            continue
        q, r = f.divmod(g)
        assert (q * g + r).coeffs == f.coeffs
        assert r.degree < g.degree
        d = f.gcd(g)
        if not d.is_zero():
            assert f.divmod(d)[1].is_zero()
            assert g.divmod(d)[1].is_zero()


def test_derivative_product_rule():
    F = PrimeField(101)
    rng = SeededRng(17)
    f = _random_poly(F, 4, rng)
    g = _random_poly(F, 3, rng)
    lhs = (f * g).derivative()
    rhs = f.derivative() * g + f * g.derivative()
    assert lhs.coeffs == rhs.coeffs


def test_squarefree_decomposition_reconstructs():
    F = PrimeField(7)
    x1 = UnivariatePoly(F, (1, 1))
    x3 = UnivariatePoly(F, (3, 1))
    xx1 = UnivariatePoly(F, (1, 0, 1))
    f = x1 * x1 * xx1 * x3 * x3 * x3
    parts = squarefree_decomposition(f)
    prod = UnivariatePoly.one(F)
    for g, m in parts:
        assert g.gcd(g.derivative()).degree == 0
        for _ in range(m):
            prod = prod * g
    assert prod.monic().coeffs == f.monic().coeffs


@pytest.mark.parametrize("p", PRIMES)
def test_factor_reconstruction_vs_exhaustive_evaluation(p):
    """Factors multiply back to the input; roots agree with brute force."""
    F = PrimeField(p)
    rng = SeededRng(p)
    for trial in range(25):
        sub = rng.substream("fac", trial)
        f = _random_poly(F, sub.randint(7) + 1, sub)
        if f.degree < 1:
            continue
        fac = factor(f, sub)
        prod = UnivariatePoly(F, [f.coeffs[-1]])
        for g, mult in fac:
            assert g.coeffs[-1] == 1  # monic factors
            assert g.degree >= 1
            for _ in range(mult):
                prod = prod * g
        assert prod.coeffs == f.coeffs
        assert sum(g.degree * m for g, m in fac) == f.degree
        # linear factors <-> rational roots <-> exhaustive evaluation
        brute = sorted(a for a in range(p) if f.evaluate(a) == 0)
        from_factors = sorted(
            F.neg(g.coeffs[0]) for g, _ in fac if g.degree == 1
        )
        assert sorted(set(from_factors)) == brute
        assert sorted(rational_roots(f, sub)) == brute
        degs = factor_degrees(f, sub)
        assert sorted(degs) == sorted((g.degree, m) for g, m in fac)


def test_factor_irreducibles_have_no_proper_splitting():
    F = PrimeField(11)
    rng = SeededRng(8)
    for trial in range(10):
        sub = rng.substream(trial)
        f = _random_poly(F, 6, sub)
        if f.degree < 2:
            continue
        for g, _ in factor(f, sub):
            if g.degree < 2:
                continue
            # irreducible of degree d: no roots in F_p and x^(p^d) = x mod g
            assert all(g.evaluate(a) != 0 for a in range(11))
            xq = UnivariatePoly.x(F)
            for _ in range(g.degree):
                xq = xq.pow_mod(11, g)
            assert (xq - UnivariatePoly.x(F)).divmod(g)[1].is_zero()


def test_equal_degree_split_on_known_product():
    F = PrimeField(13)
    f = UnivariatePoly(F, (2, 1)) * UnivariatePoly(F, (5, 1))
    parts = equal_degree_split(f, 1, SeededRng(4))
    got = sorted(tuple(g.monic().coeffs) for g in parts)
    assert got == [(2, 1), (5, 1)]
