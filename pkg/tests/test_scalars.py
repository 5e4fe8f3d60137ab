"""Field axioms and canonicalization of the exact cyclotomic scalars,
checked property-style against the numeric embedding."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from wqhopf.scalars import (Approx, Cyc, make_scalar, roots_of_unity,
                            scalar_from_json, scalar_to_json, sqrt_in_field)

CONDUCTORS = (1, 2, 3, 4, 5, 6, 8, 12, 16)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def cycs(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    coeffs = draw(st.lists(rationals, min_size=n, max_size=n))
    return Cyc(n, coeffs)


@given(cycs(), cycs(), cycs())
@settings(max_examples=150, deadline=None)
def test_ring_axioms(x, y, z):
    assert (x + y) - y == x
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + Cyc.rational(0) == x
    assert x * Cyc.rational(1) == x


@given(cycs())
@settings(max_examples=150, deadline=None)
def test_inverse(x):
    if x.is_zero():
        return
    assert x * x.inverse() == Cyc.rational(1)


@given(cycs(), cycs())
@settings(max_examples=150, deadline=None)
def test_embedding_homomorphism(x, y):
    assert abs((x + y).embed() - (x.embed() + y.embed())) < 1e-9
    assert abs((x * y).embed() - x.embed() * y.embed()) < 1e-9


@given(cycs())
@settings(max_examples=150, deadline=None)
def test_canonical_idempotent(x):
    c = x.canonical()
    assert c == x
    assert c.canonical().sort_key() == c.sort_key()


@given(cycs(), cycs())
@settings(max_examples=150, deadline=None)
def test_sort_key_separates(x, y):
    assert (x == y) == (x.sort_key() == y.sort_key())


@given(cycs())
@settings(max_examples=100, deadline=None)
def test_json_round_trip(x):
    assert scalar_from_json(scalar_to_json(x)) == x


@given(cycs())
@settings(max_examples=100, deadline=None)
def test_conjugate_against_embedding(x):
    assert abs(x.conjugate().embed() - x.embed().conjugate()) < 1e-9


def test_zeta_orders():
    for n in (1, 2, 3, 4, 5, 8, 12, 20):
        z = Cyc.zeta(n)
        assert z ** n == Cyc.rational(1)
        for k in range(1, n):
            assert z ** k != Cyc.rational(1) or n == 1


def test_lift_preserves_value():
    z3 = Cyc.zeta(3)
    assert z3.lift(12) == z3
    assert z3.lift(12) + Cyc.zeta(4) == Cyc.zeta(4) + z3


def test_galois_permutes_roots():
    z5 = Cyc.zeta(5)
    assert z5.galois(2) == z5 ** 2
    assert (z5 + z5 ** 4).galois(2) == z5 ** 2 + z5 ** 3


def test_sqrt_in_field_five():
    # zeta5 + zeta5^4 - zeta5^2 - zeta5^3 squares to 5
    r = sqrt_in_field(Cyc.rational(5), 5)
    assert r is not None
    assert r * r == Cyc.rational(5)


def test_sqrt_in_field_absent():
    assert sqrt_in_field(Cyc.rational(2), 5) is None


def test_sqrt_of_two_in_eighth_roots():
    r = sqrt_in_field(Cyc.rational(2), 8)
    assert r is not None and r * r == Cyc.rational(2)


def test_roots_of_unity_exhaustive():
    roots = roots_of_unity(8)
    assert len(set((r.n, r.c) for r in roots)) == len(roots)
    for r in roots:
        assert r ** 8 == Cyc.rational(1)


def test_make_scalar_canonicalizes():
    # zeta4^2 = -1 collapses into the rational slot
    x = make_scalar(4, [0, 0, 1, 0])
    assert x == Cyc.rational(-1)


def test_approx_matches_exact_arithmetic():
    x = Approx(0.5 + 0.25j)
    y = Approx(2)
    assert (x * y).embed() == (1 + 0.5j)
    assert (x + y - y).is_zero(1e-12) is False
    assert (x - x).is_zero()
    assert Approx.rational(Fraction(1, 4)).embed() == 0.25


def test_mixed_backend_rejected():
    import pytest
    with pytest.raises(Exception):
        Cyc.rational(1) + Approx(1)
