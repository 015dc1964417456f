"""Euclidean domain layer: integers and prime-field polynomials."""

import pytest
from hypothesis import given, strategies as st

from adictower.exactalg.rings import (
    Ideal,
    RingError,
    integer_ring,
    polynomial_ring,
)

Z = integer_ring()
F2X = polynomial_ring(2)
F3X = polynomial_ring(3)


def test_integer_canonical_and_units():
    assert Z.canonical(-0) == 0
    assert Z.unit_normalize(-6) == (6, -1)
    assert Z.unit_normalize(6) == (6, 1)
    assert Z.is_unit(-1) and Z.is_unit(1)
    assert not Z.is_unit(2) and not Z.is_unit(0)


def test_integer_divmod_canonical_residues():
    q, r = Z.euclid_divmod(7, 3)
    assert (q, r) == (2, 1)
    q, r = Z.euclid_divmod(-7, 3)
    assert (q, r) == (-3, 2)
    q, r = Z.euclid_divmod(7, -3)
    assert (q, r) == (-2, 1)
    assert 0 <= r < 3


def test_integer_gcd_ext_frozen():
    g, s, t = Z.gcd_ext(12, 8)
    assert g == 4
    assert s * 12 + t * 8 == 4
    assert (g, s, t) == (4, 1, -1)
    assert Z.gcd_ext(0, 0) == (0, 0, 0)
    g, s, t = Z.gcd_ext(-4, 6)
    assert g == 2 and s * -4 + t * 6 == 2


def test_integer_parse_strictness():
    assert Z.parse("-17") == -17
    assert Z.parse("0") == 0
    assert Z.parse(" 2 ") == 2
    for bad in ("", "1.5", "x", "+3", "0x2", "1 2"):
        with pytest.raises(RingError):
            Z.parse(bad)


def test_integer_primality():
    assert Z.is_prime_element(2)
    assert Z.is_prime_element(-3)
    assert not Z.is_prime_element(6)
    assert not Z.is_prime_element(1)
    assert not Z.is_prime_element(0)


def test_poly_requires_prime_characteristic():
    with pytest.raises(RingError):
        polynomial_ring(4)
    with pytest.raises(RingError):
        polynomial_ring(1)


def test_poly_basic_arithmetic():
    x = (0, 1)
    one = (1,)
    assert F2X.add(x, x) == ()
    assert F2X.mul(x, x) == (0, 0, 1)
    assert F2X.add(one, x) == (1, 1)
    assert F3X.neg((1, 2)) == (2, 1)
    assert F2X.is_zero(())


def test_poly_divmod():
    # x^3 + x divided by x^2 + 1 over F_2: quotient x, remainder 0
    q, r = F2X.euclid_divmod((0, 1, 0, 1), (1, 0, 1))
    assert q == (0, 1)
    assert r == ()
    # x^2 + 1 divided by x over F_3: quotient x, remainder 1
    q, r = F3X.euclid_divmod((1, 0, 1), (0, 1))
    assert q == (0, 1)
    assert r == (1,)
    with pytest.raises(RingError):
        F2X.euclid_divmod((1,), ())


def test_poly_gcd_ext_frozen():
    # gcd(x^2 + x, x) = x over F_2 with cofactors (0, 1)
    g, s, t = F2X.gcd_ext((0, 1, 1), (0, 1))
    assert g == (0, 1)
    assert F2X.add(F2X.mul(s, (0, 1, 1)), F2X.mul(t, (0, 1))) == (0, 1)
    assert (s, t) == ((), (1,))


def test_poly_canonical_is_monic():
    g, unit = F3X.unit_normalize((1, 2))
    assert g == (2, 1)
    assert F3X.mul(unit, g) == (1, 2)


def test_poly_format_parse_roundtrip():
    cases = [(), (1,), (0, 1), (1, 1, 1), (2, 0, 1)]
    for c in cases:
        ring = F3X
        assert ring.parse(ring.format(c)) == c
    assert F2X.format((1, 1, 1)) == "x^2+x+1"
    assert F2X.format((0, 1)) == "x"
    assert F2X.format(()) == "0"


def test_poly_parse_rejects_noncanonical():
    for bad in ("x^1", "x^0", "1*x", "2x", "x+x", "3", "x^2+3x"):
        with pytest.raises(RingError):
            F2X.parse(bad)


def test_poly_irreducibility():
    assert F2X.is_prime_element((1, 1, 1))
    assert not F2X.is_prime_element((1, 0, 1))
    assert F2X.is_prime_element((0, 1))
    assert not F2X.is_prime_element((1,))
    assert F2X.is_prime_element((1, 1, 0, 1))


def test_poly_residues_count():
    residues = list(F2X.residues((1, 0, 1)))
    assert len(residues) == 4
    assert F2X.residue_count((1, 0, 1)) == 4
    assert F3X.residue_count((0, 1)) == 3


def test_ideal_rejects_degenerate_generators():
    with pytest.raises(RingError):
        Ideal(Z, 0)
    with pytest.raises(RingError):
        Ideal(Z, 1)
    with pytest.raises(RingError):
        Ideal(Z, -1)
    ideal = Ideal(Z, -2)
    assert ideal.generator == 2
    assert ideal.generator_power(3) == 8


@given(st.integers(-200, 200), st.integers(-200, 200).filter(lambda b: b != 0))
def test_integer_euclidean_property(a, b):
    q, r = Z.euclid_divmod(a, b)
    assert q * b + r == a
    assert 0 <= r < abs(b)


@given(st.integers(-60, 60), st.integers(-60, 60))
def test_integer_gcd_ext_property(a, b):
    g, s, t = Z.gcd_ext(a, b)
    assert s * a + t * b == g
    assert g >= 0
    if g != 0:
        assert a % g == 0 and b % g == 0


small_poly = st.lists(st.integers(0, 2), min_size=0, max_size=4).map(
    lambda cs: F3X.canonical(tuple(cs))
)


@given(small_poly, small_poly.filter(lambda p: p != ()))
def test_poly_euclidean_property(a, b):
    q, r = F3X.euclid_divmod(a, b)
    assert F3X.add(F3X.mul(q, b), r) == a
    assert F3X.norm(r) < F3X.norm(b)


@given(small_poly, small_poly)
def test_poly_gcd_ext_property(a, b):
    g, s, t = F3X.gcd_ext(a, b)
    assert F3X.add(F3X.mul(s, a), F3X.mul(t, b)) == g
    if g != ():
        assert g[-1] == 1
        assert F3X.rem(a, g) == ()
        assert F3X.rem(b, g) == ()
