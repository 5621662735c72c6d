from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy.algebras.quaternion import Quaternion as SymQ

from quatlie.scalars import (I, J, K, ONE, ZERO, GaussianRational, Quaternion,
                             as_rational, format_rational, parse_rational,
                             q, quat_conj, quat_mul)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
quats = st.builds(Quaternion, rationals, rationals, rationals, rationals)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_unit_relations():
    assert quat_mul(I, J) == K
    assert quat_mul(J, I) == -K
    for u in (I, J, K):
        assert u * u == -ONE
    assert I * J * K == -ONE


def test_examples():
    p = Quaternion(1, 1, 0, 0)
    r = Quaternion(1, 0, 1, 0)
    assert p * r == Quaternion(1, 1, 1, 1)
    x = Quaternion(Fraction(2, 3), -5, 1, 7)
    assert x * ONE == x == ONE * x
    assert quat_conj(I) == -I
    assert quat_conj(ONE) == ONE
    assert quat_conj(Quaternion(2, 3, -1, 0)) == Quaternion(2, -3, 1, 0)


@given(quats, quats)
def test_mul_matches_sympy(p, r):
    sp = SymQ(*p.components()) * SymQ(*r.components())
    got = quat_mul(p, r)
    assert [Fraction(str(c)) for c in (sp.a, sp.b, sp.c, sp.d)] == list(got.components())


@given(quats, quats)
def test_real_part_commutes(p, r):
    assert (p * r).re == (r * p).re


@given(quats, quats)
def test_conj_reverses(p, r):
    assert (p * r).conj() == r.conj() * p.conj()


@given(quats, quats, quats)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(quats)
def test_norm(p):
    nq = p * p.conj()
    assert nq.is_real() and nq.re == p.norm2() >= 0
    if p:
        assert p * p.inverse() == ONE


@given(quats, quats)
def test_norm_multiplicative(p, r):
    assert (p * r).norm2() == p.norm2() * r.norm2()


@given(gaussians, gaussians)
def test_gaussian_embedding_is_homomorphism(a, b):
    assert (a + b).to_quaternion() == a.to_quaternion() + b.to_quaternion()
    assert (a * b).to_quaternion() == a.to_quaternion() * b.to_quaternion()
    assert a.conj().to_quaternion() == a.to_quaternion().conj()


@given(quats)
def test_complex_parts_roundtrip(p):
    z, w = p.complex_parts()
    assert Quaternion.from_complex_parts(z, w) == p
    # p = z + j w
    assert z.to_quaternion() + J * w.to_quaternion() == p


@given(rationals)
def test_rational_string_roundtrip(x):
    s = format_rational(x)
    assert "/" in s
    assert parse_rational(s) == x


def test_rational_format():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(2)) == "2/1"
    assert as_rational("6/4") == Fraction(3, 2)
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(quats)
def test_json_roundtrip(p):
    assert Quaternion.from_json(p.to_json()) == p


def test_json_order_and_errors():
    assert Quaternion(1, 2, 3, 4).to_json() == ["1/1", "2/1", "3/1", "4/1"]
    with pytest.raises(ValueError):
        Quaternion.from_json(["1", "2"])


def test_immutable_and_hashable():
    with pytest.raises(AttributeError):
        I.re = 3
    assert len({Quaternion(1), ONE, q(1)}) == 1
    assert str(-I + Quaternion(2, 0, 0, Fraction(1, 2))) == "2 - i + 1/2k"
    assert str(ZERO) == "0"
