from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinalg.scalar import HALF, I, ONE, SQRT2, ZERO, RealScalar, Scalar, as_scalar, real_sign, to_float

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
reals = st.builds(RealScalar, small, small)
scalars = st.builds(Scalar, reals, reals)


@given(scalars, scalars, scalars)
def test_field_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x and x * ONE == x
    assert x - x == ZERO


@given(scalars)
def test_inverse(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inv()
    else:
        assert x * x.inv() == ONE


@given(scalars, scalars)
def test_conjugation_is_a_field_automorphism(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert x.conj().conj() == x
    assert Scalar(x.abs2()) == x * x.conj()


@given(reals)
def test_real_sign_agrees_with_float_and_abs2_nonnegative(r):
    f = float(r)
    if abs(f) > 1e-9:
        assert real_sign(r) == (1 if f > 0 else -1)
    assert Scalar(r).abs2().sign() >= 0


def test_sqrt2_identities():
    assert SQRT2 * SQRT2 == as_scalar(2)
    assert (ONE + SQRT2) * (SQRT2 - ONE) == ONE
    assert SQRT2.inv() == SQRT2 * HALF
    assert I * I == -ONE
    assert I.conj() == -I


def test_sign_near_cancellation():
    # 3 - 2 sqrt2 = 0.1715..., 99 - 70 sqrt2 = 0.00505...
    assert real_sign(RealScalar(3, -2)) == 1
    assert real_sign(RealScalar(-99, 70)) == -1
    assert real_sign(RealScalar(0)) == 0


@given(scalars)
def test_json_roundtrip_and_hash(x):
    y = Scalar.from_json(x.to_json())
    assert y == x and hash(y) == hash(x)


def test_json_shape_uses_decimal_strings():
    x = Scalar(RealScalar(Fraction(1, 2), 3), RealScalar(-1, 0))
    assert x.to_json() == {"re": [["1", "2"], ["3", "1"]], "im": [["-1", "1"], ["0", "1"]]}


def test_mixed_equality_and_float():
    assert Scalar(RealScalar(2)) == RealScalar(2) == 2
    assert hash(Scalar(RealScalar(1, 1))) == hash(RealScalar(1, 1))
    z = to_float(I * (ONE + SQRT2))
    assert z.real == 0 and abs(z.imag - 2.41421356) < 1e-8
