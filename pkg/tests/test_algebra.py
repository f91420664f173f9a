import itertools

import pytest
from hypothesis import given, strategies as st

from spinalg import linalg
from spinalg.algebra import (
    AlgebraElement,
    center,
    commutator,
    exp_nilpotent,
    exp_nilpotent_op,
    ideal_power,
    ideal_power_by_grade,
    indices,
    left_mult,
    log_unipotent,
    make_grassmann,
    make_spin_algebra,
    mask_of,
    monomial_key,
    parse_monomial_key,
)
from spinalg.errors import NonNilpotentArgument, SizeLimit, UnsupportedForGrassmann
from spinalg.scalar import I, ONE, RealScalar, Scalar

SPIN = make_spin_algebra()


def word_product(alg, word):
    """Independent oracle: sort a word of generator indices by adjacent swaps.

    Returns ``(sign, mask)`` or ``(0, None)`` when a generator repeats.
    """
    w = list(word)
    sign = 1
    for i in range(len(w)):
        for j in range(len(w) - 1 - i):
            if w[j] > w[j + 1]:
                sign *= alg.commutation_sign(w[j], w[j + 1])
                w[j], w[j + 1] = w[j + 1], w[j]
    if len(set(w)) < len(w):
        return 0, None
    return sign, mask_of(w)


@pytest.mark.parametrize("alg", [SPIN, make_grassmann(4)], ids=lambda a: a.name)
def test_products_match_word_oracle(alg):
    for s in range(alg.dim):
        for t in range(alg.dim):
            sign, mask = word_product(alg, indices(s) + indices(t))
            expected = alg.zero() if sign == 0 else alg.mono(mask).scale(sign)
            assert alg.mono(s) * alg.mono(t) == expected


def test_spin_relations():
    e = SPIN.e
    assert e(2) * e(1) == -e(1, 2)
    assert e(3) * e(1) == e(1, 3)
    assert e(4) * e(3) == -e(3, 4)
    assert e(1) * e(1) == SPIN.zero()
    assert e(1, 2).plus() == e(3, 4)
    assert (e(1).scale(I)).plus() == e(3).scale(-I)
    assert commutator(e(1, 3), e(2)) == e(1, 2, 3).scale(2)


def test_plus_is_conjugate_linear_involution():
    x = SPIN.e(1).scale(Scalar(1, 2)) + SPIN.e(2, 4).scale(I)
    assert x.plus().plus() == x
    assert x.scale(I).plus() == x.plus().scale(-I)


def test_bigrade_additivity():
    for s, t in itertools.product(range(16), repeat=2):
        prod = SPIN.mono(s) * SPIN.mono(t)
        if prod:
            (p1, q1), (p2, q2) = SPIN.bigrade(s), SPIN.bigrade(t)
            assert set(prod.terms) == {s | t}
            assert SPIN.bigrade(s | t) == (p1 + p2, q1 + q2)


@pytest.mark.parametrize("alg", [SPIN, make_grassmann(3), make_grassmann(4)], ids=lambda a: a.name)
def test_ideal_powers_by_products_equal_degree_filtration(alg):
    for l in range(1, alg.n + 1):
        assert ideal_power(alg, l).masks() == ideal_power_by_grade(alg, l).masks()


def test_centers():
    assert sorted(monomial_key(m) for m in center(SPIN).masks()) == ["", "12", "1234", "34"]
    g3 = make_grassmann(3)
    assert sorted(monomial_key(m) for m in center(g3).masks()) == ["", "12", "123", "13", "23"]


def test_exp_and_log():
    x = SPIN.e(1, 3) + SPIN.e(2).scale(Scalar(RealScalar(0, 1)))
    ex = exp_nilpotent(x)
    assert ex * exp_nilpotent(-x) == SPIN.one()
    op = left_mult(x)
    assert exp_nilpotent_op(op) == left_mult(ex)
    assert log_unipotent(exp_nilpotent_op(op)) == op
    with pytest.raises(NonNilpotentArgument):
        exp_nilpotent(SPIN.one() + SPIN.e(1))


elements = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=16, max_size=16
).map(lambda cs: SPIN.from_coords([Scalar(a, b) for a, b in cs]))


@given(elements, elements, elements)
def test_associativity_and_plus_on_random_elements(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x * y).plus() == x.plus() * y.plus()


def test_json_roundtrip_and_keys():
    x = SPIN.e(1, 3).scale(Scalar(2, -1)) + SPIN.one()
    assert AlgebraElement.from_json(x.to_json()) == x
    assert x.to_json()["algebra"] == "spin"
    assert parse_monomial_key("1,10,11", 12) == mask_of((1, 10, 11))
    big = make_grassmann(11)
    y = big.e(2, 10).scale(3)
    assert list(y.to_json()["coeffs"]) == ["2,10"]
    assert AlgebraElement.from_json(y.to_json()) == y


def test_limits_and_unsupported():
    with pytest.raises(SizeLimit):
        make_grassmann(13)
    with pytest.raises(UnsupportedForGrassmann):
        make_grassmann(2).gen(1).plus()


def test_linear_operator_roundtrip():
    op = left_mult(SPIN.one() + SPIN.e(1, 2))
    assert op.inverse() @ op == op.identity(SPIN)
    assert op.rank() == 16
    assert type(op).from_json(op.to_json()) == op


def test_inertia_examples():
    one, zero = RealScalar(1), RealScalar(0)
    assert linalg.inertia(linalg.identity(4, one, zero)) == (4, 0, 0)
    diag = [[RealScalar(1 if i == j == 0 else (-1 if i == j else 0)) for j in range(4)] for i in range(4)]
    assert linalg.inertia(diag) == (1, 3, 0)
    assert linalg.inertia([[zero] * 4 for _ in range(4)]) == (0, 0, 4)
    assert linalg.inertia([[Scalar(0), I], [-I, Scalar(0)]]) == (1, 1, 0)


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9), st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_inertia_congruence_invariant(h_entries, p_entries):
    h = [[Scalar(h_entries[3 * i + j]) for j in range(3)] for i in range(3)]
    h = [[h[i][j] + h[j][i] for j in range(3)] for i in range(3)]
    p = [[Scalar(p_entries[3 * i + j], p_entries[3 * j + i]) for j in range(3)] for i in range(3)]
    if not linalg.det(p):
        return
    moved = linalg.matmul(linalg.conj_transpose(p), linalg.matmul(h, p))
    assert linalg.inertia(moved) == linalg.inertia(h)
    assert sum(linalg.inertia(h)[:2]) == linalg.rank(h)


def test_solve_and_singular():
    m = [[Scalar(1), Scalar(2)], [Scalar(2), Scalar(4)]]
    with pytest.raises(ZeroDivisionError):
        linalg.invert(m)
    assert linalg.rank(m) == 1
    assert len(linalg.nullspace(m)) == 1
    assert linalg.det([[ONE, I], [I, ONE]]) == Scalar(2)
