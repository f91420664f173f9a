import pytest

from spinalg import linalg
from spinalg.algebra import check_dual_invariance, check_invariance, conjugation_by_exp, make_spin_algebra
from spinalg.automorphism import commutes_with_plus, is_automorphism
from spinalg.errors import InvalidParameter, NotAutomorphism, RelationViolation
from spinalg.sampling import rng_for
from spinalg.scalar import I, RealScalar, Scalar
from spinalg.spin import (
    SAMPLE_KINDS,
    SpinAutFactors,
    bigrade_space,
    compose_spin_factors,
    decompose_spin_aut,
    dual_action,
    dual_invariant_catalog,
    gl2_aut,
    inner_aut,
    inner_aut_closed_form,
    inner_parameter_basis,
    inner_parameter_kernel_dim,
    j_aut,
    maximal_form_scaling,
    nev_aut,
    random_spin_factors,
    spin_aut_from_images,
    spin_invariant_catalog,
)

A = make_spin_algebra()


@pytest.mark.parametrize("kind", SAMPLE_KINDS)
def test_roundtrip_per_kind(kind):
    for k in range(6):
        f = random_spin_factors(rng_for(21, k), kind)
        op = compose_spin_factors(f)
        assert is_automorphism(op) and commutes_with_plus(op)
        back = decompose_spin_aut(op)
        assert back == f
        assert back.j_flag == f.j_flag
    if kind == "dressing":
        assert f.is_dressing()


def test_j_and_gl_shapes():
    j = j_aut()
    assert j(A.gen(1)) == A.gen(3) and j(A.gen(4)) == A.gen(2)
    assert j @ j == j.identity(A)
    g = gl2_aut([[1, I], [0, 2]])
    assert g(A.gen(1)) == A.gen(1) + A.gen(2).scale(I)
    assert g(A.gen(3)) == A.gen(3) + A.gen(4).scale(-I)
    assert decompose_spin_aut(j) == SpinAutFactors(j_flag=True)


def test_inner_closed_form_matches_conjugation():
    for k, b in enumerate(inner_parameter_basis()):
        a = b.scale(k + 1)
        assert inner_aut_closed_form(a) == inner_aut(a) == conjugation_by_exp(a)


def test_inner_parameters_are_unique():
    assert len(inner_parameter_basis()) == 12
    assert inner_parameter_kernel_dim() == 0


def test_parameter_validation():
    with pytest.raises(InvalidParameter):
        inner_aut(A.gen(1))  # not plus-real
    with pytest.raises(InvalidParameter):
        inner_aut(A.e(1, 2) + A.e(3, 4))  # central bigrades are excluded
    with pytest.raises(InvalidParameter):
        nev_aut(A.e(1, 3), A.zero())
    with pytest.raises(InvalidParameter):
        gl2_aut([[1, 2], [2, 4]])


def test_images_must_respect_relations():
    with pytest.raises(RelationViolation):
        spin_aut_from_images([A.gen(1) + A.gen(3), A.gen(2)])
    op = spin_aut_from_images([A.gen(2), A.gen(1)])
    assert decompose_spin_aut(op).gl == [[0, 1], [1, 0]]


def test_non_automorphism_rejected():
    op = gl2_aut([[1, 0], [0, 1]]).scale(2)
    with pytest.raises(NotAutomorphism):
        decompose_spin_aut(op)


def test_catalog_dimensions():
    dims = {k: v.dim for k, v in spin_invariant_catalog().items()}
    assert dims == {"B": 1, "M1": 15, "M2": 11, "M3": 5, "M4": 1, "M2∩Z": 3, "V": 11, "U": 7, "W": 9}
    ddims = {k: v.dim for k, v in dual_invariant_catalog().items()}
    assert ddims == {
        "Ann(M)": 1,
        "Ann(B)": 15,
        "Ann(B⊕M2)": 4,
        "Ann(B⊕M4)": 14,
        "Ann(Z)": 12,
        "Ann(B⊕V)": 4,
        "Ann(B⊕W)": 6,
    }


def test_invariance_under_samples_and_dressing_witness():
    primal, dual = spin_invariant_catalog(), dual_invariant_catalog()
    for k in range(8):
        op = compose_spin_factors(random_spin_factors(rng_for(22, k), "full"))
        inv = op.inverse()
        assert all(check_invariance(op, s) for s in primal.values())
        assert all(check_dual_invariance(inv, s) for s in dual.values())
    moving = inner_aut(A.e(1, 3) + A.e(2, 4))
    assert not check_invariance(moving, bigrade_space((1, 0)))


def test_dual_action_is_a_left_action():
    a = compose_spin_factors(random_spin_factors(rng_for(23, 0), "full"))
    b = compose_spin_factors(random_spin_factors(rng_for(23, 1), "full"))
    f = dual_invariant_catalog()["Ann(B⊕V)"].vectors[0]
    assert dual_action(a @ b, f) == dual_action(a, dual_action(b, f))


def test_maximal_form_scaling():
    assert maximal_form_scaling(gl2_aut([[2, 0], [0, 1]])) == RealScalar(4)
    assert maximal_form_scaling(gl2_aut([[I, 0], [0, 1]])) == RealScalar(1)
    assert maximal_form_scaling(j_aut()) == RealScalar(1)
    dressing = compose_spin_factors(random_spin_factors(rng_for(24), "dressing"))
    assert maximal_form_scaling(dressing) == RealScalar(1)
    m = [[Scalar(1, 1), Scalar(2)], [Scalar(0), Scalar(3, -1)]]
    assert maximal_form_scaling(gl2_aut(m)) == linalg.det(m).abs2()


def test_factor_json_roundtrip():
    f = random_spin_factors(rng_for(25), "j-composed")
    assert SpinAutFactors.from_json(f.to_json()) == f
    assert f.to_json()["j"] is True


def test_fast_check_agrees_with_exhaustive_multiplicativity():
    from spinalg.automorphism import is_multiplicative

    for kind in SAMPLE_KINDS:
        op = compose_spin_factors(random_spin_factors(rng_for(26), kind))
        assert is_automorphism(op) and is_multiplicative(op)
    assert not is_multiplicative(gl2_aut([[1, 0], [0, 1]]).scale(2))
