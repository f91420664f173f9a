import pytest

from spinalg import linalg
from spinalg.algebra import DualFunctional, LinearOperator, make_spin_algebra, mask_of
from spinalg.errors import DependentInjection, InvalidParameter, NotCausal
from spinalg.geometry import (
    OMEGA0,
    MaximalForm,
    PauliMap,
    canonical_orientation,
    clifford_check,
    conformal_action_check,
    default_pauli_injection,
    dirac_adjoint,
    dirac_gram_scan,
    dirac_subspaces,
    gamma,
    hilbert_adjoint,
    inner_product,
    is_causal,
    metric_G,
    psd_check,
    signature,
    spacetime_metric,
    transformed_pauli_map,
)
from spinalg.hopf import counit
from spinalg.sampling import rng_for
from spinalg.scalar import I, ONE, SQRT2, ZERO, RealScalar, Scalar
from spinalg.spin import compose_spin_factors, gl2_aut, maximal_form_scaling, random_spin_factors

A = make_spin_algebra()
R = RealScalar
ETA = [[R(1 if a == b == 0 else (-1 if a == b else 0)) for b in range(4)] for a in range(4)]
E0 = (R(1), R(0), R(0), R(0))


def test_signature_examples():
    assert signature(linalg.identity(4, R(1), R(0))) == (4, 0, 0)
    assert signature(ETA) == (1, 3, 0)
    assert signature([[R(0)] * 4 for _ in range(4)]) == (0, 0, 4)


def test_orientation_is_the_top_monomial():
    assert canonical_orientation() == OMEGA0
    assert canonical_orientation().positive


def test_metric_G_is_eta_and_linear():
    g = metric_G(OMEGA0)
    assert g == [[Scalar(x) for x in row] for row in ETA]
    g2 = metric_G(OMEGA0.scaled(2))
    assert all(g2[a][b] == g[a][b] * 2 for a in range(4) for b in range(4))
    flipped = metric_G(MaximalForm(R(-1)))
    assert signature(flipped) == (3, 1, 0)


def test_counit_bridge_and_bigrades():
    sigma = default_pauli_injection()
    m2 = {m for m in range(16) if bin(m).count("1") >= 2}
    for s, op in zip(sigma.injection, sigma.operators):
        for m in range(16):
            assert counit(op.cols[m]) == s.terms.get(m, ZERO)
        assert set(op(OMEGA0.omega).terms) <= m2


def test_spacetime_metric_default():
    met = spacetime_metric()
    assert [list(r) for r in met.g] == ETA
    assert linalg.matmul([list(r) for r in met.g], [list(r) for r in met.g_inv]) == linalg.identity(4, R(1), R(0))
    half = spacetime_metric(None, OMEGA0.scaled(R(0, 1)))
    assert half.g[1][1] == R(0, -1)


def test_user_injections():
    s = default_pauli_injection().injection
    swapped = PauliMap.from_injection([s[1], s[0], s[2], s[3]])
    met = spacetime_metric(swapped)
    assert met.g[0][0] == R(-1) and met.g[1][1] == R(1)
    with pytest.raises(DependentInjection):
        PauliMap.from_injection([s[0], s[0], s[2], s[3]])
    f14 = DualFunctional.dual_basis(A, mask_of((1, 4)))
    with pytest.raises(InvalidParameter):
        PauliMap.from_injection([f14, s[1], s[2], s[3]])
    with pytest.raises(InvalidParameter):
        PauliMap.from_injection([DualFunctional.dual_basis(A, 0), s[1], s[2], s[3]])


def test_clifford_default_and_null_square():
    r = clifford_check()
    assert r["pass"] and r["checked"] == 80
    dp, dm = dirac_subspaces()
    assert dp.dim == dm.dim == 4
    assert {A.plus_monomial(m)[1] for m in dp.masks()} == dm.masks()
    for u in [(1, 1, 0, 0), (SQRT2.re, R(1), R(1), R(0)), (5, 0, 3, 4)]:
        gu = gamma(u)
        assert all(not (gu @ gu)(v) for v in dp.vectors + dm.vectors)


def test_clifford_fails_off_the_dirac_subspaces():
    # the relations are specific to D+ and D-; the unit is a counterexample
    r = clifford_check(vectors=[A.one()])
    assert not r["pass"]


def test_dressing_moved_clifford():
    f = random_spin_factors(rng_for(31), "dressing")
    alpha = compose_spin_factors(f)
    sigma = transformed_pauli_map(alpha)
    dp, dm = dirac_subspaces()
    r = clifford_check(sigma, OMEGA0, [alpha(v) for v in dp.vectors + dm.vectors])
    assert r["pass"]
    assert [list(x) for x in r["metric"].g] == ETA


def test_dirac_adjoint():
    x = A.gen(1) + A.e(1, 2, 3).scale(Scalar(1, 2))
    c = Scalar(2, -3)
    assert dirac_adjoint(x.scale(c)) == dirac_adjoint(x).scale(c.conj())
    assert dirac_adjoint(A.zero()).is_zero()
    scan = dirac_gram_scan()
    assert {k: v["rank"] for k, v in scan.items()} == {"D+xD+": 4, "D+xD-": 0, "D-xD+": 0, "D-xD-": 4}


def test_inner_product_examples():
    u = (R(3), R(1), R(-1), R(2))
    form = inner_product(u)
    assert form(A.one(), A.one()) == ONE
    sigma = default_pauli_injection()
    expected = sum((Scalar(c) * s(A.e(1, 3)) for c, s in zip(u, sigma.injection)), ZERO)
    assert form(A.gen(1), A.gen(1)) == expected
    assert expected.is_real() and expected.re.sign() >= 0


def test_psd_and_causality():
    assert psd_check(E0)["inertia"] == (5, 0, 11)
    assert is_causal((SQRT2.re, R(1), R(1), R(0)))
    with pytest.raises(NotCausal):
        psd_check((R(-1), R(0), R(0), R(0)))
    with pytest.raises(NotCausal):
        psd_check((R(1), R(2), R(0), R(0)))


def test_hilbert_adjoint():
    u = (R(2), R(1), R(0), R(1))
    t = LinearOperator.from_function(A, lambda x: A.e(1, 3) * x + x.scale(I))
    ha = hilbert_adjoint(t, u)
    form = inner_product(u)
    assert len(ha.definite) + len(ha.kernel) == 16 and ha.degenerate
    for x in ha.definite:
        for y in ha.definite:
            assert form(ha.operator(x), y) == form(x, t(y))
    assert all(not ha.operator(k) for k in ha.kernel)


def test_conformal_action():
    assert conformal_action_check(LinearOperator.identity(A)) == R(1)
    assert conformal_action_check(gl2_aut([[2, 0], [0, 1]])) == R(1, 0) / 4
    for kind in ("dressing", "full"):
        op = compose_spin_factors(random_spin_factors(rng_for(32), kind))
        lam = conformal_action_check(op)
        assert lam * maximal_form_scaling(op) == R(1)
