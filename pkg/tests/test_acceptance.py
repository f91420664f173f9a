"""The twelve acceptance criteria, each checked exactly at its stated size.

A summary line per criterion is printed at the end of the pytest run (see
conftest.py).
"""

import json
import subprocess
import sys

import pytest

from spinalg import linalg
from spinalg.algebra import check_dual_invariance, check_invariance, make_spin_algebra
from spinalg.claims import RunContext, claims_for, run_claim
from spinalg.geometry import (
    canonical_orientation,
    clifford_check,
    conformal_action_check,
    default_pauli_injection,
    dirac_gram_scan,
    hilbert_adjoint,
    inner_product,
    inner_product_matrix,
    metric_G,
    psd_check,
    random_causal_vector,
    random_pauli_injection,
    signature,
)
from spinalg.grassmann import compose_factors, decompose_aut, random_factors
from spinalg.hopf import verify_hopf_axioms, coalgebra_deformation_check
from spinalg.sampling import rng_for, rand_scalar
from spinalg.scalar import RealScalar, SQRT2
from spinalg.spin import (
    SpinAutFactors,
    bigrade_space,
    compose_spin_factors,
    decompose_spin_aut,
    dual_invariant_catalog,
    maximal_form_scaling,
    random_spin_factors,
    spin_invariant_catalog,
)

A = make_spin_algebra()


@pytest.mark.criterion(1, "algebra laws: associativity on 16^3 triples, (xy)^+ = x^+y^+ on 16^2 pairs")
def test_criterion_01_algebra_laws():
    monos = [A.mono(m) for m in range(16)]
    prod = [[x * y for y in monos] for x in monos]
    bad_assoc = [
        (a, b, c)
        for a in range(16)
        for b in range(16)
        for c in range(16)
        if prod[a][b] * monos[c] != monos[a] * prod[b][c]
    ]
    assert bad_assoc == []
    bad_plus = [(a, b) for a in range(16) for b in range(16) if prod[a][b].plus() != monos[a].plus() * monos[b].plus()]
    assert bad_plus == []


@pytest.mark.criterion(2, "Hopf axioms: multiplicativity (256 pairs), coassociativity, counit, antipode")
def test_criterion_02_hopf_axioms():
    report = verify_hopf_axioms()
    required = [
        "coproduct_multiplicative",
        "coassociativity",
        "counit_left",
        "counit_right",
        "antipode_left",
        "antipode_right",
    ]
    failing = {k: report[k]["witness"] for k in required if not report[k]["pass"]}
    assert failing == {}


@pytest.mark.criterion(3, "Grassmann splitting round trips: n in {2,3,4}, 100 seeded tuples each")
def test_criterion_03_grassmann_roundtrip():
    for n in (2, 3, 4):
        for k in range(100):
            f = random_factors(n, rng_for(3, k, n))
            op = compose_factors(f)
            back = decompose_aut(op)
            assert back == f, (n, k)
            assert compose_factors(back) == op, (n, k)


@pytest.mark.criterion(4, "spin splitting round trips: 100 seeded factor tuples, j recovered")
def test_criterion_04_spin_roundtrip():
    kinds = ("dressing", "gl", "full", "j-composed")
    j_composed = 0
    for k in range(100):
        kind = kinds[k % 4]
        f = random_spin_factors(rng_for(4, k), kind)
        op = compose_spin_factors(f)
        back = decompose_spin_aut(op)
        assert back == f, (k, kind)
        assert compose_spin_factors(back) == op, (k, kind)
        if kind == "j-composed":
            assert back.j_flag is True
            j_composed += 1
    assert j_composed == 25


@pytest.mark.criterion(5, "invariant subspaces and annihilators preserved by 100 automorphisms; (1,0) moved by a dressing")
def test_criterion_05_invariance():
    primal = spin_invariant_catalog()
    dual = dual_invariant_catalog()
    assert set(primal) == {"B", "M1", "M2", "M3", "M4", "M2∩Z", "V", "U", "W"}
    for k in range(100):
        op = compose_spin_factors(random_spin_factors(rng_for(5, k), "full"))
        inv = op.inverse()
        for name, space in primal.items():
            assert check_invariance(op, space), (k, name)
        for name, space in dual.items():
            assert check_dual_invariance(inv, space), (k, name)
    l10 = bigrade_space((1, 0))
    moved = None
    for k in range(100):
        op = compose_spin_factors(random_spin_factors(rng_for(55, k), "dressing"))
        if not check_invariance(op, l10):
            moved = k
            break
    assert moved is not None


@pytest.mark.criterion(6, "maximal form scaled by lambda > 0, multiplicative, |det gl|^2 without dressing")
def test_criterion_06_maximal_form():
    ops = []
    for k in range(100):
        f = random_spin_factors(rng_for(6, k), ("full", "gl", "dressing", "j-composed")[k % 4])
        op = compose_spin_factors(f)
        lam = maximal_form_scaling(op)
        assert lam.sign() > 0
        ops.append((op, lam))
        bare = compose_spin_factors(SpinAutFactors(gl=f.gl, j_flag=f.j_flag))
        assert maximal_form_scaling(bare) == linalg.det(f.gl).abs2()
    for (a, la), (b, lb) in zip(ops, ops[1:]):
        assert maximal_form_scaling(a @ b) == la * lb


@pytest.mark.criterion(7, "G(omega) symmetric with inertia (1,3); conformal factor exact and positive for 100 automorphisms")
def test_criterion_07_metric():
    om = canonical_orientation()
    g = metric_G(om)
    assert all(g[a][b] == g[b][a] for a in range(4) for b in range(4))
    assert signature(g) == (1, 3, 0)
    for k in range(100):
        op = compose_spin_factors(random_spin_factors(rng_for(7, k), "full"))
        lam = conformal_action_check(op, om)
        assert lam.sign() > 0


@pytest.mark.criterion(8, "Clifford relations on D+ and D- for default and 20 random injections; Dirac Gram block full rank")
def test_criterion_08_clifford():
    om = canonical_orientation()
    r = clifford_check(default_pauli_injection(), om)
    assert r["pass"], r["failures"][:3]
    assert r["checked"] == 10 * 8
    for k in range(20):
        r = clifford_check(random_pauli_injection(rng_for(8, k)), om)
        assert r["pass"], (k, r["failures"][:3])
    scan = dirac_gram_scan(default_pauli_injection(), om)
    assert any(block["full"] for block in scan.values())
    assert scan["D+xD+"]["rank"] == 4


@pytest.mark.criterion(9, "inner product Hermitian, PSD for 20 causal u, Hilbert adjoint identity on the definite part")
def test_criterion_09_inner_product():
    us = [(RealScalar(1), RealScalar(0), RealScalar(0), RealScalar(0)), (SQRT2.re, RealScalar(1), RealScalar(1), RealScalar(0))]
    k = 0
    while len(us) < 20:
        us.append(random_causal_vector(rng_for(9, k)))
        k += 1
    for u in us:
        h = inner_product_matrix(u)
        assert all(h[p][q] == h[q][p].conj() for p in range(16) for q in range(16))
        r = psd_check(u)
        assert r["inertia"][1] == 0
    rng = rng_for(99, 0)
    form = inner_product(us[3])
    x = A.from_coords([rand_scalar(rng) for _ in range(16)])
    y = A.from_coords([rand_scalar(rng) for _ in range(16)])
    c = rand_scalar(rng, nonzero=True)
    assert form(x.scale(c), y) == c.conj() * form(x, y)
    assert form(x, y.scale(c)) == c * form(x, y)
    t = compose_spin_factors(random_spin_factors(rng_for(90, 0), "full"))
    ha = hilbert_adjoint(t, us[3])
    for xd in ha.definite:
        for yd in ha.definite:
            assert form(ha.operator(xd), yd) == form(xd, t(yd))


@pytest.mark.criterion(10, "coproduct preserved by 50 gl/J automorphisms and deformed by a sampled dressing")
def test_criterion_10_deformation():
    for k in range(50):
        f = random_spin_factors(rng_for(10, k), "gl")
        assert coalgebra_deformation_check(compose_spin_factors(f))["status"] == "preserved", k
    deformed = [
        k
        for k in range(10)
        if coalgebra_deformation_check(compose_spin_factors(random_spin_factors(rng_for(100, k), "dressing")))["status"]
        == "deformed"
    ]
    assert deformed


def _verify_all(jobs):
    out = subprocess.run(
        [sys.executable, "-m", "spinalg", "verify", "all", "--seed", "42", "--format", "json", "--jobs", str(jobs)],
        capture_output=True,
        check=False,
    )
    return out.returncode, out.stdout


@pytest.mark.criterion(11, "verify all --seed 42 is byte-identical across runs and thread counts")
def test_criterion_11_determinism():
    code1, first = _verify_all(1)
    code2, second = _verify_all(1)
    code3, threaded = _verify_all(4)
    assert code1 == code2 == code3 == 0
    assert first == second == threaded
    assert len(json.loads(first)) == len(claims_for("all"))


@pytest.mark.criterion(12, "inner-product invariance evaluated per factor subgroup and recorded")
def test_criterion_12_recorded_invariance():
    (claim,) = [c for c in claims_for("inner-product") if c.claim_id == "inner-product.invariance"]
    rep = run_claim(claim, RunContext(seed=42, samples=100))
    assert rep["status"] == "recorded"
    assert set(rep["witness"]) == {"inner", "nev", "gl", "unitary_gl", "J"}
    for row in rep["witness"].values():
        assert row["checked"] > 0
