"""Registry of machine-checked claims and the seeded runs behind them.

Each claim has a stable id, a group (one per ``verify`` target), a short
anchor naming the mathematical statement it audits, and a runner.  A runner
receives a :class:`RunContext` and returns ``(ok, witness)``; claims marked
``recorded`` report an outcome without ever counting as a failure.

Random draws use ``rng_for(seed, index, stream)`` with a per-claim stream, so
a claim's output depends only on the seed and the sample count, never on
which thread ran it or in which order.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import linalg
from .algebra import (
    LinearOperator,
    center,
    check_dual_invariance,
    check_invariance,
    make_spin_algebra,
    monomial_key,
)
from .errors import NotCausal, NotConformal, SpinAlgError
from .geometry import (
    canonical_orientation,
    clifford_check,
    conformal_action_check,
    default_pauli_injection,
    dirac_gram_scan,
    dirac_subspaces,
    gamma,
    hilbert_adjoint,
    inner_product,
    inner_product_invariance,
    metric_G,
    psd_check,
    random_causal_vector,
    random_pauli_injection,
    signature,
    spacetime_metric,
    transformed_pauli_map,
)
from .grassmann import compose_factors, decompose_aut, random_factors
from .hopf import coalgebra_deformation_check, counit, verify_hopf_axioms
from .sampling import rand_scalar, rng_for
from .scalar import HALF, ONE, SQRT2, ZERO, RealScalar, Scalar, to_float
from .spin import (
    SAMPLE_KINDS,
    SpinAutFactors,
    bigrade_space,
    compose_spin_factors,
    decompose_spin_aut,
    dual_invariant_catalog,
    gl2_aut,
    j_aut,
    maximal_form_scaling,
    random_spin_factors,
    spin_invariant_catalog,
)

__all__ = ["Claim", "RunContext", "REGISTRY", "GROUPS", "claims_for", "run_claim", "sample_automorphism", "jsonable"]


@dataclass(frozen=True)
class RunContext:
    seed: int = 0
    samples: int = 100
    backend: str = "exact"
    tol: float = 1e-9

    def count(self, at_hundred: int) -> int:
        """Sample count scaled so that ``samples=100`` gives ``at_hundred``."""
        return max(1, at_hundred * self.samples // 100)

    def rng(self, claim_id: str, index: int):
        return rng_for(self.seed, index, zlib.crc32(claim_id.encode()))


@dataclass(frozen=True)
class Claim:
    claim_id: str
    group: str
    anchor: str
    runner: Callable
    recorded: bool = False


REGISTRY: list = []


def _claim(claim_id: str, anchor: str, recorded: bool = False):
    group = claim_id.split(".", 1)[0]

    def deco(fn):
        REGISTRY.append(Claim(claim_id, group, anchor, fn, recorded))
        return fn

    return deco


def sample_automorphism(kind: str, seed: int, index: int = 0, algebra: str = "spin"):
    """Seeded canonical factors: spin kinds, or ``algebra='grassmann:n'``."""
    rng = rng_for(seed, index, 0)
    if algebra == "spin":
        return random_spin_factors(rng, kind)
    if algebra.startswith("grassmann:"):
        return random_factors(int(algebra.split(":", 1)[1]), rng)
    raise ValueError(f"unknown algebra {algebra!r}")


def jsonable(obj, ctx: RunContext | None = None):
    """Witness payloads as plain JSON; scalars exact or as floats."""
    floaty = ctx is not None and ctx.backend == "float"
    if isinstance(obj, (Scalar, RealScalar)):
        if floaty:
            z = to_float(obj)
            re = 0.0 if abs(z.real) < ctx.tol else z.real
            im = 0.0 if abs(z.imag) < ctx.tol else z.imag
            return re if im == 0.0 else [re, im]
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v, ctx) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, ctx) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json() if not floaty else jsonable(_floatable(obj), ctx)
    return obj


def _floatable(obj):
    if isinstance(obj, LinearOperator):
        return obj.matrix()
    return str(obj)


# --------------------------------------------------------------------------
# algebra laws


_SPIN = make_spin_algebra()


@_claim("algebra.associativity", "spin algebra: (xy)z = x(yz) on all 16^3 monomial triples")
def _assoc(ctx):
    monos = [_SPIN.mono(m) for m in range(16)]
    prods = [[x * y for y in monos] for x in monos]
    for a in range(16):
        for b in range(16):
            for c in range(16):
                if prods[a][b] * monos[c] != monos[a] * prods[b][c]:
                    return False, {"triple": [monomial_key(a), monomial_key(b), monomial_key(c)]}
    return True, {"triples": 16**3}


@_claim("algebra.plus_multiplicative", "plus involution: (xy)^+ = x^+ y^+ on all 16^2 monomial pairs")
def _plus_mult(ctx):
    for a in range(16):
        for b in range(16):
            x, y = _SPIN.mono(a), _SPIN.mono(b)
            if (x * y).plus() != x.plus() * y.plus() or x.plus().plus() != x:
                return False, {"pair": [monomial_key(a), monomial_key(b)]}
    return True, {"pairs": 256}


@_claim("algebra.center", "spin algebra center is spanned by 1, e1e2, e3e4, e1e2e3e4")
def _center(ctx):
    z = center(_SPIN)
    got = sorted(monomial_key(m) for m in z.masks())
    return z.dim == 4 and got == ["", "12", "1234", "34"], {"center": got}


# --------------------------------------------------------------------------
# Hopf structure


@lru_cache(maxsize=None)
def _hopf_report(seed: int):
    return verify_hopf_axioms(seed=seed)


_HOPF_ANCHORS = {
    "coproduct_multiplicative": "coproduct is an algebra map for the skew product (all 256 basis pairs)",
    "coassociativity": "coproduct is coassociative",
    "counit_left": "counit law (ε ⊗ I) Δ = I",
    "counit_right": "counit law (I ⊗ ε) Δ = I",
    "antipode_left": "antipode law m (S ⊗ I) Δ = 1 ε",
    "antipode_right": "antipode law m (I ⊗ S) Δ = 1 ε",
    "swap_involutive": "bigraded swap is an involution",
    "braided_cocommutative": "coproduct is cocommutative up to the bigraded swap",
    "coproduct_plus_compatible": "coproduct commutes with the plus involution",
    "skew_unit": "1 ⊗ 1 is the unit of the skew product",
    "skew_associative": "skew product is associative (seeded basis triples)",
    "coproduct_well_defined": "generator images under Δ satisfy the defining relations",
}


def _hopf_runner(name):
    def run(ctx):
        r = _hopf_report(ctx.seed)[name]
        return r["pass"], ({"first_failure": r["witness"]} if not r["pass"] else None)

    return run


for _name, _anchor in _HOPF_ANCHORS.items():
    _claim(f"hopf.{_name}", _anchor)(_hopf_runner(_name))


@_claim("hopf.deformation_reductive", "grading-preserving automorphisms (gl and J) preserve the coproduct")
def _deform_reductive(ctx):
    n = ctx.count(50)
    for k in range(n):
        f = random_spin_factors(ctx.rng("hopf.deformation_reductive", k), "gl")
        r = coalgebra_deformation_check(compose_spin_factors(f))
        if r["status"] != "preserved":
            return False, {"sample": k, "witness": r["witness"]}
    return True, {"samples": n}


@_claim("hopf.deformation_dressing", "a nontrivial dressing transformation deforms the coproduct")
def _deform_dressing(ctx):
    n = ctx.count(50)
    deformed = []
    for k in range(n):
        f = random_spin_factors(ctx.rng("hopf.deformation_dressing", k), "dressing")
        r = coalgebra_deformation_check(compose_spin_factors(f))
        if r["status"] == "deformed":
            deformed.append(k)
    ok = bool(deformed)
    return ok, {"samples": n, "deformed": len(deformed), "first_deformed": deformed[0] if ok else None}


# --------------------------------------------------------------------------
# splittings


def _grassmann_roundtrip(ctx, n):
    cid = f"splitting.grassmann_n{n}"
    count = ctx.count(100)
    for k in range(count):
        f = random_factors(n, ctx.rng(cid, k))
        op = compose_factors(f)
        back = decompose_aut(op)
        if back != f:
            return False, {"sample": k, "direction": "decompose(compose(f)) != f"}
        if compose_factors(back) != op:
            return False, {"sample": k, "direction": "compose(decompose(op)) != op"}
    return True, {"samples": count}


for _n in (2, 3, 4):
    _claim(
        f"splitting.grassmann_n{_n}",
        f"Grassmann algebra on {_n} generators: Aut = inner ∘ nev ∘ gl, unique factors",
    )(lambda ctx, _n=_n: _grassmann_roundtrip(ctx, _n))


@_claim("splitting.spin", "spin algebra: Aut = inner ∘ nev ∘ gl ∘ J^j, unique factors with j recovered")
def _spin_roundtrip(ctx):
    count = ctx.count(100)
    j_seen = 0
    for k in range(count):
        kind = SAMPLE_KINDS[k % len(SAMPLE_KINDS)]
        f = random_spin_factors(ctx.rng("splitting.spin", k), kind)
        op = compose_spin_factors(f)
        back = decompose_spin_aut(op)
        if back != f:
            return False, {"sample": k, "kind": kind, "direction": "decompose(compose(f)) != f"}
        if compose_spin_factors(back) != op:
            return False, {"sample": k, "kind": kind, "direction": "compose(decompose(op)) != op"}
        j_seen += kind == "j-composed"
    return True, {"samples": count, "j_composed_recovered": j_seen}


# --------------------------------------------------------------------------
# invariant subspaces


def _sampled_automorphisms(ctx, cid, n):
    """``(index, kind, factors, operator)`` cycling through the sample kinds."""
    for k in range(n):
        kind = SAMPLE_KINDS[k % len(SAMPLE_KINDS)]
        f = random_spin_factors(ctx.rng(cid, k), kind)
        yield k, kind, f, compose_spin_factors(f)


@_claim("invariants.primal", "B, M^1..M^4, M^2∩Z, V, U, W are invariant under every automorphism")
def _inv_primal(ctx):
    cat = spin_invariant_catalog()
    n = ctx.count(100)
    for k, kind, _, op in _sampled_automorphisms(ctx, "invariants.primal", n):
        for name, space in cat.items():
            if not check_invariance(op, space):
                return False, {"sample": k, "kind": kind, "subspace": name}
    return True, {"samples": n, "subspaces": {k: v.dim for k, v in cat.items()}}


@_claim("invariants.dual", "annihilators of the invariant subspaces are invariant under the dual action")
def _inv_dual(ctx):
    cat = dual_invariant_catalog()
    n = ctx.count(100)
    for k, kind, _, op in _sampled_automorphisms(ctx, "invariants.dual", n):
        inv = op.inverse()
        for name, space in cat.items():
            if not check_dual_invariance(inv, space):
                return False, {"sample": k, "kind": kind, "subspace": name}
    return True, {"samples": n, "subspaces": {k: v.dim for k, v in cat.items()}}


@_claim("invariants.dressing_moves_L10", "the bigrade (1,0) subspace is not invariant under some dressing map")
def _inv_witness(ctx):
    l10 = bigrade_space((1, 0))
    n = ctx.count(100)
    for k in range(n):
        f = random_spin_factors(ctx.rng("invariants.dressing_moves_L10", k), "dressing")
        op = compose_spin_factors(f)
        if not check_invariance(op, l10):
            return True, {"sample": k, "image_of_e1": op(_SPIN.gen(1)).to_json()}
    return False, {"samples": n}


@_claim("invariants.maximal_form", "automorphisms scale e1e2e3e4 by a positive real, multiplicatively")
def _inv_top(ctx):
    n = ctx.count(100)
    ops = []
    for k, kind, f, op in _sampled_automorphisms(ctx, "invariants.maximal_form", n):
        lam = maximal_form_scaling(op)
        if lam.sign() <= 0:
            return False, {"sample": k, "lambda": str(lam)}
        if not any(f.nev_b) and not f.inner_a:
            d = linalg.det(f.gl)
            if Scalar(lam) != d.abs2():
                return False, {"sample": k, "lambda": str(lam), "abs_det_squared": str(d.abs2())}
        ops.append((op, lam))
    for k in range(len(ops) - 1):
        (a, la), (b, lb) = ops[k], ops[k + 1]
        if maximal_form_scaling(a @ b) != la * lb:
            return False, {"pair": [k, k + 1]}
    return True, {"samples": n}


# --------------------------------------------------------------------------
# metric


@_claim("metric.G_lorentz", "G(omega) is a symmetric form of Lorentz signature")
def _metric_lorentz(ctx):
    om = canonical_orientation()
    g = metric_G(om)
    sym = all(g[a][b] == g[b][a] for a in range(4) for b in range(4))
    sig = signature(g)
    return sym and sig == (1, 3, 0), {"orientation": str(om.lam), "inertia": list(sig), "G": g}


@_claim("metric.G_scaling", "G(c omega) = c G(omega)")
def _metric_scale(ctx):
    om = canonical_orientation()
    ok = True
    for c in (2, -3, RealScalar(1, 1)):
        c = RealScalar(c) if not isinstance(c, RealScalar) else c
        g1 = metric_G(om.scaled(c))
        g0 = metric_G(om)
        ok &= all(g1[a][b] == g0[a][b] * Scalar(c) for a in range(4) for b in range(4))
    return ok, None


@_claim("metric.spacetime", "g_ab = ε(σ_a σ_b omega) is symmetric and Lorentzian; ε∘σ_a = s_a")
def _metric_spacetime(ctx):
    sigma = default_pauli_injection()
    met = spacetime_metric(sigma, canonical_orientation())
    prod = linalg.matmul([list(r) for r in met.g], [list(r) for r in met.g_inv])
    ident = all(prod[a][b] == (RealScalar(1) if a == b else RealScalar(0)) for a in range(4) for b in range(4))
    counit_bridge = all(
        counit(op.cols[m]) == s.terms.get(m, ZERO)
        for s, op in zip(sigma.injection, sigma.operators)
        for m in range(16)
    )
    return met.inertia == (1, 3, 0) and ident and counit_bridge, {
        "g": met.g,
        "inertia": list(met.inertia),
        "inverse_ok": ident,
        "counit_bridge": counit_bridge,
    }


@_claim("metric.conformal", "automorphisms act on G(omega) by one positive scale factor")
def _metric_conformal(ctx):
    n = ctx.count(100)
    om = canonical_orientation()
    consistent = 0
    for k, kind, _, op in _sampled_automorphisms(ctx, "metric.conformal", n):
        try:
            lam = conformal_action_check(op, om)
        except NotConformal as exc:
            return False, {"sample": k, "kind": kind, "reason": str(exc)}
        consistent += lam * maximal_form_scaling(op) == RealScalar(1)
    return True, {"samples": n, "lambda_times_top_scaling_is_one": consistent}


# --------------------------------------------------------------------------
# Clifford relations and the Dirac adjoint


def _clifford_witness(r):
    return {"checked": r["checked"], "failures": r["failures"][:5], "g": r["metric"].g}


@_claim("clifford.default", "γ_a γ_b + γ_b γ_a = 2 g_ab on D+ and D- (default injection)")
def _cliff_default(ctx):
    r = clifford_check(default_pauli_injection(), canonical_orientation())
    return r["pass"], _clifford_witness(r)


@_claim("clifford.random_injections", "Clifford relations on D+ and D- for random Pauli injections")
def _cliff_random(ctx):
    n = ctx.count(20)
    om = canonical_orientation()
    for k in range(n):
        sigma = random_pauli_injection(ctx.rng("clifford.random_injections", k))
        r = clifford_check(sigma, om)
        if not r["pass"]:
            return False, {"sample": k, **_clifford_witness(r)}
    return True, {"samples": n}


@_claim("clifford.dressing_moved", "dressing-moved coproduct gives the same g and Clifford relations on moved D±")
def _cliff_moved(ctx):
    n = ctx.count(10)
    om = canonical_orientation()
    g0 = spacetime_metric(None, om).g
    dp, dm = dirac_subspaces()
    for k in range(n):
        f = random_spin_factors(ctx.rng("clifford.dressing_moved", k), "dressing")
        alpha = compose_spin_factors(f)
        sigma = transformed_pauli_map(alpha)
        r = clifford_check(sigma, om, [alpha(v) for v in dp.vectors + dm.vectors])
        if r["metric"].g != g0 or not r["pass"]:
            return False, {"sample": k, **_clifford_witness(r)}
    return True, {"samples": n}


@_claim("clifford.null_square", "γ(u)^2 vanishes on D+ and D- for null u")
def _cliff_null(ctx):
    s2 = SQRT2.re
    for u in ((1, 1, 0, 0), (s2, 1, 1, 0), (5, 3, 4, 0)):
        gu = gamma(u)
        sq = gu @ gu
        dp, dm = dirac_subspaces()
        if any(sq(v) for v in dp.vectors + dm.vectors):
            return False, {"u": [str(RealScalar(c) if not isinstance(c, RealScalar) else c) for c in u]}
    return True, None


@_claim("clifford.dirac_gram", "Dirac adjoint pairing is non-degenerate on D+ x D+ (Gram-rank scan)")
def _dirac_gram(ctx):
    scan = dirac_gram_scan(default_pauli_injection(), canonical_orientation())
    ranks = {k: v["rank"] for k, v in scan.items()}
    return scan["D+xD+"]["full"], {"ranks": ranks}


# --------------------------------------------------------------------------
# inner product


_E0 = (1, 0, 0, 0)


def _causal_vectors(ctx, cid, n):
    fixed = [_E0, (SQRT2.re, 1, 1, 0), (5, 3, 4, 0)]
    out = [tuple(RealScalar(c) if not isinstance(c, RealScalar) else c for c in u) for u in fixed]
    k = 0
    while len(out) < n:
        out.append(random_causal_vector(ctx.rng(cid, k)))
        k += 1
    return out[:n]


@_claim("inner-product.hermitian", "the inner product is Hermitian sesquilinear with <1,1> = 1")
def _ip_herm(ctx):
    n = ctx.count(20)
    for k, u in enumerate(_causal_vectors(ctx, "inner-product.hermitian", n)):
        form = inner_product(u)
        rng = ctx.rng("inner-product.hermitian", 1000 + k)
        x = _SPIN.from_coords([rand_scalar(rng) for _ in range(16)])
        y = _SPIN.from_coords([rand_scalar(rng) for _ in range(16)])
        c = rand_scalar(rng, nonzero=True)
        checks = {
            "unit": form(_SPIN.one(), _SPIN.one()) == ONE,
            "hermitian": form(x, y) == form(y, x).conj(),
            "linear_right": form(x, y.scale(c)) == c * form(x, y),
            "antilinear_left": form(x.scale(c), y) == c.conj() * form(x, y),
        }
        if not all(checks.values()):
            return False, {"sample": k, "checks": checks}
    return True, {"samples": n}


@_claim("inner-product.psd", "the inner product is positive semidefinite for future causal u")
def _ip_psd(ctx):
    n = ctx.count(20)
    inertias = set()
    for k, u in enumerate(_causal_vectors(ctx, "inner-product.psd", n)):
        try:
            r = psd_check(u)
        except NotCausal as exc:
            return False, {"sample": k, "reason": str(exc)}
        if not r["pass"]:
            return False, {"sample": k, "u": list(u), "inertia": list(r["inertia"])}
        inertias.add(r["inertia"])
    return True, {"samples": n, "inertias": sorted(list(i) for i in inertias)}


@_claim("inner-product.hilbert_adjoint", "<T† x, y> = <x, T y> on the definite subspace")
def _ip_adjoint(ctx):
    n = ctx.count(10)
    us = _causal_vectors(ctx, "inner-product.hilbert_adjoint", n)
    for k, (_, kind, _, op) in enumerate(_sampled_automorphisms(ctx, "inner-product.hilbert_adjoint", n)):
        u = us[k]
        ha = hilbert_adjoint(op, u)
        form = inner_product(u)
        for x in ha.definite:
            for y in ha.definite:
                if form(ha.operator(x), y) != form(x, op(y)):
                    return False, {"sample": k, "kind": kind}
    return True, {"samples": n, "definite_dim": len(ha.definite), "kernel_dim": len(ha.kernel)}


@_claim("inner-product.invariance", "invariance of the inner product, per automorphism subgroup", recorded=True)
def _ip_invariance(ctx):
    n = ctx.count(10)
    us = _causal_vectors(ctx, "inner-product.invariance", 3)
    subgroups = {
        "inner": lambda f: SpinAutFactors(inner_a=f.inner_a),
        "nev": lambda f: SpinAutFactors(nev_b=f.nev_b),
        "gl": lambda f: SpinAutFactors(gl=f.gl),
        "unitary_gl": lambda f: None,
        "J": lambda f: None,
    }
    h = SQRT2 * HALF
    unitary = [
        [[0, 1], [-1, 0]],
        [[Scalar(0, 1), 0], [0, Scalar(0, -1)]],
        [[h, h], [-h, h]],
    ]
    out = {}
    for name, make in subgroups.items():
        rows = []
        for k in range(n if name in ("inner", "nev", "gl") else 1):
            f = random_spin_factors(ctx.rng("inner-product.invariance", k), "full")
            if name == "J":
                ops = [j_aut()]
            elif name == "unitary_gl":
                ops = [gl2_aut(m) for m in unitary]
            else:
                ops = [compose_spin_factors(make(f))]
            for op in ops:
                for ui, u in enumerate(us):
                    r = inner_product_invariance(op, u)
                    rows.append((ui, r["invariant"], r["conformal"]))
        out[name] = {
            "checked": len(rows),
            "invariant": sum(1 for _, inv, _ in rows if inv),
            "invariant_up_to_scale": sum(1 for _, _, c in rows if c),
            "invariant_for_e0": all(inv for ui, inv, _ in rows if ui == 0),
        }
    return True, out


# --------------------------------------------------------------------------


GROUPS = ("algebra", "hopf", "splitting", "invariants", "metric", "clifford", "inner-product")


def claims_for(target: str) -> list:
    if target == "all":
        chosen = list(REGISTRY)
    elif target in GROUPS:
        chosen = [c for c in REGISTRY if c.group == target]
    else:
        raise ValueError(f"unknown verify target {target!r}")
    return sorted(chosen, key=lambda c: c.claim_id)


def run_claim(claim: Claim, ctx: RunContext) -> dict:
    """Evaluate one claim; library errors become failures with their message."""
    try:
        ok, witness = claim.runner(ctx)
    except SpinAlgError as exc:
        ok, witness = False, {"error": type(exc).__name__, "message": str(exc)}
    if claim.recorded:
        status = "recorded"
    else:
        status = "pass" if ok else "fail"
    return {
        "claim_id": claim.claim_id,
        "anchor": claim.anchor,
        "status": status,
        "witness": jsonable(witness, ctx),
        "seed": ctx.seed,
    }
