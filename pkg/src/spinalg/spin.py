"""The spin algebra, its automorphism group and invariant subspaces.

Automorphisms are generated by four kinds of factor and every automorphism
factors uniquely as ``inner(a) o nev(b1, b2) o gl(m) o J^j``:

* ``gl(m)``: ``e_i -> sum m_ij e_j`` and ``e_i^+ -> sum conj(m_ij) e_j^+``;
* ``J``: exchanges ``e1 <-> e3`` and ``e2 <-> e4``;
* ``nev(b1, b2)``: ``e_i -> e_i + b_i`` with ``b_i`` of bigrade (1, 2);
* ``inner(a)``: conjugation by ``exp(a)`` for ``+``-real ``a`` supported on the
  non-central bigrades (1,0), (0,1), (1,1), (2,1), (1,2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import linalg
from .algebra import (
    AlgebraElement,
    DualFunctional,
    LinearOperator,
    Subspace,
    annihilator,
    center,
    commutator,
    conjugation_by_exp,
    direct_sum,
    exp_ad,
    ideal_power_by_grade,
    make_spin_algebra,
    popcount,
)
from .automorphism import aut_from_images, endomorphism_from_images, linear_part, require_automorphism
from .errors import DecompositionResidual, InvalidParameter, NotAutomorphism
from .sampling import rand_invertible, rand_rational, rand_scalar
from .scalar import I, ONE, ZERO, RealScalar, Scalar

__all__ = [
    "SpinAutFactors",
    "make_spin_algebra",
    "INNER_BIGRADES",
    "spin_aut_from_images",
    "inner_aut",
    "inner_aut_closed_form",
    "nev_aut",
    "gl2_aut",
    "j_aut",
    "compose_spin_factors",
    "decompose_spin_aut",
    "inner_parameter_basis",
    "inner_parameter_kernel_dim",
    "bigrade_space",
    "spin_invariant_catalog",
    "dual_invariant_catalog",
    "dual_action",
    "maximal_form_scaling",
    "random_spin_factors",
    "SAMPLE_KINDS",
]

INNER_BIGRADES = ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2))
NEV_BIGRADE = (1, 2)
TOP = 0b1111

_I2 = [[ONE, ZERO], [ZERO, ONE]]


def _alg():
    return make_spin_algebra()


@dataclass
class SpinAutFactors:
    """Parameters of ``inner(a) o nev(b1, b2) o gl(m) o J^j``."""

    inner_a: AlgebraElement = None
    nev_b: tuple = None
    gl: list = field(default=None)
    j_flag: bool = False

    def __post_init__(self):
        alg = _alg()
        if self.inner_a is None:
            self.inner_a = alg.zero()
        if self.nev_b is None:
            self.nev_b = (alg.zero(), alg.zero())
        self.nev_b = tuple(self.nev_b)
        if self.gl is None:
            self.gl = _I2
        self.gl = [[Scalar(0) + x for x in row] for row in self.gl]
        self.j_flag = bool(self.j_flag)

    def is_dressing(self) -> bool:
        return self.gl == _I2 and not self.j_flag

    def is_grading_preserving(self) -> bool:
        return not self.inner_a and not any(self.nev_b)

    def to_json(self) -> dict:
        return {
            "inner_a": self.inner_a.to_json(),
            "nev_b": [b.to_json() for b in self.nev_b],
            "gl": [[x.to_json() for x in row] for row in self.gl],
            "j": self.j_flag,
        }

    @classmethod
    def from_json(cls, obj) -> "SpinAutFactors":
        return cls(
            AlgebraElement.from_json(obj["inner_a"]),
            tuple(AlgebraElement.from_json(b) for b in obj["nev_b"]),
            [[Scalar.from_json(x) for x in row] for row in obj["gl"]],
            bool(obj["j"]),
        )


def bigrade_space(*bigrades, dual: bool = False, name: str | None = None) -> Subspace:
    alg = _alg()
    masks = [m for m in alg.basis if alg.bigrade(m) in bigrades]
    return Subspace.from_masks(alg, masks, name=name, dual=dual)


# --------------------------------------------------------------------------
# factor constructors


def spin_aut_from_images(images) -> LinearOperator:
    """Automorphism with ``e1 -> x1``, ``e2 -> x2``; ``e3, e4`` go to ``x1^+, x2^+``."""
    x1, x2 = images
    alg = _alg()
    return aut_from_images(alg, [x1, x2, x1.plus(), x2.plus()], exhaustive=True)


def _from_two_images(x1, x2) -> LinearOperator:
    return endomorphism_from_images(_alg(), [x1, x2, x1.plus(), x2.plus()])


def gl2_aut(matrix) -> LinearOperator:
    m = [[Scalar(0) + x for x in row] for row in matrix]
    if len(m) != 2 or any(len(r) != 2 for r in m) or not linalg.det(m):
        raise InvalidParameter("gl factor must be an invertible 2x2 matrix")
    alg = _alg()
    e1, e2 = alg.gen(1), alg.gen(2)
    return _from_two_images(e1.scale(m[0][0]) + e2.scale(m[0][1]), e1.scale(m[1][0]) + e2.scale(m[1][1]))


def j_aut() -> LinearOperator:
    """Particle/antiparticle label exchange ``e1 <-> e3``, ``e2 <-> e4``."""
    alg = _alg()
    return _from_two_images(alg.gen(3), alg.gen(4))


def nev_aut(b1: AlgebraElement, b2: AlgebraElement) -> LinearOperator:
    alg = _alg()
    for b in (b1, b2):
        if any(alg.bigrade(m) != NEV_BIGRADE for m in b.terms):
            raise InvalidParameter("nev parameters must have bigrade (1, 2)")
    return _from_two_images(alg.gen(1) + b1, alg.gen(2) + b2)


def _check_inner_parameter(a: AlgebraElement):
    alg = _alg()
    if any(alg.bigrade(m) not in INNER_BIGRADES for m in a.terms):
        raise InvalidParameter("inner parameter has components outside the allowed bigrades")
    if a.plus() != a:
        raise InvalidParameter("inner parameter must be +-real")


def inner_aut(a: AlgebraElement) -> LinearOperator:
    """``z -> exp(a) z exp(-a)``."""
    _check_inner_parameter(a)
    return conjugation_by_exp(a)


def inner_aut_closed_form(a: AlgebraElement) -> LinearOperator:
    """Same automorphism built from ``e_i -> e_i + [a,e_i] + [a,[a,e_i]]/2``."""
    _check_inner_parameter(a)
    alg = _alg()
    images = []
    for g in alg.gens():
        c1 = commutator(a, g)
        images.append(g + c1 + commutator(a, c1) / 2)
    return endomorphism_from_images(alg, images)


def compose_spin_factors(f: SpinAutFactors) -> LinearOperator:
    op = inner_aut(f.inner_a) @ nev_aut(*f.nev_b) @ gl2_aut(f.gl)
    if f.j_flag:
        op = op @ j_aut()
    return op


# --------------------------------------------------------------------------
# decomposition


def _realify(x: AlgebraElement) -> list:
    """Real coordinates (real parts then imaginary parts) over the basis."""
    coords = x.coords()
    return [c.re for c in coords] + [c.im for c in coords]


def _real_reduce(vectors) -> list:
    """Maximal real-linearly independent subset, in order."""
    out = []
    rows = []
    for v in vectors:
        trial = rows + [_realify(v)]
        if linalg.rank(trial) == len(trial):
            rows = trial
            out.append(v)
    return out


@lru_cache(maxsize=None)
def inner_parameter_basis(degree: int | None = None) -> tuple:
    """Real basis of the +-real inner parameters (optionally one degree only)."""
    alg = _alg()
    cands = []
    for m in alg.basis:
        if alg.bigrade(m) not in INNER_BIGRADES:
            continue
        if degree is not None and popcount(m) != degree:
            continue
        x = alg.mono(m)
        cands.append(x + x.plus())
        cands.append((x - x.plus()).scale(I))
    return tuple(_real_reduce([c for c in cands if c]))


def _ad_generators_real(a: AlgebraElement, degree: int | None = None) -> list:
    alg = _alg()
    out = []
    for g in alg.gens():
        c = commutator(a, g)
        if degree is not None:
            c = c.project(degree=degree)
        out.extend(_realify(c))
    return out


def inner_parameter_kernel_dim() -> int:
    """Dimension of the real kernel of ``a -> ([a, e_i])_i`` on the parameter space.

    Zero means the inner parameter of an automorphism is unique.
    """
    basis = inner_parameter_basis()
    cols = [_ad_generators_real(b) for b in basis]
    return len(basis) - linalg.rank(linalg.transpose(cols))


def _solve_inner_parameter(gamma: LinearOperator) -> AlgebraElement:
    """Recover ``a`` from ``gamma = exp(ad_a)`` degree by degree.

    The degree-``k+1`` part of ``gamma(e_i) - e_i`` equals ``[a_k, e_i]`` plus
    terms involving only lower-degree components of ``a``, so each layer is a
    real linear solve.
    """
    alg = _alg()
    a = alg.zero()
    for k in (1, 2, 3):
        basis = inner_parameter_basis(k)
        rhs = []
        for g in alg.gens():
            resid = (gamma(g) - exp_ad(a, g)).project(degree=k + 1)
            rhs.extend(_realify(resid))
        cols = [_ad_generators_real(b, degree=k + 1) for b in basis]
        mat = linalg.transpose(cols)
        if linalg.rank(mat) != len(basis):
            raise DecompositionResidual(f"inner parameter of degree {k} is not unique")
        try:
            t = linalg.solve(mat, rhs)
        except ZeroDivisionError as exc:
            raise DecompositionResidual("residual is not an inner automorphism") from exc
        for coef, b in zip(t, basis):
            if coef:
                a = a + b.scale(coef)
    return a


def decompose_spin_aut(alpha: LinearOperator) -> SpinAutFactors:
    """Factor a +-compatible automorphism into its four canonical factors."""
    require_automorphism(alpha)
    lin = linear_part(alpha)
    plain_to_conj = [[lin[i][j] for j in (2, 3)] for i in (0, 1)]
    plain_to_plain = [[lin[i][j] for j in (0, 1)] for i in (0, 1)]
    if any(x for row in plain_to_conj for x in row) and any(x for row in plain_to_plain for x in row):
        raise NotAutomorphism("induced map mixes the two generator families")
    j_flag = any(x for row in plain_to_conj for x in row)
    # (gl o J)(e_i) = conj(gl) row i on e3, e4 and (gl o J)(e_i^+) = gl row i on e1, e2
    if j_flag:
        gl = [[x.conj() for x in row] for row in plain_to_conj]
        conj_block = [[lin[i][j] for j in (0, 1)] for i in (2, 3)]
        expected = gl
    else:
        gl = plain_to_plain
        conj_block = [[lin[i][j] for j in (2, 3)] for i in (2, 3)]
        expected = [[x.conj() for x in row] for row in gl]
    if conj_block != expected:
        raise NotAutomorphism("conjugate block is not the conjugate of the gl block")

    # (gl o J)^{-1} = J o gl^{-1}
    red_inv = gl2_aut(linalg.invert(gl))
    if j_flag:
        red_inv = j_aut() @ red_inv
    beta = alpha @ red_inv

    alg = _alg()
    b1 = beta(alg.gen(1)).project(bigrade=NEV_BIGRADE)
    b2 = beta(alg.gen(2)).project(bigrade=NEV_BIGRADE)
    gamma = beta @ nev_aut(-b1, -b2)
    a = _solve_inner_parameter(gamma)

    factors = SpinAutFactors(a, (b1, b2), gl, j_flag)
    if compose_spin_factors(factors) != alpha:
        raise DecompositionResidual("recomposed factors differ from the input")
    return factors


# --------------------------------------------------------------------------
# invariant subspaces


def spin_invariant_catalog() -> dict:
    """The Aut-invariant subspaces ``B, M^1..M^4, M^2∩Z, V, U, W`` of A."""
    alg = _alg()
    cat = {"B": Subspace(alg, [alg.one()], name="B")}
    for l in range(1, 5):
        cat[f"M{l}"] = ideal_power_by_grade(alg, l)
        cat[f"M{l}"].name = f"M{l}"
    cat["M2∩Z"] = cat["M2"].intersect(center(alg), name="M2∩Z")
    cat["V"] = bigrade_space((1, 0), (0, 1), (2, 0), (0, 2), (2, 1), (1, 2), (2, 2), name="V")
    cat["U"] = bigrade_space((2, 0), (0, 2), (2, 1), (1, 2), (2, 2), name="U")
    cat["W"] = bigrade_space((1, 1), (2, 1), (1, 2), (2, 2), name="W")
    return cat


def dual_invariant_catalog() -> dict:
    """Annihilators in the dual space of the invariant subspaces."""
    alg = _alg()
    p = spin_invariant_catalog()
    b = p["B"]
    out = {
        "Ann(M)": annihilator(p["M1"]),
        "Ann(B)": annihilator(b),
        "Ann(B⊕M2)": annihilator(direct_sum(b, p["M2"])),
        "Ann(B⊕M4)": annihilator(direct_sum(b, p["M4"])),
        "Ann(Z)": annihilator(center(alg)),
        "Ann(B⊕V)": annihilator(direct_sum(b, p["V"])),
        "Ann(B⊕W)": annihilator(direct_sum(b, p["W"])),
    }
    for k, v in out.items():
        v.name = k
    return out


def dual_action(alpha: LinearOperator, f: DualFunctional, alpha_inv: LinearOperator | None = None) -> DualFunctional:
    """Left action on the dual: ``f -> f o alpha^{-1}``."""
    if alpha_inv is None:
        alpha_inv = alpha.inverse()
    return f.pullback(alpha_inv)


def maximal_form_scaling(alpha: LinearOperator) -> RealScalar:
    """The factor ``lam`` with ``alpha(e1e2e3e4) = lam e1e2e3e4``."""
    img = alpha.cols[TOP]
    if set(img.terms) != {TOP}:
        raise NotAutomorphism("top form is not mapped to a multiple of itself")
    lam = img.coeff(TOP)
    if not lam.is_real():
        raise NotAutomorphism("maximal form scaling is not real")
    return lam.re


# --------------------------------------------------------------------------
# sampling

SAMPLE_KINDS = ("dressing", "gl", "full", "j-composed")


def random_spin_factors(rng, kind: str = "full") -> SpinAutFactors:
    """Random canonical factors.

    ``dressing``: gl = I and no J.  ``gl``: grading-preserving part only
    (random gl, random J).  ``full``: everything random.  ``j-composed``:
    like ``full`` with J forced on.
    """
    if kind not in SAMPLE_KINDS:
        raise ValueError(f"kind must be one of {SAMPLE_KINDS}")
    alg = _alg()
    a = alg.zero()
    bs = (alg.zero(), alg.zero())
    gl = _I2
    j = False
    if kind != "gl":
        for b in inner_parameter_basis():
            t = rand_rational(rng)
            if t:
                a = a + b.scale(t)
        nev_masks = [m for m in alg.basis if alg.bigrade(m) == NEV_BIGRADE]
        bs = tuple(alg.element({m: rand_scalar(rng) for m in nev_masks}) for _ in range(2))
    if kind != "dressing":
        gl = rand_invertible(rng, 2)
        j = bool(rng.integers(0, 2)) if kind in ("gl", "full") else True
    return SpinAutFactors(a, bs, gl, j)
