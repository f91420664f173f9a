"""Lorentz geometry carried by the spin algebra's Hopf structure.

The coproduct of a top form ``omega = lam e1e2e3e4`` pairs real functionals on
the (1,1) bigrade into a symmetric bilinear form.  Choosing four such
functionals (a Pauli injection) turns each of them into an operator on the
algebra via ``s -> (s ⊗ I) o Δ``; those operators yield a spacetime metric,
gamma operators obeying the Clifford relations on the two Dirac subspaces, a
Dirac adjoint and, for a causal vector ``u``, a positive semidefinite
sesquilinear form.

All matrices here are lists of lists of exact scalars.  Spacetime indices run
0..3 with index 0 the timelike direction of the default injection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .algebra import (
    AlgebraElement,
    DualFunctional,
    LinearOperator,
    Subspace,
    left_mult,
    make_spin_algebra,
    mask_of,
)
from .errors import (
    DegenerateMetric,
    DependentInjection,
    InvalidParameter,
    NotCausal,
    NotConformal,
    SingularMatrix,
)
from .hopf import coproduct, coproduct_of_monomial, counit
from .sampling import rand_rational
from .scalar import HALF, I, SQRT2, ZERO, RealScalar, Scalar, as_real, as_scalar
from .spin import TOP, dual_action, dual_invariant_catalog

__all__ = [
    "MaximalForm",
    "OMEGA0",
    "PauliMap",
    "SpacetimeMetric",
    "HilbertAdjoint",
    "signature",
    "metric_G",
    "pauli_embedding",
    "default_pauli_injection",
    "random_pauli_injection",
    "transformed_pauli_map",
    "pauli_operator",
    "spacetime_metric",
    "canonical_orientation",
    "is_causal",
    "require_causal",
    "random_causal_vector",
    "dirac_subspaces",
    "gamma",
    "gamma_operators",
    "clifford_check",
    "dirac_adjoint",
    "dirac_gram_scan",
    "inner_product",
    "inner_product_matrix",
    "psd_check",
    "hilbert_adjoint",
    "conformal_action_check",
    "inner_product_invariance",
]

_ALG = make_spin_algebra()


def _real_of(s: Scalar, what: str) -> RealScalar:
    if not s.is_real():
        raise InvalidParameter(f"{what} is not real: {s}")
    return s.re


# --------------------------------------------------------------------------
# maximal forms


@dataclass(frozen=True)
class MaximalForm:
    """``lam * e1e2e3e4`` with real, nonzero ``lam``."""

    lam: RealScalar = RealScalar(1)

    def __post_init__(self):
        lam = as_real(self.lam)
        if not lam:
            raise InvalidParameter("a maximal form needs a nonzero coefficient")
        object.__setattr__(self, "lam", lam)

    @property
    def omega(self) -> AlgebraElement:
        return _ALG.mono(TOP).scale(Scalar(self.lam))

    @property
    def positive(self) -> bool:
        """Whether this form lies on the same side as ``e1e2e3e4``."""
        return self.lam.sign() > 0

    @classmethod
    def from_element(cls, x: AlgebraElement) -> "MaximalForm":
        if set(x.terms) != {TOP}:
            raise InvalidParameter("not a multiple of the top monomial")
        return cls(_real_of(x.coeff(TOP), "top coefficient"))

    def scaled(self, c) -> "MaximalForm":
        return MaximalForm(self.lam * as_real(c))


OMEGA0 = MaximalForm(RealScalar(1))


def signature(form) -> tuple:
    """Sylvester inertia ``(n_plus, n_minus, n_zero)`` of a symmetric matrix."""
    return linalg.inertia([[as_scalar(x) for x in row] for row in form])


# --------------------------------------------------------------------------
# Pauli maps


@lru_cache(maxsize=None)
def _pauli_target() -> Subspace:
    return dual_invariant_catalog()["Ann(B⊕V)"]


def pauli_embedding(s: DualFunctional) -> LinearOperator:
    """The operator ``x -> (s ⊗ I) Δ(x)``."""

    def column(m):
        out = {}
        for (l, r), c in coproduct_of_monomial(m).terms.items():
            f = s.terms.get(l)
            if f is not None:
                out[r] = out.get(r, ZERO) + c * f
        return AlgebraElement(_ALG, out)

    return LinearOperator(_ALG, [column(m) for m in range(_ALG.dim)])


@dataclass(frozen=True)
class PauliMap:
    """Four real functionals on the (1,1) bigrade and their operators."""

    injection: tuple
    operators: tuple

    @classmethod
    def from_injection(cls, injection) -> "PauliMap":
        injection = tuple(injection)
        if len(injection) != 4:
            raise InvalidParameter("a Pauli injection has exactly four functionals")
        target = _pauli_target()
        for k, s in enumerate(injection):
            if not s.is_real():
                raise InvalidParameter(f"injection entry {k} is not real")
            if not target.contains(s):
                raise InvalidParameter(f"injection entry {k} does not vanish on B⊕V")
        if linalg.rank([s.coords() for s in injection]) < 4:
            raise DependentInjection("injection functionals are linearly dependent")
        return cls(injection, tuple(pauli_embedding(s) for s in injection))

    def remixed(self, r) -> "PauliMap":
        """Injection ``s'_a = sum_b r[a][b] s_b`` for a real matrix ``r``."""
        new = []
        for row in r:
            acc = DualFunctional(_ALG, {})
            for c, s in zip(row, self.injection):
                acc = acc + s.scale(as_scalar(c))
            new.append(acc)
        return PauliMap.from_injection(new)


@lru_cache(maxsize=None)
def default_pauli_injection() -> PauliMap:
    """Identity plus the three Pauli patterns on the (e1|e2) x (e3|e4) grid.

    The common factor ``sqrt(2)/2`` makes ``g(sigma, omega0)`` come out as
    ``diag(1, -1, -1, -1)``; without it every entry doubles.
    """
    f = {ij: DualFunctional.dual_basis(_ALG, mask_of(ij)) for ij in ((1, 3), (1, 4), (2, 3), (2, 4))}
    raw = [
        f[1, 3] + f[2, 4],
        f[1, 4] + f[2, 3],
        (f[1, 4] - f[2, 3]).scale(I),
        f[1, 3] - f[2, 4],
    ]
    k = SQRT2 * HALF
    return PauliMap.from_injection([s.scale(k) for s in raw])


def random_pauli_injection(rng) -> PauliMap:
    """The default injection remixed by a random rational invertible matrix."""
    while True:
        r = [[Scalar(rand_rational(rng)) for _ in range(4)] for _ in range(4)]
        if linalg.det(r):
            return default_pauli_injection().remixed(r)


def transformed_pauli_map(alpha: LinearOperator, sigma: PauliMap | None = None) -> PauliMap:
    """Pauli map built from the moved coproduct ``(alpha ⊗ alpha) Δ alpha^-1``.

    The injection moves along as ``s o alpha^-1``.  The operators are
    evaluated from the moved coproduct term by term rather than by
    conjugating the old operators.
    """
    sigma = sigma or default_pauli_injection()
    inv = alpha.inverse()
    moved = [dual_action(alpha, s, inv) for s in sigma.injection]

    def delta_moved(m):
        out = {}
        for (l, r), c in coproduct(inv.cols[m]).terms.items():
            for l2, cl in alpha.cols[l].terms.items():
                for r2, cr in alpha.cols[r].terms.items():
                    out[(l2, r2)] = out.get((l2, r2), ZERO) + c * cl * cr
        return out

    table = [delta_moved(m) for m in range(_ALG.dim)]
    ops = []
    for s in moved:
        cols = []
        for m in range(_ALG.dim):
            out = {}
            for (l, r), c in table[m].items():
                f = s.terms.get(l)
                if f is not None:
                    out[r] = out.get(r, ZERO) + c * f
            cols.append(AlgebraElement(_ALG, out))
        ops.append(LinearOperator(_ALG, cols))
    return PauliMap(tuple(moved), tuple(ops))


def pauli_operator(sigma: PauliMap, u) -> LinearOperator:
    """``u^a sigma_a``."""
    u = _vector(u)
    acc = LinearOperator.zero(_ALG)
    for c, op in zip(u, sigma.operators):
        if c:
            acc = acc + op.scale(Scalar(c))
    return acc


def _vector(u) -> tuple:
    u = tuple(as_real(c) for c in u)
    if len(u) != 4:
        raise InvalidParameter("spacetime vectors have four components")
    return u


# --------------------------------------------------------------------------
# metrics


def metric_G(omega: MaximalForm = OMEGA0, functionals=None) -> list:
    """``G(a, b) = (a ⊗ b)(Δ omega)`` on a basis of real functionals.

    The default basis is the default Pauli injection.
    """
    if functionals is None:
        functionals = default_pauli_injection().injection
    delta = coproduct(omega.omega).terms
    out = []
    for a in functionals:
        row = []
        for b in functionals:
            acc = ZERO
            for (l, r), c in delta.items():
                fa = a.terms.get(l)
                if fa is not None:
                    fb = b.terms.get(r)
                    if fb is not None:
                        acc = acc + c * fa * fb
            row.append(acc)
        out.append(row)
    return out


@dataclass(frozen=True)
class SpacetimeMetric:
    g: tuple
    g_inv: tuple
    inertia: tuple

    @property
    def is_lorentz(self) -> bool:
        return self.inertia in ((1, 3, 0), (3, 1, 0))

    def __call__(self, u, v) -> RealScalar:
        u, v = _vector(u), _vector(v)
        acc = RealScalar(0)
        for a in range(4):
            for b in range(4):
                if u[a] and v[b]:
                    acc = acc + self.g[a][b] * u[a] * v[b]
        return acc


def spacetime_metric(sigma: PauliMap | None = None, omega: MaximalForm = OMEGA0) -> SpacetimeMetric:
    """``g_ab = ε(sigma_a(sigma_b(omega)))`` with its exact inverse."""
    sigma = sigma or default_pauli_injection()
    w = omega.omega
    half = [op(w) for op in sigma.operators]
    g = [[_real_of(counit(sa(hb)), "metric entry") for hb in half] for sa in sigma.operators]
    for a in range(4):
        for b in range(a):
            if g[a][b] != g[b][a]:
                raise DegenerateMetric(f"metric is not symmetric at ({a},{b})")
    try:
        g_inv = linalg.invert(g)
    except SingularMatrix:
        raise DegenerateMetric("spacetime metric is singular") from None
    return SpacetimeMetric(tuple(map(tuple, g)), tuple(map(tuple, g_inv)), signature(g))


_E0 = (RealScalar(1), RealScalar(0), RealScalar(0), RealScalar(0))


@lru_cache(maxsize=None)
def canonical_orientation() -> MaximalForm:
    """The sign of ``e1e2e3e4`` for which e0 is timelike and the form is PSD.

    Both signs are tried; the winner must give inertia (1, 3) and a positive
    semidefinite inner product for ``u = e0``.
    """
    for lam in (RealScalar(1), RealScalar(-1)):
        om = MaximalForm(lam)
        met = spacetime_metric(None, om)
        if met.inertia != (1, 3, 0) or met(_E0, _E0).sign() <= 0:
            continue
        if psd_check(_E0, None, om)["pass"]:
            return om
    raise DegenerateMetric("no orientation gives a Lorentz metric with a PSD inner product")


def is_causal(u, metric: SpacetimeMetric | None = None) -> bool:
    """Future directed timelike or null: ``g(u,u) >= 0`` and ``g(u, e0) > 0``."""
    metric = metric or spacetime_metric(None, canonical_orientation())
    return metric(u, u).sign() >= 0 and metric(u, _E0).sign() > 0


def require_causal(u, metric: SpacetimeMetric | None = None):
    if not is_causal(u, metric):
        raise NotCausal(f"vector {[str(c) for c in _vector(u)]} is not future causal")


def random_causal_vector(rng) -> tuple:
    """``(t, x, y, z)`` with ``t >= |x| + |y| + |z|`` and ``t > 0``.

    With the default injection this lies in the closed future cone.  Every
    fourth draw (in expectation) is put on the boundary ``t = |x|+|y|+|z|``,
    which is null when a single spatial component is nonzero.
    """
    xs = [RealScalar(rand_rational(rng)) for _ in range(3)]
    t = RealScalar(0)
    for x in xs:
        t = t + (x if x.sign() >= 0 else -x)
    if int(rng.integers(0, 4)) == 0 and t:
        return (t, *xs)
    return (t + RealScalar(rand_rational(rng, nonzero=True) ** 2), *xs)


# --------------------------------------------------------------------------
# Dirac structure


def dirac_subspaces() -> tuple:
    """``(D+, D-)`` spanned by bigrades (1,0),(2,1) and (0,1),(1,2)."""
    dp = Subspace.from_masks(_ALG, _ALG.masks(bigrade=(1, 0)) + _ALG.masks(bigrade=(2, 1)), name="D+")
    dm = Subspace.from_masks(_ALG, _ALG.masks(bigrade=(0, 1)) + _ALG.masks(bigrade=(1, 2)), name="D-")
    return dp, dm


def gamma_operators(sigma: PauliMap | None = None, omega: MaximalForm | None = None) -> tuple:
    """``gamma_a = sqrt(2) (sigma_a + left multiplication by sigma_a(omega))``."""
    sigma = sigma or default_pauli_injection()
    w = (omega or canonical_orientation()).omega
    return tuple((op + left_mult(op(w))).scale(SQRT2) for op in sigma.operators)


def gamma(u, sigma: PauliMap | None = None, omega: MaximalForm | None = None) -> LinearOperator:
    acc = LinearOperator.zero(_ALG)
    for c, op in zip(_vector(u), gamma_operators(sigma, omega)):
        if c:
            acc = acc + op.scale(Scalar(c))
    return acc


def clifford_check(sigma: PauliMap | None = None, omega: MaximalForm | None = None, vectors=None) -> dict:
    """Test ``(gamma_a gamma_b + gamma_b gamma_a) d = 2 g_ab d`` on given vectors.

    ``vectors`` defaults to the monomial bases of D+ and D-.  Failures are
    collected, never raised.
    """
    sigma = sigma or default_pauli_injection()
    omega = omega or canonical_orientation()
    met = spacetime_metric(sigma, omega)
    gam = gamma_operators(sigma, omega)
    if vectors is None:
        dp, dm = dirac_subspaces()
        vectors = [_ALG.mono(m) for m in sorted(dp.masks() | dm.masks(), key=_ALG.position.get)]
    failures = []
    checked = 0
    for a in range(4):
        for b in range(a, 4):
            two_g = Scalar(met.g[a][b] * 2)
            for k, d in enumerate(vectors):
                lhs = gam[a](gam[b](d)) + gam[b](gam[a](d))
                checked += 1
                if lhs != d.scale(two_g):
                    failures.append({"a": a, "b": b, "vector": k})
    return {"pass": not failures, "checked": checked, "failures": failures, "metric": met}


def dirac_adjoint(x: AlgebraElement, sigma: PauliMap | None = None, omega: MaximalForm | None = None) -> DualFunctional:
    """``xbar(y) = 1/2 g^ab ε(sigma_a(x^+ sigma_b(y) + sigma_b(x^+) y))``."""
    sigma = sigma or default_pauli_injection()
    omega = omega or canonical_orientation()
    met = spacetime_metric(sigma, omega)
    ops = sigma.operators
    xp = x.plus()
    sb_xp = [op(xp) for op in ops]
    out = {}
    for m in range(_ALG.dim):
        y = _ALG.mono(m)
        acc = ZERO
        for b in range(4):
            inner = xp * ops[b](y) + sb_xp[b] * y
            if not inner:
                continue
            for a in range(4):
                gab = met.g_inv[a][b]
                if gab:
                    acc = acc + Scalar(gab) * counit(ops[a](inner))
        if acc:
            out[m] = acc * HALF
    return DualFunctional(_ALG, out)


def dirac_gram_scan(sigma: PauliMap | None = None, omega: MaximalForm | None = None) -> dict:
    """Rank of ``[dirac_adjoint(d_i)(d_j)]`` for each block of D± x D±."""
    dp, dm = dirac_subspaces()
    bases = {
        "D+": sorted(dp.masks(), key=_ALG.position.get),
        "D-": sorted(dm.masks(), key=_ALG.position.get),
    }
    bars = {m: dirac_adjoint(_ALG.mono(m), sigma, omega) for ms in bases.values() for m in ms}
    out = {}
    for left, lm in bases.items():
        for right, rm in bases.items():
            gram = [[bars[p].terms.get(q, ZERO) for q in rm] for p in lm]
            r = linalg.rank(gram)
            out[f"{left}x{right}"] = {"rank": r, "full": r == len(lm), "gram": gram}
    return out


# --------------------------------------------------------------------------
# inner product


def _u_functional(u, sigma: PauliMap) -> DualFunctional:
    """``z -> u^a ε(sigma_a(z))`` read off the operators."""
    op = pauli_operator(sigma, u)
    return DualFunctional(_ALG, {m: counit(col) for m, col in enumerate(op.cols)})


def _augment(x: AlgebraElement) -> AlgebraElement:
    return x.project(predicate=lambda m: m != 0)


def inner_product(u, sigma: PauliMap | None = None):
    """``(x, y) -> ε(x^+ y) + u^a ε(sigma_a((x - ε x)^+ (y - ε y)))``.

    Conjugate-linear in the first slot.  Causality of ``u`` is not checked
    here; ``psd_check`` does that.
    """
    sigma = sigma or default_pauli_injection()
    phi = _u_functional(u, sigma)

    def form(x: AlgebraElement, y: AlgebraElement) -> Scalar:
        return counit(x.plus() * y) + phi(_augment(x).plus() * _augment(y))

    return form


def inner_product_matrix(u, sigma: PauliMap | None = None) -> list:
    """``H[p][q] = <e_p, e_q>`` in graded basis order."""
    form = inner_product(u, sigma)
    monos = [_ALG.mono(m) for m in _ALG.basis]
    return [[form(x, y) for y in monos] for x in monos]


def psd_check(u, sigma: PauliMap | None = None, omega: MaximalForm | None = None) -> dict:
    """Exact inertia of the inner-product matrix for a future causal ``u``."""
    sigma = sigma or default_pauli_injection()
    if omega is not None:
        met = spacetime_metric(sigma, omega)
        require_causal(u, met)
    else:
        require_causal(u, spacetime_metric(sigma, canonical_orientation()))
    h = inner_product_matrix(u, sigma)
    hermitian = all(h[p][q] == h[q][p].conj() for p in range(16) for q in range(p, 16))
    n_plus, n_minus, n_zero = linalg.inertia(h)
    return {"pass": hermitian and n_minus == 0, "hermitian": hermitian, "inertia": (n_plus, n_minus, n_zero)}


@dataclass(frozen=True)
class HilbertAdjoint:
    """``T^dagger`` on the definite part, with the null directions reported.

    ``operator`` acts as the adjoint on ``definite`` and sends ``kernel`` to
    zero; ``degenerate`` is true when the kernel is nontrivial.
    """

    operator: LinearOperator
    definite: tuple
    kernel: tuple

    @property
    def degenerate(self) -> bool:
        return bool(self.kernel)


def hilbert_adjoint(t: LinearOperator, u, sigma: PauliMap | None = None) -> HilbertAdjoint:
    h = inner_product_matrix(u, sigma)
    n = len(h)
    kernel = linalg.nullspace(h, n)
    # range(H) is the standard orthogonal complement of ker(H) since H is Hermitian
    pivots = linalg.rref(h)[1]
    definite = [[h[i][j] for i in range(n)] for j in pivots]
    r = len(definite)
    frame = linalg.transpose(definite + [list(k) for k in kernel])
    frame_inv = linalg.invert(frame)
    basis_cols = linalg.transpose(definite)
    tm = t.matrix()
    # coordinates of T on the definite part, dropping kernel components
    c_full = linalg.matmul(frame_inv, linalg.matmul(tm, basis_cols))
    c = [row[:] for row in c_full[:r]]
    h_r = linalg.matmul(linalg.conj_transpose(basis_cols), linalg.matmul(h, basis_cols))
    m = linalg.matmul(linalg.invert(h_r), linalg.matmul(linalg.conj_transpose(c), h_r))
    # T^dagger = B M (definite coordinates of the input)
    proj = [row[:] for row in frame_inv[:r]]
    dag = linalg.matmul(basis_cols, linalg.matmul(m, proj))
    op = LinearOperator.from_matrix(_ALG, dag)
    to_el = lambda v: _ALG.from_coords(v)
    return HilbertAdjoint(op, tuple(to_el(v) for v in definite), tuple(to_el(k) for k in kernel))


# --------------------------------------------------------------------------
# automorphism actions


def conformal_action_check(alpha: LinearOperator, omega: MaximalForm | None = None) -> RealScalar:
    """The single ``lam > 0`` with ``G(alpha# a, alpha# b) = lam G(a, b)``.

    ``alpha# a = a o alpha^-1`` and ``a, b`` range over the default injection.
    """
    omega = omega or canonical_orientation()
    base = default_pauli_injection().injection
    inv = alpha.inverse()
    moved = [dual_action(alpha, s, inv) for s in base]
    g0 = metric_G(omega, base)
    g1 = metric_G(omega, moved)
    lam = None
    for a in range(4):
        for b in range(4):
            if g0[a][b]:
                lam = g1[a][b] / g0[a][b]
                break
        if lam is not None:
            break
    if lam is None or not lam.is_real() or lam.re.sign() <= 0:
        raise NotConformal(f"no positive ratio (candidate {lam})")
    for a in range(4):
        for b in range(4):
            if g1[a][b] != g0[a][b] * lam:
                raise NotConformal(f"entry ({a},{b}) breaks proportionality")
    return lam.re


def inner_product_invariance(alpha: LinearOperator, u, sigma: PauliMap | None = None) -> dict:
    """Whether ``<alpha x, alpha y> = <x, y>`` on all basis pairs, ``u`` fixed.

    Also reports whether the form is preserved up to one positive factor.
    """
    h0 = inner_product_matrix(u, sigma)
    form = inner_product(u, sigma)
    imgs = [alpha.cols[m] for m in _ALG.basis]
    h1 = [[form(x, y) for y in imgs] for x in imgs]
    exact = h0 == h1
    ratio = None
    scaled = True
    for p in range(16):
        for q in range(16):
            if h0[p][q]:
                r = h1[p][q] / h0[p][q]
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    scaled = False
            elif h1[p][q]:
                scaled = False
    scaled = scaled and ratio is not None and ratio.is_real() and ratio.re.sign() > 0
    return {"invariant": exact, "conformal": scaled, "ratio": ratio if scaled else None}
