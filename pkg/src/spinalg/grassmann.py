"""Automorphisms of a finite Grassmann algebra and their three-factor splitting.

Every automorphism factors uniquely as ``inner o nev o gl`` where ``gl`` is a
linear change of generators, ``nev`` adds odd terms of degree at least three
to each generator, and ``inner`` is conjugation by ``exp(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    LinearOperator,
    Subspace,
    center,
    check_invariance,
    commutator,
    conjugation_by_exp,
    ideal_power_by_grade,
    make_grassmann,
    popcount,
    unipotent_inverse,
)
from .automorphism import aut_from_images, endomorphism_from_images, linear_part, require_automorphism
from .errors import AlgebraMismatch, DecompositionResidual, InvalidParameter
from .sampling import rand_invertible, rand_scalar
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "GrassmannAutFactors",
    "make_grassmann",
    "aut_from_generator_images",
    "gl_aut",
    "nev_aut",
    "inner_aut",
    "canonical_inner_parameter",
    "compose_factors",
    "decompose_aut",
    "invariant_subspace_catalog",
    "check_invariance",
    "random_factors",
]


def _identity_matrix(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


@dataclass
class GrassmannAutFactors:
    """Parameters ``(a, (b_1..b_n), gl)`` of ``inner(a) o nev(b) o gl``."""

    algebra: AlgebraSpec
    inner_a: AlgebraElement = None
    nev_b: list = field(default=None)
    gl: list = field(default=None)

    def __post_init__(self):
        alg = self.algebra
        if self.inner_a is None:
            self.inner_a = alg.zero()
        if self.nev_b is None:
            self.nev_b = [alg.zero() for _ in range(alg.n)]
        if self.gl is None:
            self.gl = _identity_matrix(alg.n)
        self.nev_b = list(self.nev_b)
        self.gl = [[Scalar(0) + x for x in row] for row in self.gl]

    @classmethod
    def trivial(cls, algebra) -> "GrassmannAutFactors":
        return cls(algebra)

    def is_trivial(self) -> bool:
        return self == GrassmannAutFactors(self.algebra)

    def to_json(self) -> dict:
        return {
            "inner_a": self.inner_a.to_json(),
            "nev_b": [b.to_json() for b in self.nev_b],
            "gl": [[x.to_json() for x in row] for row in self.gl],
        }

    @classmethod
    def from_json(cls, obj) -> "GrassmannAutFactors":
        a = AlgebraElement.from_json(obj["inner_a"])
        bs = [AlgebraElement.from_json(b) for b in obj["nev_b"]]
        gl = [[Scalar.from_json(x) for x in row] for row in obj["gl"]]
        return cls(a.algebra, a, bs, gl)


def _require_grassmann(alg: AlgebraSpec):
    if alg.kind != "grassmann":
        raise AlgebraMismatch(f"expected a Grassmann algebra, got {alg.name}")


def aut_from_generator_images(images) -> LinearOperator:
    """Unique automorphism sending ``e_i`` to ``images[i-1]``."""
    images = list(images)
    alg = images[0].algebra
    _require_grassmann(alg)
    return aut_from_images(alg, images, exhaustive=True)


def gl_aut(algebra: AlgebraSpec, matrix) -> LinearOperator:
    """``e_i -> sum_j matrix[i][j] e_j``."""
    _require_grassmann(algebra)
    n = algebra.n
    if len(matrix) != n or any(len(r) != n for r in matrix):
        raise InvalidParameter(f"need an {n}x{n} matrix")
    if not linalg.det([[Scalar(0) + x for x in r] for r in matrix]):
        raise InvalidParameter("gl factor must be invertible")
    images = [sum((algebra.gen(j + 1).scale(matrix[i][j]) for j in range(n)), algebra.zero()) for i in range(n)]
    return endomorphism_from_images(algebra, images)


def _check_nev_parameter(b: AlgebraElement):
    for m in b.terms:
        if popcount(m) < 3 or popcount(m) % 2 == 0:
            raise InvalidParameter("nev parameters must lie in M^3 ∩ Λ_od")


def nev_aut(algebra: AlgebraSpec, bs) -> LinearOperator:
    """``e_i -> e_i + b_i`` with every ``b_i`` odd of degree >= 3."""
    _require_grassmann(algebra)
    bs = list(bs)
    if len(bs) != algebra.n:
        raise InvalidParameter(f"need {algebra.n} nev parameters")
    for b in bs:
        _check_nev_parameter(b)
    return endomorphism_from_images(algebra, [algebra.gen(i + 1) + bs[i] for i in range(algebra.n)])


def canonical_inner_parameter(a: AlgebraElement) -> AlgebraElement:
    """Odd, non-top part of ``a``: the components that act nontrivially."""
    n = a.algebra.n
    return a.project(predicate=lambda m: popcount(m) % 2 == 1 and popcount(m) < n)


def inner_aut(a: AlgebraElement) -> LinearOperator:
    """Conjugation ``z -> exp(a) z exp(a)^{-1}``."""
    _require_grassmann(a.algebra)
    return conjugation_by_exp(a)


def compose_factors(f: GrassmannAutFactors) -> LinearOperator:
    alg = f.algebra
    return inner_aut(f.inner_a) @ nev_aut(alg, f.nev_b) @ gl_aut(alg, f.gl)


def _inner_parameter_masks(alg: AlgebraSpec) -> list:
    return [m for m in alg.basis if popcount(m) % 2 == 1 and popcount(m) < alg.n]


def decompose_aut(alpha: LinearOperator) -> GrassmannAutFactors:
    """Factor an automorphism as ``inner(a) o nev(b) o gl``.

    The ``gl`` part is the induced action on ``M/M^2``.  Stripping it leaves a
    unipotent residual whose odd part on the generators gives the ``b_i``
    (inner automorphisms only add even terms), and whose remaining even part
    ``[a, e_i]`` is linear in ``a`` and solved exactly.
    """
    alg = alpha.algebra
    _require_grassmann(alg)
    require_automorphism(alpha)
    n = alg.n
    gl = linear_part(alpha)
    beta = alpha @ gl_aut(alg, linalg.invert(gl))

    bs = []
    for i in range(1, n + 1):
        b = beta(alg.gen(i)).project(parity="odd") - alg.gen(i)
        bs.append(b)
    try:
        nev = nev_aut(alg, bs)
    except InvalidParameter as exc:
        raise DecompositionResidual(str(exc)) from exc
    gamma = beta @ unipotent_inverse(nev)

    masks = _inner_parameter_masks(alg)
    a = alg.zero()
    if masks:
        rows = []
        rhs = []
        for i in range(1, n + 1):
            g = alg.gen(i)
            target = gamma(g) - g
            cols = [commutator(alg.mono(m), g) for m in masks]
            for r in alg.basis:
                rows.append([c.coeff(r) for c in cols])
                rhs.append(target.coeff(r))
        if linalg.rank(rows) != len(masks):
            raise DecompositionResidual("inner parameter is not uniquely determined")
        try:
            sol = linalg.solve(rows, rhs)
        except ZeroDivisionError as exc:
            raise DecompositionResidual("residual is not an inner automorphism") from exc
        a = alg.element(dict(zip(masks, sol)))

    factors = GrassmannAutFactors(alg, a, bs, gl)
    if compose_factors(factors) != alpha:
        raise DecompositionResidual("recomposed factors differ from the input")
    return factors


def invariant_subspace_catalog(n: int) -> list:
    """``B``, ``M^l`` (``l = 1..n``) and ``M^l ∩ Z(G)`` (``l = 2..n``)."""
    alg = make_grassmann(n)
    cat = [Subspace(alg, [alg.one()], name="B")]
    powers = [ideal_power_by_grade(alg, l) for l in range(1, n + 1)]
    cat.extend(powers)
    z = center(alg)
    for l in range(2, n + 1):
        cat.append(powers[l - 1].intersect(z, name=f"M^{l}∩Z"))
    return cat


def random_factors(n: int, rng) -> GrassmannAutFactors:
    """Random canonical factors with small rational complex coefficients."""
    alg = make_grassmann(n)
    a = alg.element({m: rand_scalar(rng) for m in _inner_parameter_masks(alg)})
    odd3 = [m for m in alg.basis if popcount(m) >= 3 and popcount(m) % 2 == 1]
    bs = [alg.element({m: rand_scalar(rng) for m in odd3}) for _ in range(n)]
    gl = rand_invertible(rng, n)
    return GrassmannAutFactors(alg, a, bs, gl)
