"""Automorphisms described by generator images.

An algebra endomorphism is fixed by where it sends the generators; the image
of ``e_S`` is the ordered product of the generator images.  These helpers are
shared by the Grassmann and spin modules.
"""

from __future__ import annotations

from . import linalg
from .algebra import AlgebraElement, AlgebraSpec, LinearOperator, indices
from .errors import NotAutomorphism, NotInvertible, RelationViolation


def relation_defects(algebra: AlgebraSpec, images) -> list:
    """Pairs ``(i, j)`` whose images break ``x_i x_j = s_ij x_j x_i``.

    Includes ``i == j``, which for anticommuting generators says ``x_i^2 = 0``.
    """
    bad = []
    n = algebra.n
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            s = algebra.commutation_sign(i, j)
            if i == j and s > 0:
                continue
            xi, xj = images[i - 1], images[j - 1]
            if xi * xj - (xj * xi).scale(s):
                bad.append((i, j))
    return bad


def endomorphism_from_images(algebra: AlgebraSpec, images) -> LinearOperator:
    images = list(images)
    if len(images) != algebra.n:
        raise ValueError(f"need {algebra.n} generator images")
    cols = []
    for m in range(algebra.dim):
        x = algebra.one()
        for i in indices(m):
            x = x * images[i - 1]
        cols.append(x)
    return LinearOperator(algebra, cols)


def generator_images(op: LinearOperator) -> list:
    return [op(g) for g in op.algebra.gens()]


def linear_part(op: LinearOperator) -> list:
    """Induced matrix on ``M/M^2``: row ``i`` holds the 1-form part of ``op(e_i)``."""
    alg = op.algebra
    return [[op(alg.gen(i)).coeff(1 << (j - 1)) for j in range(1, alg.n + 1)] for i in range(1, alg.n + 1)]


def aut_from_images(algebra: AlgebraSpec, images, exhaustive: bool = True) -> LinearOperator:
    """The automorphism extending ``e_i -> images[i]``.

    Raises :class:`RelationViolation` if the images break the defining
    relations and :class:`NotInvertible` if their monomials are dependent.
    """
    images = list(images)
    for x in images:
        if not isinstance(x, AlgebraElement) or x.algebra != algebra:
            raise RelationViolation("generator images must be elements of the algebra")
    bad = relation_defects(algebra, images)
    if bad:
        raise RelationViolation(f"relations fail for generator pairs {bad}")
    op = endomorphism_from_images(algebra, images)
    if exhaustive:
        if op.rank() != algebra.dim:
            raise NotInvertible("images of the monomials are linearly dependent")
        if not is_multiplicative(op):
            raise RelationViolation("extension is not multiplicative")
    elif linalg.rank(linear_part(op)) != algebra.n:
        raise NotInvertible("induced map on M/M^2 is singular")
    return op


def is_multiplicative(op: LinearOperator) -> bool:
    """``op(xy) = op(x) op(y)`` on every pair of basis monomials."""
    alg = op.algebra
    for s in range(alg.dim):
        xs = op.cols[s]
        for t in range(alg.dim):
            sg = alg.mono_sign(s, t)
            lhs = op.cols[s | t].scale(sg) if sg else alg.zero()
            if lhs != xs * op.cols[t]:
                return False
    return True


def is_automorphism(op: LinearOperator) -> bool:
    """Fast exact test: images obey the relations, ``op`` is the induced
    endomorphism, and the linear part is invertible (which suffices for a
    local algebra)."""
    alg = op.algebra
    images = generator_images(op)
    if relation_defects(alg, images):
        return False
    if op.cols[0] != alg.one():
        return False
    if endomorphism_from_images(alg, images) != op:
        return False
    if linalg.rank(linear_part(op)) != alg.n:
        return False
    if alg.is_spin and not commutes_with_plus(op):
        return False
    return True


def require_automorphism(op: LinearOperator) -> None:
    if not is_automorphism(op):
        raise NotAutomorphism("operator is not an algebra automorphism")


def commutes_with_plus(op: LinearOperator) -> bool:
    alg = op.algebra
    return all(op(alg.mono(m).plus()) == op.cols[m].plus() for m in range(alg.dim))
