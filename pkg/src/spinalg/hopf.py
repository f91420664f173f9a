"""Hopf structure on the spin algebra for a fixed bigrading.

The counit is the scalar part, the antipode negates odd forms, the swap
involution multiplies ``x_{pq} ⊗ y_{rs}`` by ``(-1)^(pr+qs)``, and the coproduct
is the algebra homomorphism into ``A ⊗ A`` (with the skew product) that makes
the four generators primitive.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .algebra import AlgebraElement, LinearOperator, make_spin_algebra, popcount
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "TensorElement",
    "tensor",
    "counit",
    "antipode",
    "swap_sign",
    "swap_involution",
    "flip",
    "skew_multiply",
    "coproduct",
    "multiply_out",
    "apply_slot",
    "verify_hopf_axioms",
    "coalgebra_deformation_check",
]


class TensorElement:
    """Element of ``A ⊗ ... ⊗ A`` as a sparse map from monomial tuples to scalars."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {k: c for k, c in terms.items() if c}

    @property
    def arity(self):
        for k in self.terms:
            return len(k)
        return None

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return TensorElement(self.algebra, out)

    def __neg__(self):
        return TensorElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = as_scalar(s)
        return TensorElement(self.algebra, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return skew_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> dict:
        from .algebra import monomial_key

        pos = self.algebra.position
        keys = sorted(self.terms, key=lambda k: tuple(pos[m] for m in k))
        return {"coeffs": {"|".join(monomial_key(m) for m in k): self.terms[k].to_json() for k in keys}}

    @classmethod
    def from_json(cls, obj, algebra=None) -> "TensorElement":
        from .algebra import parse_monomial_key

        alg = algebra or make_spin_algebra()
        terms = {}
        for key, val in obj["coeffs"].items():
            terms[tuple(parse_monomial_key(p, alg.n) for p in key.split("|"))] = Scalar.from_json(val)
        return cls(alg, terms)

    def __repr__(self):
        from .algebra import monomial_key

        parts = [f"({c}){'⊗'.join('e' + monomial_key(m) if m else '1' for m in k)}" for k, c in self.terms.items()]
        return "TensorElement(" + (" + ".join(parts) or "0") + ")"


def tensor(*factors: AlgebraElement) -> TensorElement:
    """``x ⊗ y ⊗ ...`` of algebra elements."""
    alg = factors[0].algebra
    terms = {}
    for combo in itertools.product(*(f.terms.items() for f in factors)):
        key = tuple(m for m, _ in combo)
        c = ONE
        for _, x in combo:
            c = c * x
        terms[key] = terms.get(key, ZERO) + c
    return TensorElement(alg, terms)


def counit(x: AlgebraElement) -> Scalar:
    return x.scalar_part()


def antipode(x: AlgebraElement) -> AlgebraElement:
    """``x_ev - x_od``."""
    return AlgebraElement(x.algebra, {m: (-c if popcount(m) % 2 else c) for m, c in x.terms.items()})


def swap_sign(algebra, left: int, right: int) -> int:
    p, q = algebra.bigrade(left)
    r, s = algebra.bigrade(right)
    return -1 if (p * r + q * s) % 2 else 1


def swap_involution(t: TensorElement) -> TensorElement:
    alg = t.algebra
    return TensorElement(alg, {(l, r): (c if swap_sign(alg, l, r) > 0 else -c) for (l, r), c in t.terms.items()})


def flip(t: TensorElement) -> TensorElement:
    """Plain tensor swap ``x ⊗ y -> y ⊗ x``."""
    return TensorElement(t.algebra, {(r, l): c for (l, r), c in t.terms.items()})


def skew_multiply(t1: TensorElement, t2: TensorElement) -> TensorElement:
    """``(x ⊗ y)(u ⊗ v) = (-1)^(bigrade(y)·bigrade(u)) xu ⊗ yv``."""
    alg = t1.algebra
    sign = alg.mono_sign
    out = {}
    for (x, y), c1 in t1.terms.items():
        for (u, v), c2 in t2.terms.items():
            if x & u or y & v:
                continue
            sg = swap_sign(alg, y, u) * sign(x, u) * sign(y, v)
            c = c1 * c2
            key = (x | u, y | v)
            out[key] = out.get(key, ZERO) + (c if sg > 0 else -c)
    return TensorElement(alg, out)


@lru_cache(maxsize=None)
def _coproduct_table() -> tuple:
    alg = make_spin_algebra()
    gen_cop = []
    for i in range(alg.n):
        bit = 1 << i
        gen_cop.append(TensorElement(alg, {(0, bit): ONE, (bit, 0): ONE}))
    table = []
    for m in range(alg.dim):
        t = TensorElement(alg, {(0, 0): ONE})
        for i in range(alg.n):
            if m >> i & 1:
                t = skew_multiply(t, gen_cop[i])
        table.append(t)
    return tuple(table)


def coproduct(x: AlgebraElement) -> TensorElement:
    table = _coproduct_table()
    out = {}
    for m, c in x.terms.items():
        for k, v in table[m].terms.items():
            out[k] = out.get(k, ZERO) + c * v
    return TensorElement(x.algebra, out)


def coproduct_of_monomial(mask: int) -> TensorElement:
    return _coproduct_table()[mask]


def _terms_of(obj):
    if isinstance(obj, TensorElement):
        return obj.terms
    if isinstance(obj, AlgebraElement):
        return {(m,): c for m, c in obj.terms.items()}
    return {(): as_scalar(obj)}


def apply_slot(t: TensorElement, slot: int, fn) -> TensorElement:
    """Apply a linear map (given on basis monomials) to one tensor slot.

    ``fn(mask)`` may return a scalar, an element or a tensor; the slot is
    replaced by zero, one or several slots accordingly.
    """
    alg = t.algebra
    alg_mono = alg.mono
    cache = {}
    out = {}
    for key, c in t.terms.items():
        m = key[slot]
        img = cache.get(m)
        if img is None:
            img = cache[m] = _terms_of(fn(alg_mono(m)))
        for sub, v in img.items():
            nk = key[:slot] + sub + key[slot + 1 :]
            out[nk] = out.get(nk, ZERO) + c * v
    return TensorElement(alg, out)


def _collapse(t: TensorElement) -> AlgebraElement:
    out = {}
    for key, c in t.terms.items():
        out[key[0]] = out.get(key[0], ZERO) + c
    return AlgebraElement(t.algebra, out)


def multiply_out(t: TensorElement) -> AlgebraElement:
    """``x ⊗ y -> xy`` (ordinary product of the algebra)."""
    alg = t.algebra
    out = alg.zero()
    for (l, r), c in t.terms.items():
        sg = alg.mono_sign(l, r)
        if sg:
            out = out + alg.mono(l | r).scale(c if sg > 0 else -c)
    return out


def plus_tensor(t: TensorElement) -> TensorElement:
    """Conjugate-linear ``x ⊗ y -> x^+ ⊗ y^+``."""
    alg = t.algebra
    out = {}
    for key, c in t.terms.items():
        sg = 1
        nk = []
        for m in key:
            s, m2 = alg.plus_monomial(m)
            sg *= s
            nk.append(m2)
        cc = c.conj()
        out[tuple(nk)] = cc if sg > 0 else -cc
    return TensorElement(alg, out)


def _op_fn(op):
    if op is None:
        return lambda x: x
    if isinstance(op, LinearOperator):
        return op
    return op


def tensor_op(t: TensorElement, *ops) -> TensorElement:
    """``(f ⊗ g ⊗ ...)(t)`` with ``None`` standing for the identity."""
    for slot, op in enumerate(ops):
        if op is not None:
            t = apply_slot(t, slot, _op_fn(op))
    return t


# --------------------------------------------------------------------------
# axiom checks


def _first_failure(items):
    for label, ok in items:
        if not ok:
            return label
    return None


def verify_hopf_axioms(skew_samples: int = 400, seed: int = 0) -> dict:
    """Exact checks of the Hopf relations; returns ``{name: {"pass", "witness"}}``.

    Skew-product associativity is checked on ``skew_samples`` seeded triples
    of basis tensors (the full set has 256^3 members).
    """
    from .algebra import monomial_key

    alg = make_spin_algebra()
    monos = [alg.mono(m) for m in range(alg.dim)]
    report = {}

    def record(name, failures):
        w = _first_failure(failures)
        report[name] = {"pass": w is None, "witness": w}

    def key(*ms):
        return "|".join(monomial_key(m) for m in ms)

    cop = [coproduct(x) for x in monos]

    record(
        "coproduct_multiplicative",
        (
            (key(s, t), coproduct(monos[s] * monos[t]) == skew_multiply(cop[s], cop[t]))
            for s in range(alg.dim)
            for t in range(alg.dim)
        ),
    )
    record(
        "coassociativity",
        ((key(m), apply_slot(cop[m], 0, coproduct) == apply_slot(cop[m], 1, coproduct)) for m in range(alg.dim)),
    )
    record(
        "counit_left",
        ((key(m), _collapse(apply_slot(cop[m], 0, counit)) == monos[m]) for m in range(alg.dim)),
    )
    record(
        "counit_right",
        ((key(m), _collapse(apply_slot(cop[m], 1, counit)) == monos[m]) for m in range(alg.dim)),
    )
    record(
        "antipode_left",
        ((key(m), multiply_out(apply_slot(cop[m], 0, antipode)) == alg.one().scale(counit(monos[m]))) for m in range(alg.dim)),
    )
    record(
        "antipode_right",
        ((key(m), multiply_out(apply_slot(cop[m], 1, antipode)) == alg.one().scale(counit(monos[m]))) for m in range(alg.dim)),
    )
    basis2 = [TensorElement(alg, {(l, r): ONE}) for l in range(alg.dim) for r in range(alg.dim)]
    record("swap_involutive", ((key(*next(iter(t.terms))), swap_involution(swap_involution(t)) == t) for t in basis2))
    record(
        "braided_cocommutative",
        ((key(m), flip(swap_involution(cop[m])) == cop[m]) for m in range(alg.dim)),
    )
    record(
        "coproduct_plus_compatible",
        ((key(m), coproduct(monos[m].plus()) == plus_tensor(cop[m])) for m in range(alg.dim)),
    )
    unit = TensorElement(alg, {(0, 0): ONE})
    record("skew_unit", ((key(*next(iter(t.terms))), skew_multiply(unit, t) == t == skew_multiply(t, unit)) for t in basis2))

    from .sampling import rng_for

    rng = rng_for(seed, 0, 7)
    triples = [tuple(int(i) for i in rng.integers(0, len(basis2), 3)) for _ in range(skew_samples)]
    record(
        "skew_associative",
        (
            (
                ";".join(key(*next(iter(basis2[i].terms))) for i in tr),
                skew_multiply(skew_multiply(basis2[tr[0]], basis2[tr[1]]), basis2[tr[2]])
                == skew_multiply(basis2[tr[0]], skew_multiply(basis2[tr[1]], basis2[tr[2]])),
            )
            for tr in triples
        ),
    )
    record(
        "coproduct_well_defined",
        (
            (
                key(1 << (i - 1), 1 << (j - 1)),
                skew_multiply(cop[1 << (i - 1)], cop[1 << (j - 1)])
                == skew_multiply(cop[1 << (j - 1)], cop[1 << (i - 1)]).scale(alg.commutation_sign(i, j)),
            )
            for i in range(1, 5)
            for j in range(i, 5)
            if not (i == j and alg.commutation_sign(i, j) > 0)
        ),
    )
    return report


def coalgebra_deformation_check(alpha: LinearOperator) -> dict:
    """Compare ``(alpha ⊗ alpha) o Δ`` with ``Δ o alpha`` on every monomial.

    Also reports whether ``alpha`` commutes with the antipode and with the
    swap involution.  ``status`` is decided by the coproduct comparison.
    """
    from .algebra import monomial_key

    alg = alpha.algebra
    witness = None
    for m in range(alg.dim):
        lhs = tensor_op(coproduct_of_monomial(m), alpha, alpha)
        rhs = coproduct(alpha.cols[m])
        if lhs != rhs:
            witness = monomial_key(m)
            break
    antipode_ok = all(alpha(antipode(alg.mono(m))) == antipode(alpha.cols[m]) for m in range(alg.dim))
    swap_ok = True
    for l in range(alg.dim):
        for r in range(alg.dim):
            t = TensorElement(alg, {(l, r): ONE})
            if tensor_op(swap_involution(t), alpha, alpha) != swap_involution(tensor_op(t, alpha, alpha)):
                swap_ok = False
                break
        if not swap_ok:
            break
    return {
        "status": "preserved" if witness is None else "deformed",
        "coproduct_preserved": witness is None,
        "antipode_preserved": antipode_ok,
        "swap_preserved": swap_ok,
        "witness": witness,
    }
