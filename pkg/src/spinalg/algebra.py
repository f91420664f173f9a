"""Structure-constant engine for Grassmann and spin algebras.

Monomials are stored as bitmasks: generator ``e_i`` (1-based) is bit ``i-1``
and ``e_S`` is the ordered product of the generators in ``S``.  The product of
two monomials is zero when they share a generator; otherwise it is the union
with the sign picked up by moving every generator of the right factor past the
larger generators of the left one.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache
from math import factorial

from . import linalg
from .errors import AlgebraMismatch, NonNilpotentArgument, SizeLimit, UnsupportedForGrassmann
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "AlgebraSpec",
    "AlgebraElement",
    "LinearOperator",
    "DualFunctional",
    "Subspace",
    "make_grassmann",
    "make_spin_algebra",
    "popcount",
    "indices",
    "mask_of",
    "monomial_key",
    "parse_monomial_key",
    "commutator",
    "exp_nilpotent",
    "ad",
    "left_mult",
    "conjugation_by_exp",
    "exp_nilpotent_op",
    "log_unipotent",
    "scalar_part_b",
    "center",
    "ideal_power",
    "ideal_power_by_grade",
]

MAX_GENERATORS = 12


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def indices(mask: int) -> tuple:
    """1-based generator indices of a monomial, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(idx) -> int:
    m = 0
    for i in idx:
        m |= 1 << (i - 1)
    return m


def monomial_key(mask: int) -> str:
    return "".join(str(i) for i in indices(mask)) if mask else ""


def parse_monomial_key(key: str, n: int) -> int:
    # multi-digit indices only matter for n >= 10; there keys are comma-separated
    parts = key.split(",") if "," in key else list(key)
    idx = [int(p) for p in parts if p]
    if sorted(set(idx)) != idx or any(i < 1 or i > n for i in idx):
        raise ValueError(f"bad monomial key {key!r}")
    return mask_of(idx)


class AlgebraSpec:
    """Presentation of a Grassmann or spin algebra by its generator relations.

    ``commutation_sign(i, j)`` is the sign ``s`` in ``e_i e_j = s e_j e_i``.
    """

    def __init__(self, kind: str, n: int):
        if kind not in ("grassmann", "spin"):
            raise ValueError(kind)
        if kind == "spin" and n != 4:
            raise ValueError("the spin algebra has exactly four generators")
        if not 1 <= n <= MAX_GENERATORS:
            raise SizeLimit(f"generator count must lie in 1..{MAX_GENERATORS}, got {n}")
        self.kind = kind
        self.n = n
        self.dim = 1 << n
        self.basis = sorted(range(self.dim), key=lambda m: (popcount(m), indices(m)))
        self.position = {m: k for k, m in enumerate(self.basis)}
        self._sign_cache: dict = {}

    @property
    def name(self) -> str:
        return "spin" if self.kind == "spin" else f"grassmann:{self.n}"

    @property
    def is_spin(self) -> bool:
        return self.kind == "spin"

    def __eq__(self, other):
        return isinstance(other, AlgebraSpec) and (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self):
        return hash((self.kind, self.n))

    def __repr__(self):
        return f"AlgebraSpec({self.name!r})"

    def commutation_sign(self, i: int, j: int) -> int:
        if self.kind == "grassmann":
            return -1
        same = (i <= 2) == (j <= 2)
        return -1 if same else 1

    def involution_map(self, i: int) -> int:
        if self.kind != "spin":
            raise UnsupportedForGrassmann("the +-involution exists only on the spin algebra")
        return {1: 3, 2: 4, 3: 1, 4: 2}[i]

    def degree(self, mask: int) -> int:
        return popcount(mask)

    def bigrade(self, mask: int) -> tuple:
        if self.kind != "spin":
            raise UnsupportedForGrassmann("bigrading is defined on the spin algebra")
        return popcount(mask & 0b0011), popcount(mask & 0b1100)

    def mono_sign(self, s: int, t: int) -> int:
        """Sign of ``e_S e_T = sign * e_{S|T}``; 0 when S and T overlap."""
        key = (s, t)
        sg = self._sign_cache.get(key)
        if sg is None:
            if s & t:
                sg = 0
            else:
                sg = 1
                for a in indices(s):
                    for b in indices(t):
                        if a > b:
                            sg *= self.commutation_sign(a, b)
            self._sign_cache[key] = sg
        return sg

    @cached_property
    def _plus_table(self):
        table = {}
        for m in range(self.dim):
            sign, mask = 1, 0
            for i in indices(m):
                j = self.involution_map(i)
                bit = 1 << (j - 1)
                sign *= self.mono_sign(mask, bit)
                mask |= bit
            table[m] = (sign, mask)
        return table

    def plus_monomial(self, mask: int) -> tuple:
        return self._plus_table[mask]

    # element constructors

    def element(self, terms=None) -> "AlgebraElement":
        return AlgebraElement(self, terms or {})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {0: ONE})

    def gen(self, i: int) -> "AlgebraElement":
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return AlgebraElement(self, {1 << (i - 1): ONE})

    def gens(self) -> list:
        return [self.gen(i) for i in range(1, self.n + 1)]

    def e(self, *idx) -> "AlgebraElement":
        """Ordered product ``e_{i1} e_{i2} ...`` (any order, repeats give 0)."""
        out = self.one()
        for i in idx:
            out = out * self.gen(i)
        return out

    def mono(self, mask: int) -> "AlgebraElement":
        return AlgebraElement(self, {mask: ONE})

    def from_coords(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, {m: c for m, c in zip(self.basis, coords)})

    def masks(self, *, degree=None, bigrade=None, parity=None) -> list:
        out = []
        for m in self.basis:
            if degree is not None and popcount(m) != degree:
                continue
            if bigrade is not None and self.bigrade(m) != tuple(bigrade):
                continue
            if parity is not None and popcount(m) % 2 != _parity_bit(parity):
                continue
            out.append(m)
        return out


def _parity_bit(parity) -> int:
    if parity in ("ev", "even", 0):
        return 0
    if parity in ("od", "odd", 1):
        return 1
    raise ValueError(f"bad parity selector {parity!r}")


@lru_cache(maxsize=None)
def make_grassmann(n: int) -> AlgebraSpec:
    """The Grassmann algebra on ``n`` anticommuting generators."""
    return AlgebraSpec("grassmann", n)


@lru_cache(maxsize=None)
def make_spin_algebra() -> AlgebraSpec:
    """The 16-dimensional spin algebra with ``e3 = e1^+``, ``e4 = e2^+``."""
    return AlgebraSpec("spin", 4)


class AlgebraElement:
    """Sparse coefficient map from monomial masks to exact scalars."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraSpec, terms):
        self.algebra = algebra
        clean = {}
        for m, c in terms.items():
            c = as_scalar(c)
            if c:
                clean[m] = c
        self.terms = clean

    def _check(self, other):
        if other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")

    def coeff(self, mask: int) -> Scalar:
        return self.terms.get(mask, ZERO)

    def coords(self) -> list:
        return [self.terms.get(m, ZERO) for m in self.algebra.basis]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.algebra.one() * as_scalar(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return AlgebraElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.algebra.one() * as_scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "AlgebraElement":
        s = as_scalar(s)
        if not s:
            return self.algebra.zero()
        return AlgebraElement(self.algebra, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        alg = self.algebra
        sign = alg.mono_sign
        out = {}
        for s, x in self.terms.items():
            for t, y in other.terms.items():
                if s & t:
                    continue
                c = x * y
                if sign(s, t) < 0:
                    c = -c
                k = s | t
                prev = out.get(k)
                out[k] = c if prev is None else prev + c
        return AlgebraElement(alg, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(1 / as_scalar(other))

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def plus(self) -> "AlgebraElement":
        """The conjugate-linear, product-preserving involution ``x -> x^+``."""
        alg = self.algebra
        if not alg.is_spin:
            raise UnsupportedForGrassmann("the +-involution exists only on the spin algebra")
        out = {}
        for m, c in self.terms.items():
            sg, m2 = alg.plus_monomial(m)
            cc = c.conj()
            out[m2] = cc if sg > 0 else -cc
        return AlgebraElement(alg, out)

    def conj_coeffs(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {m: c.conj() for m, c in self.terms.items()})

    def project(self, *, degree=None, bigrade=None, parity=None, predicate=None) -> "AlgebraElement":
        """Graded component selected by degree, bigrade (spin) or parity."""
        alg = self.algebra
        out = {}
        for m, c in self.terms.items():
            if degree is not None and popcount(m) != degree:
                continue
            if bigrade is not None and alg.bigrade(m) != tuple(bigrade):
                continue
            if parity is not None and popcount(m) % 2 != _parity_bit(parity):
                continue
            if predicate is not None and not predicate(m):
                continue
            out[m] = c
        return AlgebraElement(alg, out)

    def scalar_part(self) -> Scalar:
        return self.terms.get(0, ZERO)

    def min_degree(self) -> int | None:
        return min((popcount(m) for m in self.terms), default=None)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "coeffs": {_key(self.algebra, m): self.terms[m].to_json() for m in sorted(self.terms, key=self.algebra.position.get)},
        }

    @classmethod
    def from_json(cls, obj) -> "AlgebraElement":
        alg = algebra_from_name(obj["algebra"])
        terms = {parse_monomial_key(k, alg.n): Scalar.from_json(v) for k, v in obj["coeffs"].items()}
        return cls(alg, terms)

    def __repr__(self):
        return f"AlgebraElement({self.algebra.name}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self.algebra.position.get):
            c = self.terms[m]
            name = "1" if m == 0 else "e" + _key(self.algebra, m)
            parts.append(name if c == 1 else f"({c}){name}")
        return " + ".join(parts)


def _key(alg: AlgebraSpec, mask: int) -> str:
    idx = indices(mask)
    if alg.n >= 10:
        return ",".join(str(i) for i in idx)
    return "".join(str(i) for i in idx)


def algebra_from_name(name: str) -> AlgebraSpec:
    if name == "spin":
        return make_spin_algebra()
    if name.startswith("grassmann:"):
        return make_grassmann(int(name.split(":", 1)[1]))
    raise ValueError(f"unknown algebra {name!r}")


class LinearOperator:
    """Linear map on an algebra, stored column by column (images of monomials)."""

    __slots__ = ("algebra", "cols")

    def __init__(self, algebra: AlgebraSpec, cols):
        self.algebra = algebra
        cols = list(cols)
        if len(cols) != algebra.dim:
            raise ValueError("need one column per basis monomial")
        self.cols = tuple(cols)

    @classmethod
    def identity(cls, algebra) -> "LinearOperator":
        return cls(algebra, [algebra.mono(m) for m in range(algebra.dim)])

    @classmethod
    def zero(cls, algebra) -> "LinearOperator":
        return cls(algebra, [algebra.zero()] * algebra.dim)

    @classmethod
    def from_function(cls, algebra, fn) -> "LinearOperator":
        return cls(algebra, [fn(algebra.mono(m)) for m in range(algebra.dim)])

    @classmethod
    def from_matrix(cls, algebra, rows) -> "LinearOperator":
        """Dense matrix in ``algebra.basis`` order (row = output coordinate)."""
        cols = []
        for m in range(algebra.dim):
            j = algebra.position[m]
            cols.append(algebra.from_coords([row[j] for row in rows]))
        return cls(algebra, cols)

    def matrix(self) -> list:
        alg = self.algebra
        mat = [[ZERO] * alg.dim for _ in range(alg.dim)]
        for m, col in enumerate(self.cols):
            j = alg.position[m]
            for r, c in col.terms.items():
                mat[alg.position[r]][j] = c
        return mat

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        if x.algebra != self.algebra:
            raise AlgebraMismatch("operator and element live on different algebras")
        out = {}
        for m, c in x.terms.items():
            for r, v in self.cols[m].terms.items():
                t = c * v
                prev = out.get(r)
                out[r] = t if prev is None else prev + t
        return AlgebraElement(self.algebra, out)

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        """Composition ``(self @ other)(x) = self(other(x))``."""
        return LinearOperator(self.algebra, [self(c) for c in other.cols])

    def __add__(self, other):
        return LinearOperator(self.algebra, [a + b for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other):
        return LinearOperator(self.algebra, [a - b for a, b in zip(self.cols, other.cols)])

    def __neg__(self):
        return LinearOperator(self.algebra, [-a for a in self.cols])

    def scale(self, s) -> "LinearOperator":
        return LinearOperator(self.algebra, [a.scale(s) for a in self.cols])

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LinearOperator) and self.algebra == other.algebra and self.cols == other.cols

    __hash__ = None

    def is_identity(self) -> bool:
        return all(c.terms == {m: ONE} for m, c in enumerate(self.cols))

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def inverse(self) -> "LinearOperator":
        return LinearOperator.from_matrix(self.algebra, linalg.invert(self.matrix()))

    def rank(self) -> int:
        return linalg.rank(self.matrix())

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "matrix": [[c.to_json() for c in row] for row in self.matrix()],
        }

    @classmethod
    def from_json(cls, obj) -> "LinearOperator":
        alg = algebra_from_name(obj["algebra"])
        rows = [[Scalar.from_json(c) for c in row] for row in obj["matrix"]]
        return cls.from_matrix(alg, rows)

    def __repr__(self):
        return f"LinearOperator({self.algebra.name})"


class DualFunctional:
    """Covector on an algebra: ``f(x) = sum_m f_m x_m`` over the monomial basis."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraSpec, terms):
        self.algebra = algebra
        self.terms = {m: as_scalar(c) for m, c in terms.items() if as_scalar(c)}

    @classmethod
    def dual_basis(cls, algebra, mask) -> "DualFunctional":
        return cls(algebra, {mask: ONE})

    def __call__(self, x: AlgebraElement) -> Scalar:
        acc = ZERO
        for m, c in x.terms.items():
            f = self.terms.get(m)
            if f is not None:
                acc = acc + f * c
        return acc

    def coords(self) -> list:
        return [self.terms.get(m, ZERO) for m in self.algebra.basis]

    def pullback(self, op: LinearOperator) -> "DualFunctional":
        """``f o op``."""
        return DualFunctional(self.algebra, {m: self(col) for m, col in enumerate(op.cols)})

    def plus(self) -> "DualFunctional":
        """Reality conjugate ``f^+(x) := conj(f(x^+))``."""
        alg = self.algebra
        out = {}
        for m in range(alg.dim):
            sg, m2 = alg.plus_monomial(m)
            c = self.terms.get(m2)
            if c is not None:
                out[m] = c.conj() if sg > 0 else -c.conj()
        return DualFunctional(alg, out)

    def is_real(self) -> bool:
        return self.plus() == self

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return DualFunctional(self.algebra, out)

    def __neg__(self):
        return DualFunctional(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "DualFunctional":
        s = as_scalar(s)
        return DualFunctional(self.algebra, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, DualFunctional) and self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.name,
            "covector": {_key(self.algebra, m): self.terms[m].to_json() for m in sorted(self.terms, key=self.algebra.position.get)},
        }

    def __repr__(self):
        body = " + ".join(f"({c})f{_key(self.algebra, m) or '1'}" for m, c in self.terms.items()) or "0"
        return f"DualFunctional({body})"


class Subspace:
    """Span of exactly independent vectors (elements or functionals)."""

    def __init__(self, algebra: AlgebraSpec, vectors, name: str | None = None, check: bool = True):
        self.algebra = algebra
        self.vectors = list(vectors)
        self.name = name
        if check and self.vectors and linalg.rank([v.coords() for v in self.vectors]) != len(self.vectors):
            raise ValueError("subspace basis is not linearly independent")

    @classmethod
    def from_masks(cls, algebra, masks, name=None, dual=False) -> "Subspace":
        if dual:
            vecs = [DualFunctional.dual_basis(algebra, m) for m in masks]
        else:
            vecs = [algebra.mono(m) for m in masks]
        return cls(algebra, vecs, name=name, check=False)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def _rank_with(self, extra) -> int:
        rows = [v.coords() for v in self.vectors] + [v.coords() for v in extra]
        return linalg.rank(rows) if rows else 0

    def contains(self, v) -> bool:
        return self.contains_all([v])

    def contains_all(self, vs) -> bool:
        vs = [v for v in vs if not v.is_zero()]
        if not vs:
            return True
        return self._rank_with(vs) == self.dim

    def intersect(self, other: "Subspace", name=None) -> "Subspace":
        if not self.vectors or not other.vectors:
            return Subspace(self.algebra, [], name=name)
        cols = [v.coords() for v in self.vectors] + [(-w).coords() for w in other.vectors]
        mat = linalg.transpose(cols)
        ker = linalg.nullspace(mat)
        vecs = []
        for c in ker:
            v = self.vectors[0].scale(0)
            for coef, b in zip(c[: self.dim], self.vectors):
                if coef:
                    v = v + b.scale(coef)
            vecs.append(v)
        # reduce to an independent set
        rows, piv = linalg.rref([v.coords() for v in vecs]) if vecs else ([], [])
        basis = [self._from_coords(r) for r in rows[: len(piv)]]
        return Subspace(self.algebra, basis, name=name, check=False)

    def _from_coords(self, coords):
        proto = self.vectors[0]
        if isinstance(proto, DualFunctional):
            return DualFunctional(self.algebra, dict(zip(self.algebra.basis, coords)))
        return self.algebra.from_coords(coords)

    def masks(self) -> set:
        out = set()
        for v in self.vectors:
            out.update(v.terms)
        return out

    def __repr__(self):
        return f"Subspace({self.name or '?'}, dim={self.dim})"


# ----------------------------------------------------------------------------
# operations


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y - y * x


def scalar_part_b(x: AlgebraElement) -> Scalar:
    """Coefficient of the unit; the projection ``I - m = 1 b``."""
    return x.scalar_part()


def exp_nilpotent(x: AlgebraElement) -> AlgebraElement:
    """Terminating exponential series of an element with zero scalar part."""
    if x.scalar_part():
        raise NonNilpotentArgument("exp_nilpotent needs an element of the maximal ideal")
    out = x.algebra.one()
    term = x.algebra.one()
    k = 0
    while True:
        k += 1
        term = (term * x) / k
        if not term:
            return out
        out = out + term


def left_mult(a: AlgebraElement) -> LinearOperator:
    alg = a.algebra
    return LinearOperator(alg, [a * alg.mono(m) for m in range(alg.dim)])


def ad(a: AlgebraElement) -> LinearOperator:
    """``z -> [a, z]``."""
    alg = a.algebra
    return LinearOperator(alg, [commutator(a, alg.mono(m)) for m in range(alg.dim)])


def conjugation_by_exp(a: AlgebraElement) -> LinearOperator:
    """``z -> exp(a) z exp(a)^{-1}`` for ``a`` in the maximal ideal."""
    alg = a.algebra
    if a.scalar_part():
        a = a - alg.one() * a.scalar_part()
    ea = exp_nilpotent(a)
    ema = exp_nilpotent(-a)
    return LinearOperator(alg, [ea * alg.mono(m) * ema for m in range(alg.dim)])


def _powers_until_zero(op: LinearOperator, limit: int):
    term = op
    k = 1
    while not term.is_zero():
        if k > limit:
            raise NonNilpotentArgument("operator is not nilpotent")
        yield k, term
        term = term @ op
        k += 1


def exp_nilpotent_op(op: LinearOperator) -> LinearOperator:
    """Terminating ``sum op^k / k!`` for a nilpotent operator."""
    out = LinearOperator.identity(op.algebra)
    for k, term in _powers_until_zero(op, op.algebra.dim):
        out = out + term.scale(Scalar(1) / factorial(k))
    return out


def log_unipotent(op: LinearOperator) -> LinearOperator:
    """Terminating ``log(I + N) = sum (-1)^{k+1} N^k / k`` for unipotent ``op``."""
    nil = op - LinearOperator.identity(op.algebra)
    out = LinearOperator.zero(op.algebra)
    for k, term in _powers_until_zero(nil, op.algebra.dim):
        out = out + term.scale(Scalar((-1) ** (k + 1)) / k)
    return out


def center(algebra: AlgebraSpec) -> Subspace:
    """Commutant of the whole algebra, found by solving ``[z, e_m] = 0``."""
    # unknown z = sum z_k e_k; equations: coefficients of [z, gen_i] vanish
    gens = algebra.gens()
    rows = []
    for g in gens:
        cols = [commutator(algebra.mono(m), g).coords() for m in algebra.basis]
        rows.extend(linalg.transpose(cols))
    ker = linalg.nullspace(rows)
    vecs = [algebra.from_coords(v) for v in ker]
    return Subspace(algebra, vecs, name="Z")


def ideal_power(algebra: AlgebraSpec, l: int) -> Subspace:
    """``M^l`` as the span of all ``l``-fold products of elements of ``M``."""
    reach = {0}
    m_basis = [m for m in algebra.basis if m]
    for _ in range(l):
        nxt = set()
        for s in reach:
            for t in m_basis:
                if algebra.mono_sign(s, t):
                    nxt.add(s | t)
        reach = nxt
    return Subspace.from_masks(algebra, sorted(reach, key=algebra.position.get), name=f"M^{l}")


def ideal_power_by_grade(algebra: AlgebraSpec, l: int) -> Subspace:
    """``M^l`` as the direct sum of the ``k``-forms with ``k >= l``."""
    return Subspace.from_masks(algebra, [m for m in algebra.basis if popcount(m) >= l], name=f"M^{l}")


def all_monomial_pairs(algebra: AlgebraSpec):
    return itertools.product(range(algebra.dim), repeat=2)


def unipotent_inverse(op: LinearOperator) -> LinearOperator:
    """Inverse of ``I + N`` with ``N`` nilpotent: ``sum (-N)^k``."""
    nil = LinearOperator.identity(op.algebra) - op
    out = LinearOperator.identity(op.algebra)
    for _, term in _powers_until_zero(nil, op.algebra.dim):
        out = out + term
    return out


def exp_ad(a: AlgebraElement, x: AlgebraElement) -> AlgebraElement:
    """``exp(ad_a)(x) = x + [a,x] + [a,[a,x]]/2 + ...`` for nilpotent ``a``."""
    out = x
    term = x
    k = 0
    while True:
        k += 1
        term = commutator(a, term) / k
        if not term:
            return out
        if k > a.algebra.dim:
            raise NonNilpotentArgument("ad_a is not nilpotent")
        out = out + term


def annihilator(space: Subspace, name: str | None = None) -> Subspace:
    """Functionals vanishing on ``space`` (a subspace of the dual)."""
    alg = space.algebra
    if space.vectors:
        ker = linalg.nullspace([v.coords() for v in space.vectors])
    else:
        ker = linalg.identity(alg.dim)
    vecs = [DualFunctional(alg, dict(zip(alg.basis, v))) for v in ker]
    return Subspace(alg, vecs, name=name, check=False)


def direct_sum(*spaces: Subspace, name: str | None = None) -> Subspace:
    vecs = [v for s in spaces for v in s.vectors]
    return Subspace(spaces[0].algebra, vecs, name=name)


def check_invariance(op: LinearOperator, space: Subspace) -> bool:
    """Exact test of ``op(S) ⊆ S``."""
    return space.contains_all([op(v) for v in space.vectors])


def check_dual_invariance(op_inverse: LinearOperator, space: Subspace) -> bool:
    """Test that ``f -> f o op^{-1}`` maps the dual subspace into itself."""
    return space.contains_all([f.pullback(op_inverse) for f in space.vectors])
