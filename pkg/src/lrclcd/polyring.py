"""Dense univariate polynomials over a Field, plus the tools the code layer needs:
reduction in GF(q)[x]/(x^n - 1), reciprocals, root products, and minimal
polynomials with verified projection to a subfield.

Coefficients are stored as field encodings, lowest degree first, with the
trailing coefficient nonzero (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from .errors import (
    DivisionByZero,
    ExponentOutOfRange,
    MixedFields,
    NotAClosedCoset,
    ZeroPolynomial,
)
from .galois import Field, FieldElement, subfield_map


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # value semantics
        raise AttributeError("Poly is immutable")

    # -- constructors

    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> Poly:
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> Poly:
        if coeff % field.q == 0:
            return cls.zero(field)
        return cls(field, (0,) * degree + (coeff,))

    @classmethod
    def from_coeffs(cls, field: Field, coeffs) -> Poly:
        return cls(field, (field.element(c).value for c in coeffs))

    @classmethod
    def x_pow_n_minus_1(cls, field: Field, n: int) -> Poly:
        return cls(field, (field.neg(1),) + (0,) * (n - 1) + (1,))

    # -- basic queries

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def _check(self, other: Poly):
        if self.field != other.field:
            raise MixedFields("polynomials over different fields")

    # -- ring operations

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, (f.add(self[i], other[i]) for i in range(n)))

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, (f.sub(self[i], other[i]) for i in range(n)))

    def __neg__(self) -> Poly:
        f = self.field
        return Poly(f, (f.neg(c) for c in self.coeffs))

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        f = self.field
        if f.q == 2:
            # carry-less product on bit-packed coefficients
            a = sum(1 << i for i, c in enumerate(self.coeffs) if c)
            b = sum(1 << i for i, c in enumerate(other.coeffs) if c)
            r = 0
            while a:
                low = a & -a
                r ^= b << (low.bit_length() - 1)
                a ^= low
            return Poly(f, ((r >> i) & 1 for i in range(r.bit_length())))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c: int) -> Poly:
        f = self.field
        return Poly(f, (f.mul(c, v) for v in self.coeffs))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = f.inv(other.coeffs[-1])
        quo = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            shift = len(rem) - 1 - db
            factor = f.mul(rem[-1], inv_lead)
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, c))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(f, quo), Poly(f, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    # -- the operations the cyclic layer is built on

    def monic(self) -> Poly:
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no monic normalization")
        lead = self.coeffs[-1]
        return self if lead == 1 else self.scale(self.field.inv(lead))

    def reciprocal(self) -> Poly:
        """x^deg * f(1/x): the coefficient vector reversed, then trimmed."""
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no reciprocal")
        return Poly(self.field, tuple(reversed(self.coeffs)))

    def eval(self, x):
        """Horner evaluation; accepts an encoding or a FieldElement and returns the same kind."""
        f = self.field
        if isinstance(x, FieldElement):
            if x.field != f:
                raise MixedFields("evaluation point from a different field")
            return FieldElement(f, self.eval(x.value))
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def mod_xn_minus_1(self, n: int) -> Poly:
        """Image in GF(q)[x]/(x^n - 1): coefficient index i folds onto i mod n."""
        if n < 1:
            raise ValueError("quotient length must be >= 1")
        f = self.field
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] = f.add(out[i % n], c)
        return Poly(f, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm; gcd(0, 0) = 0."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def product_of_roots(field: Field, alpha, exponents) -> Poly:
    """The monic polynomial whose roots are alpha^i for i in exponents.

    alpha must have some finite multiplicative order n; exponents outside
    [0, n) are rejected rather than reduced.
    """
    enc = alpha.value if isinstance(alpha, FieldElement) else int(alpha)
    n = field.order(enc)
    exps = sorted(set(int(e) for e in exponents))
    if exps and not (0 <= exps[0] and exps[-1] < n):
        raise ExponentOutOfRange(f"exponents must lie in [0, {n})")
    out = [1]
    for e in exps:
        root = field.pow(enc, e)
        # multiply by (x - root) in place
        out.append(0)
        for i in range(len(out) - 1, 0, -1):
            out[i] = field.sub(out[i - 1], field.mul(root, out[i]))
        out[0] = field.mul(field.neg(root), out[0])
    return Poly(field, out)


def project_to_subfield(poly: Poly, base: Field) -> Poly:
    """Re-express a polynomial over a subfield; raises NotAClosedCoset if any
    coefficient falls outside it."""
    mapper = subfield_map(poly.field, base)
    try:
        return Poly(base, (mapper.project(c) for c in poly.coeffs))
    except ValueError as exc:
        raise NotAClosedCoset(str(exc)) from None


def minimal_polynomial(splitting: Field, alpha, coset, base: Field) -> Poly:
    """Product of (x - alpha^i) over one cyclotomic coset, landed in the base field.

    The projection is verified coefficient by coefficient, so an incomplete
    coset surfaces as NotAClosedCoset instead of a silently wrong polynomial.
    """
    return project_to_subfield(product_of_roots(splitting, alpha, coset), base)
