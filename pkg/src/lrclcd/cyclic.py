"""Cyclic codes as values: construction from a defining set, generator and
parity-check data, duals, encoding/membership, and the complementary-dual tests.

A code of length n over GF(q) (gcd(n, q) = 1) is pinned down by the exponent
set Z of its generator's roots among the powers of a fixed primitive n-th root
of unity alpha.  alpha lives in the splitting field GF(q^m), m = ord_n(q); the
generator's coefficients are projected back to GF(q), and a projection failure
is an error rather than a cast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import matrix
from .cosets import DefiningSet, defining_set
from .errors import (
    InvariantViolation,
    LengthMismatch,
    NoSplittingField,
    NotGaloisClosed,
    ParameterViolation,
)
from .galois import (
    DEFAULT_TABLE_BUDGET,
    Field,
    FieldElement,
    make_field,
    multiplicative_order,
    nth_root_of_unity,
)
from .polyring import Poly, product_of_roots, project_to_subfield


@dataclass(frozen=True)
class CyclicCode:
    field: Field          # base field GF(q)
    splitting: Field      # GF(q^m) containing alpha; == field when m = 1
    n: int
    alpha: FieldElement   # primitive n-th root of unity in the splitting field
    zeros: DefiningSet
    g: Poly               # generator, over the base field
    h: Poly               # parity-check polynomial, g * h = x^n - 1
    k: int

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def splitting_degree(self) -> int:
        return self.splitting.m // self.field.m

    def __repr__(self):
        return (f"CyclicCode(n={self.n}, k={self.k}, q={self.q}, "
                f"zeros={list(self.zeros.exponents)})")


def splitting_field_for(field: Field, n: int, *,
                        table_budget: int = DEFAULT_TABLE_BUDGET,
                        modulus=None) -> Field:
    """The field GF(q^m), m = ord_n(q), in which x^n - 1 splits over GF(q)."""
    m = multiplicative_order(field.q, n)
    if m == 1:
        return field
    p, degree = field.p, field.m * m
    if p**degree > table_budget:
        raise NoSplittingField(
            f"splitting x^{n}-1 over GF({field.q}) needs GF({field.q}^{m}), "
            f"which is over the table budget {table_budget}")
    return make_field(p, degree, modulus, table_budget=table_budget)


def from_defining_set(field: Field, n: int, zeros, *,
                      table_budget: int = DEFAULT_TABLE_BUDGET,
                      splitting_modulus=None) -> CyclicCode:
    """Build the cyclic code of length n over `field` with root exponents `zeros`."""
    if n < 1:
        raise ParameterViolation("length must be positive")
    if math.gcd(n, field.q) != 1:
        raise ParameterViolation(f"length {n} shares a factor with the field size {field.q}")
    if not isinstance(zeros, DefiningSet):
        zeros = defining_set(n, zeros)
    elif zeros.n != n:
        raise ParameterViolation(f"defining set is modulo {zeros.n}, not {n}")
    if not zeros.is_closed_under(field.q):
        missing = sorted({v * field.q % n for v in zeros} - set(zeros.exponents))
        raise NotGaloisClosed(
            f"defining set is not closed under multiplication by {field.q} mod {n}; "
            f"missing {missing}")

    splitting = splitting_field_for(field, n, table_budget=table_budget,
                                    modulus=splitting_modulus)
    alpha = nth_root_of_unity(splitting, n)
    g_split = product_of_roots(splitting, alpha, zeros)
    if splitting == field:
        g = Poly(field, g_split.coeffs)
    else:
        try:
            g = project_to_subfield(g_split, field)
        except Exception as exc:  # closure was verified, so this cannot happen
            raise InvariantViolation(f"generator failed to project to GF({field.q}): {exc}")

    xn1 = Poly.x_pow_n_minus_1(field, n)
    h, rem = divmod(xn1, g)
    if not rem.is_zero():
        raise InvariantViolation("generator does not divide x^n - 1")
    if g.degree != len(zeros):
        raise InvariantViolation("generator degree does not match the defining set size")
    return CyclicCode(field=field, splitting=splitting, n=n, alpha=alpha,
                      zeros=zeros, g=g, h=h, k=n - len(zeros))


def generator_matrix(code: CyclicCode) -> list[list[int]]:
    """k x n matrix whose rows are the cyclic shifts x^i * g, i = 0..k-1."""
    gc = list(code.g.coeffs)
    rows = []
    for i in range(code.k):
        rows.append([0] * i + gc + [0] * (code.n - i - len(gc)))
    return rows


def parity_check_matrix(code: CyclicCode) -> list[list[int]]:
    """(n-k) x n matrix of full rank with G H^T = 0: a generator of the dual."""
    return generator_matrix(dual_code(code))


def dual_code(code: CyclicCode) -> CyclicCode:
    """The dual, generated by the monic reciprocal of the parity-check polynomial."""
    n = code.n
    g_dual = code.h.reciprocal().monic()
    zeros_dual = code.zeros.negated().complement()
    h_dual, rem = divmod(Poly.x_pow_n_minus_1(code.field, n), g_dual)
    if not rem.is_zero() or g_dual.degree != len(zeros_dual):
        raise InvariantViolation("dual generator inconsistent with the negated complement")
    return CyclicCode(field=code.field, splitting=code.splitting, n=n, alpha=code.alpha,
                      zeros=zeros_dual, g=g_dual, h=h_dual, k=n - len(zeros_dual))


@dataclass(frozen=True)
class LcdVerdict:
    """The three generator-level complementary-dual tests plus the direct hull check.

    self_reciprocal, negation_closed and hull_trivial must agree (enforced);
    power_condition is a sufficient criterion only and is reported as a hint.
    """

    self_reciprocal: bool
    negation_closed: bool
    power_condition: bool
    hull_trivial: bool

    @property
    def consensus(self) -> bool:
        return self.hull_trivial

    def as_dict(self) -> dict:
        return {
            "consensus": self.consensus,
            "self_reciprocal": self.self_reciprocal,
            "negation_closed": self.negation_closed,
            "power_condition": self.power_condition,
            "hull_trivial": self.hull_trivial,
        }


def hull_is_trivial(code: CyclicCode) -> bool:
    """C intersect C-perp = {0} iff the k x k Gram matrix of G has full rank."""
    if code.k == 0:
        return True
    rows = generator_matrix(code)
    if code.q == 2:
        packed = [matrix.pack_gf2(r) for r in rows]
        return matrix.rank_gf2(matrix.gram_gf2(packed)) == code.k
    return matrix.rank(matrix.gram(rows, code.field), code.field) == code.k


def is_lcd(code: CyclicCode) -> LcdVerdict:
    if code.k == 0:
        self_rec = True
    else:
        self_rec = code.g.reciprocal().monic() == code.g
    neg_closed = code.zeros.is_negation_closed()
    n, q = code.n, code.q
    ord_q = multiplicative_order(q, n)
    power = any(pow(q, ell, n) == (n - 1) % n for ell in range(1, ord_q + 1))
    hull = hull_is_trivial(code)
    if not (self_rec == neg_closed == hull):
        raise InvariantViolation(
            f"complementary-dual tests disagree: self_reciprocal={self_rec}, "
            f"negation_closed={neg_closed}, hull_trivial={hull}")
    return LcdVerdict(self_reciprocal=self_rec, negation_closed=neg_closed,
                      power_condition=power, hull_trivial=hull)


def encode(code: CyclicCode, message: Sequence[int]) -> list[int]:
    """message * g as a length-n word; message holds k base-field encodings."""
    if len(message) != code.k:
        raise LengthMismatch(f"message length {len(message)} != dimension {code.k}")
    word_poly = Poly.from_coeffs(code.field, message) * code.g
    out = list(word_poly.coeffs)
    return out + [0] * (code.n - len(out))


def contains(code: CyclicCode, word: Sequence[int]) -> bool:
    if len(word) != code.n:
        raise LengthMismatch(f"word length {len(word)} != code length {code.n}")
    return (Poly.from_coeffs(code.field, word) % code.g).is_zero()


def code_record(code: CyclicCode) -> dict:
    """Serializable descriptor of one code; accepted back by the verify command."""
    return {
        "q": code.q,
        "m": code.splitting_degree,
        "n": code.n,
        "modulus": list(code.splitting.modulus) if code.splitting.modulus else None,
        "defining_set": list(code.zeros.exponents),
        "g": list(code.g.coeffs),
        "k": code.k,
    }
