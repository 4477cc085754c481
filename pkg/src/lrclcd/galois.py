"""Exact arithmetic in GF(p) and GF(p^m), with primitive elements and roots of unity.

Elements are carried as integer encodings in [0, q): the residue itself for a
prime field, and the base-p digit string of the coefficient vector (lowest
degree first) for an extension field.  Multiplicative structure is handled
through log/antilog tables indexed by a primitive element, so fields larger
than the table budget are rejected at construction.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NotIrreducible,
    NotPrime,
    OrderUnavailable,
)

DEFAULT_TABLE_BUDGET = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/nZ)*; requires gcd(a, n) = 1."""
    a %= n
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


# -- raw coefficient-vector arithmetic over GF(p), used only to bootstrap a Field

def _trim(v: list[int]) -> list[int]:
    while v and v[-1] == 0:
        v.pop()
    return v


def _raw_rem(a: list[int], b: list[int], p: int) -> list[int]:
    # remainder of a by monic b
    a = _trim([c % p for c in a])
    db = len(b) - 1
    while len(a) > db:
        lead = a[-1]
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def _raw_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _coeffs_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(coeffs) - 1
    for d in range(1, m // 2 + 1):
        for enc in range(p**d):
            div = _digits(enc, p, d) + [1]
            if not _raw_rem(coeffs, div, p):
                return False
    return True


def _digits(enc: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(enc % p)
        enc //= p
    return out


def _encode(digits: list[int], p: int) -> int:
    enc = 0
    for d in reversed(digits):
        enc = enc * p + d
    return enc


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """The first monic irreducible of degree m over GF(p) in encoding order.

    Candidates x^m + c are scanned by the integer encoding of c, which orders
    coefficient vectors from the highest-degree digit down.
    """
    for enc in range(p**m):
        coeffs = _digits(enc, p, m) + [1]
        if _coeffs_irreducible(coeffs, p):
            return tuple(coeffs)
    raise NotIrreducible(f"no irreducible of degree {m} over GF({p})")  # pragma: no cover


class Field:
    """A fully constructed GF(p^m): modulus, primitive element, log/antilog tables.

    Immutable after construction; all operations are pure functions on integer
    encodings.  Instances compare equal iff they share (p, m, modulus).
    """

    __slots__ = ("p", "m", "q", "modulus", "generator", "exp_table", "log_table", "_key")

    def __init__(self, p: int, m: int = 1, modulus=None, *,
                 table_budget: int = DEFAULT_TABLE_BUDGET):
        if not is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p**m
        if q > table_budget:
            raise FieldTooLarge(f"GF({p}^{m}) has {q} elements, over the table budget {table_budget}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
        else:
            if modulus is None:
                self.modulus = smallest_irreducible(p, m)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != m + 1 or mod[-1] != 1:
                    raise NotIrreducible(f"modulus must be monic of degree {m}")
                if not _coeffs_irreducible(list(mod), p):
                    raise NotIrreducible(f"modulus {list(mod)} is reducible over GF({p})")
                self.modulus = mod
        self._key = (p, m, self.modulus)
        self.generator = self._find_generator()
        self.exp_table, self.log_table = self._build_tables()

    # -- construction helpers

    def _raw_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if self.p == 2:
            mod_bits = _encode(list(self.modulus), 2)
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.m & 1:
                    a ^= mod_bits
            return r
        prod = _raw_mul(_digits(a, self.p, self.m), _digits(b, self.p, self.m), self.p)
        rem = _raw_rem(prod, list(self.modulus), self.p)
        return _encode(rem + [0] * (self.m - len(rem)), self.p)

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.q - 1
        factors = prime_factors(n) if n > 1 else []
        for cand in range(1, self.q):
            if all(self._raw_pow(cand, n // f) != 1 for f in factors):
                if n == 1 or self._raw_pow(cand, n) == 1:
                    return cand
        raise NotIrreducible(f"no primitive element found in GF({self.q})")  # pragma: no cover

    def _build_tables(self) -> tuple[list[int], list]:
        exp = [0] * max(self.q - 1, 1)
        log: list = [None] * self.q
        x = 1
        for i in range(self.q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, self.generator)
        if x != 1:
            raise NotIrreducible("generator order check failed")  # pragma: no cover
        return exp, log

    # -- scalar operations on encodings

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = _digits(a, self.p, self.m), _digits(b, self.p, self.m)
        return _encode([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = _digits(a, self.p, self.m), _digits(b, self.p, self.m)
        return _encode([(x - y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return _encode([-x % self.p for x in _digits(a, self.p, self.m)], self.p)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] - self.log_table[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1  # matches polynomial-evaluation convention
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return self.exp_table[self.log_table[a] * (e % (self.q - 1)) % (self.q - 1)]

    def order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        return (self.q - 1) // math.gcd(self.q - 1, self.log_table[a])

    # -- element views

    def element(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields("element belongs to a different field")
            return value
        enc = int(value)
        if self.m == 1:
            enc %= self.p
        elif not 0 <= enc < self.q:
            raise ValueError(f"encoding {enc} outside [0, {self.q})")
        return FieldElement(self, enc)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.q))

    def coeffs(self, enc: int) -> tuple[int, ...]:
        """Coefficient vector of an encoding, lowest degree first, length m."""
        return tuple(_digits(enc, self.p, self.m))

    def from_coeffs(self, digits) -> int:
        v = [int(c) % self.p for c in digits]
        if len(v) > self.m:
            raise ValueError("coefficient vector longer than the extension degree")
        return _encode(v + [0] * (self.m - len(v)), self.p)

    def descriptor(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})/" + ",".join(str(c) for c in self.modulus)

    # -- identity

    def __eq__(self, other):
        return isinstance(other, Field) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Field({self.descriptor()})"


@dataclass(frozen=True)
class FieldElement:
    """One element of a specific Field, by integer encoding."""

    field: Field
    value: int

    def _peer(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(
                    f"cannot mix {self.field.descriptor()} with {other.field.descriptor()}")
            return other.value
        return self.field.element(other).value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._peer(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._peer(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def order(self) -> int:
        return self.field.order(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field.descriptor()}:{self.value}"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus, table_budget: int) -> Field:
    return Field(p, m, modulus, table_budget=table_budget)


def make_field(p: int, m: int = 1, modulus=None, *,
               table_budget: int = DEFAULT_TABLE_BUDGET) -> Field:
    """Construct GF(p^m); with no modulus given, the canonical smallest irreducible.

    Fields are immutable, so equal parameters share one cached instance.
    """
    mod_key = tuple(int(c) for c in modulus) if modulus is not None else None
    return _cached_field(p, m, mod_key, table_budget)


def field_of_size(q: int, *, table_budget: int = DEFAULT_TABLE_BUDGET) -> Field:
    """Canonical field with exactly q elements; q must be a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                raise NotPrime(f"{q} is not a prime power")
            m = 0
            qq = q
            while qq % p == 0:
                qq //= p
                m += 1
            if qq != 1:
                raise NotPrime(f"{q} is not a prime power")
            return make_field(p, m, table_budget=table_budget)
    raise NotPrime(f"{q} is not a prime power")  # pragma: no cover


def nth_root_of_unity(field: Field, n: int) -> FieldElement:
    """The canonical element of multiplicative order exactly n: generator^((q-1)/n)."""
    if n < 1:
        raise OrderUnavailable("n must be positive")
    if (field.q - 1) % n != 0:
        raise OrderUnavailable(f"{n} does not divide {field.q - 1}, so GF({field.q}) has no such root")
    enc = field.pow(field.generator, (field.q - 1) // n)
    return FieldElement(field, enc)


class SubfieldMap:
    """Isomorphism between a small field and its image inside a larger one.

    The image of the small field's polynomial-basis root is the smallest-encoded
    root of its modulus inside the big field, so the map is reproducible.
    """

    def __init__(self, big: Field, base: Field):
        if big.p != base.p or big.m % base.m != 0:
            raise ValueError(f"{base.descriptor()} is not a subfield of {big.descriptor()}")
        self.big = big
        self.base = base
        if big == base:
            self._identity = True
            return
        self._identity = False
        if base.m == 1:
            # prime subfield = the constant polynomials
            self._beta_powers = None
            return
        self._beta = self._find_beta()
        self._beta_powers = [big.pow(self._beta, i) for i in range(base.m)]
        self._solver = _PrimeSolver(
            big.p,
            [list(_digits(bp, big.p, big.m)) for bp in self._beta_powers],
        )

    def _find_beta(self) -> int:
        big, base = self.big, self.base
        step = (big.q - 1) // (base.q - 1)
        mod = base.modulus
        roots = []
        for j in range(base.q - 1):
            cand = big.exp_table[j * step % (big.q - 1)]
            acc = 0
            for c in reversed(mod):
                acc = big.add(big.mul(acc, cand), c % big.p)
            if acc == 0:
                roots.append(cand)
        if not roots:  # pragma: no cover - the modulus always splits in a field containing GF(q)
            raise ValueError("modulus has no root in the big field")
        return min(roots)

    def embed(self, enc: int) -> int:
        """Image in the big field of a base-field encoding."""
        if self._identity:
            return enc
        if self.base.m == 1:
            return enc
        out = 0
        # prime-subfield digits embed as themselves in the big field's polynomial basis
        for digit, bp in zip(_digits(enc, self.base.p, self.base.m), self._beta_powers):
            out = self.big.add(out, self.big.mul(digit, bp))
        return out

    def project(self, enc: int) -> int:
        """Base-field encoding of a big-field element, or ValueError if outside the subfield."""
        if self._identity:
            return enc
        if self.base.m == 1:
            if enc < self.base.p:
                return enc
            raise ValueError(f"element {enc} lies outside the prime subfield")
        sol = self._solver.solve(list(_digits(enc, self.big.p, self.big.m)))
        if sol is None:
            raise ValueError(f"element {enc} lies outside the subfield of size {self.base.q}")
        return _encode(sol, self.base.p)


class _PrimeSolver:
    """Solves B a = x over GF(p) for a fixed column set B, by precomputed elimination."""

    def __init__(self, p: int, columns: list[list[int]]):
        self.p = p
        rows = len(columns[0])
        ncols = len(columns)
        # augmented [B | I] row-reduced once; the I part records the row operations
        aug = [[columns[j][i] for j in range(ncols)] + [int(i == t) for t in range(rows)]
               for i in range(rows)]
        pivots = []
        r = 0
        for c in range(ncols):
            pr = next((i for i in range(r, rows) if aug[i][c] % p), None)
            if pr is None:
                continue
            aug[r], aug[pr] = aug[pr], aug[r]
            inv = pow(aug[r][c], -1, p)
            aug[r] = [v * inv % p for v in aug[r]]
            for i in range(rows):
                if i != r and aug[i][c] % p:
                    f = aug[i][c]
                    aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
        self.rank = r
        self.ncols = ncols
        self.pivots = pivots
        self.ops = [row[ncols:] for row in aug]

    def solve(self, x: list[int]):
        p = self.p
        reduced = [sum(t * v for t, v in zip(op, x)) % p for op in self.ops]
        if any(v for v in reduced[self.rank:]):
            return None
        if self.rank < self.ncols:  # pragma: no cover - basis columns are independent
            return None
        sol = [0] * self.ncols
        for i, c in enumerate(self.pivots):
            sol[c] = reduced[i]
        return sol


@functools.lru_cache(maxsize=None)
def subfield_map(big: Field, base: Field) -> SubfieldMap:
    return SubfieldMap(big, base)
