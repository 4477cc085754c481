"""The code families this package exists for.

Binary families (length 2^m - 1): the sparse defining set {j(r+1)} gives a
distance-2 code with locality r that is its own mirror image; adding the
negation-paired cyclotomic cosets of small exponents buys distance while
keeping the mirror symmetry (and with it the trivial hull).

q-ary families (length n | q - 1): the root exponents are the multiples of
(r+1) together with a symmetric window {-t..t}.  Window size t is chosen from
(n, k, r) so the dimension lands exactly on k; the window then supplies 2t + 1
consecutive roots and the run bound meets (or comes within one of) the
locality-aware Singleton bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .analysis import classify_optimality, lrc_singleton_bound
from .cosets import cyclotomic_coset, defining_set
from .cyclic import CyclicCode, from_defining_set
from .errors import (
    DivisibilityViolation,
    InvariantViolation,
    LocalityDoesNotDivide,
    ParameterViolation,
    ParityViolation,
    UnpairedCoset,
)
from .galois import DEFAULT_TABLE_BUDGET, Field, field_of_size, make_field


def _require(cond: bool, message: str, exc=ParameterViolation):
    if not cond:
        raise exc(message)


def binary_construction1(m: int, r: int, *,
                         table_budget: int = DEFAULT_TABLE_BUDGET) -> CyclicCode:
    """Binary code of length n = 2^m - 1 with root exponents {j(r+1)}."""
    _require(m >= 1, f"extension degree must be >= 1, got {m}")
    n = 2**m - 1
    _require(r >= 1, f"locality must be >= 1, got {r}")
    _require(n % (r + 1) == 0, f"r + 1 = {r + 1} does not divide n = {n}",
             LocalityDoesNotDivide)
    zeros = defining_set(n, range(0, n, r + 1))
    code = from_defining_set(make_field(2), n, zeros, table_budget=table_budget)
    expected_k = r * n // (r + 1)
    if code.k != expected_k:
        raise InvariantViolation(f"dimension {code.k} != closed form {expected_k}")
    return code


def binary_construction2(m: int, r: int, extras: tuple[int, ...] | None = None, *,
                         table_budget: int = DEFAULT_TABLE_BUDGET) -> CyclicCode:
    """Construction 1 plus the cyclotomic cosets of `extras` (default 1 and n-1).

    The union of the added cosets must be closed under negation, otherwise the
    mirror symmetry breaks and the code stops being complementary-dual.
    """
    _require(m >= 1, f"extension degree must be >= 1, got {m}")
    n = 2**m - 1
    _require(r >= 1, f"locality must be >= 1, got {r}")
    _require(n % (r + 1) == 0, f"r + 1 = {r + 1} does not divide n = {n}",
             LocalityDoesNotDivide)
    if extras is None:
        extras = (1, n - 1)
    extra_exponents: set[int] = set()
    for rep in extras:
        extra_exponents.update(cyclotomic_coset(rep, n, 2).members)
    added = defining_set(n, extra_exponents)
    if not added.is_negation_closed():
        unpaired = sorted(set(added) - set(added.negated()))
        raise UnpairedCoset(
            f"added cosets are not negation-paired; exponents {unpaired} lack mirrors")
    zeros = defining_set(n, range(0, n, r + 1)).union(added)
    return from_defining_set(make_field(2), n, zeros, table_budget=table_budget)


def construction2_dimension(m: int, r: int) -> int:
    """Closed-form dimension for the default extras, valid for m > 1."""
    return r * (2**m - 1) // (r + 1) - 2 * m


def _qary_field(q: int, n: int, table_budget: int) -> Field:
    field = field_of_size(q, table_budget=table_budget)
    _require(n >= 1, f"length must be positive, got {n}")
    _require((q - 1) % n == 0, f"n = {n} does not divide q - 1 = {q - 1}")
    return field


def tamo_barg_cyclic(q: int, n: int, k: int, r: int, ell: int = 0, b: int = 1, *,
                     table_budget: int = DEFAULT_TABLE_BUDGET) -> CyclicCode:
    """General cyclic LRC defining set: a residue class L plus a b-strided run D.

    The dimension actually obtained is n - |L union D|; callers should compare
    it against the k they asked for (reports do).
    """
    field = _qary_field(q, n, table_budget)
    _require(r >= 1 and k >= 1, f"need k, r >= 1, got k={k}, r={r}")
    _require(n % (r + 1) == 0, f"r + 1 = {r + 1} does not divide n = {n}",
             LocalityDoesNotDivide)
    _require(k % r == 0, f"r = {r} does not divide k = {k}")
    _require(0 <= ell < r, f"coset offset must satisfy 0 <= ell < r, got {ell}")
    _require(math.gcd(b, n) == 1, f"stride b = {b} is not coprime to n = {n}")
    mu = k // r
    _require(n - mu * (r + 1) >= 0,
             f"k = {k} is too large: k(r+1)/r = {mu * (r + 1)} exceeds n = {n}")
    L = list(range(ell, n, r + 1))
    j = L[0]
    D = [(j + s * b) % n for s in range(n - mu * (r + 1) + 1)]
    return from_defining_set(field, n, defining_set(n, L + D), table_budget=table_budget)


def _qary_window_code(field: Field, n: int, r: int, t: int,
                      table_budget: int) -> CyclicCode:
    L = range(0, n, r + 1)
    D = [s % n for s in range(-t, t + 1)]
    zeros = defining_set(n, list(L) + D)
    return from_defining_set(field, n, zeros, table_budget=table_budget)


def qary_lrc_lcd_even(q: int, n: int, k: int, r: int, *,
                      table_budget: int = DEFAULT_TABLE_BUDGET) -> CyclicCode:
    """Symmetric-window family requiring r | k and an even n/(r+1) - k/r."""
    field = _qary_field(q, n, table_budget)
    _require(1 <= r <= k, f"need 1 <= r <= k, got r={r}, k={k}")
    _require(n % (r + 1) == 0, f"r + 1 = {r + 1} does not divide n = {n}",
             LocalityDoesNotDivide)
    _require(k % r == 0, f"r = {r} does not divide k = {k}")
    _require((n // (r + 1) - k // r) % 2 == 0,
             f"n/(r+1) - k/r = {n // (r + 1) - k // r} is odd; this family needs it even",
             ParityViolation)
    two_t = n - k * (r + 1) // r
    _require(two_t >= 0, f"k = {k} exceeds the rate limit nr/(r+1) = {n * r // (r + 1)}")
    t = two_t // 2
    code = _qary_window_code(field, n, r, t, table_budget)
    if code.k != k:
        raise InvariantViolation(f"dimension {code.k} != requested {k}")
    return code


def qary_lrc_lcd_general(q: int, n: int, k: int, r: int, *,
                         table_budget: int = DEFAULT_TABLE_BUDGET) -> CyclicCode:
    """Symmetric-window family without r | k; needs 2r | (nr/(r+1) - k - 2a)."""
    field = _qary_field(q, n, table_budget)
    _require(1 <= r <= k, f"need 1 <= r <= k, got r={r}, k={k}")
    _require(n % (r + 1) == 0, f"r + 1 = {r + 1} does not divide n = {n}",
             LocalityDoesNotDivide)
    t, a = window_parameters(n, k, r)
    _require(t >= 0, f"k = {k} exceeds the rate limit nr/(r+1) = {n * r // (r + 1)}")
    lhs = n * r // (r + 1) - k - 2 * a
    _require(lhs % (2 * r) == 0,
             f"nr/(r+1) - k - 2a = {lhs} is not divisible by 2r = {2 * r}",
             DivisibilityViolation)
    code = _qary_window_code(field, n, r, t, table_budget)
    if code.k != k:
        raise InvariantViolation(f"dimension {code.k} != requested {k}")
    return code


def window_parameters(n: int, k: int, r: int) -> tuple[int, int]:
    """(t, a): window half-width floor((nr - k(r+1)) / 2r) and a = t mod (r+1)."""
    t = (n * r - k * (r + 1)) // (2 * r)
    return t, t % (r + 1)


# -- parameter search

@dataclass(frozen=True)
class SearchRow:
    q: int
    n: int
    k: int
    r: int
    construction: str
    t: int | None
    a: int | None
    d_lower: int
    d_upper: int
    optimality: str

    def to_dict(self) -> dict:
        return {
            "q": self.q, "n": self.n, "k": self.k, "r": self.r,
            "construction": self.construction, "t": self.t, "a": self.a,
            "d_lower": self.d_lower, "d_upper": self.d_upper,
            "optimality": self.optimality,
        }


SEARCH_CSV_HEADER = "q,n,k,r,construction,t,a,d_lower,d_upper,optimality"


def _search_binary(n: int, r: int) -> list[SearchRow]:
    m = n.bit_length()
    if 2**m - 1 != n or n % (r + 1) != 0 or r < 1:
        return []
    rows = []
    k1 = r * n // (r + 1)
    rows.append(SearchRow(q=2, n=n, k=k1, r=r, construction="c1", t=None, a=None,
                          d_lower=2, d_upper=lrc_singleton_bound(n, k1, r),
                          optimality=classify_optimality(2, lrc_singleton_bound(n, k1, r))))
    if m > 1:
        k2 = construction2_dimension(m, r)
        if k2 >= 1:
            d_lower = 10 if r == 2 else 6
            upper = lrc_singleton_bound(n, k2, r)
            rows.append(SearchRow(q=2, n=n, k=k2, r=r, construction="c2", t=None, a=None,
                                  d_lower=d_lower, d_upper=upper,
                                  optimality=classify_optimality(d_lower, upper)))
    return rows


def _search_qary(q: int, n: int, r: int) -> list[SearchRow]:
    rows = []
    if (q - 1) % n or n % (r + 1) or r < 1:
        return rows
    max_k = n * r // (r + 1)
    for k in range(r, max_k + 1):
        if k % r == 0 and (n // (r + 1) - k // r) % 2 == 0:
            t = (n - k * (r + 1) // r) // 2
            d_lower = 2 * t + 2
            upper = lrc_singleton_bound(n, k, r)
            rows.append(SearchRow(q=q, n=n, k=k, r=r, construction="t33",
                                  t=t, a=t % (r + 1), d_lower=d_lower, d_upper=upper,
                                  optimality=classify_optimality(d_lower, upper)))
        t, a = window_parameters(n, k, r)
        if t >= 0 and (n * r // (r + 1) - k - 2 * a) % (2 * r) == 0:
            d_lower = 2 * t + 2
            upper = lrc_singleton_bound(n, k, r)
            rows.append(SearchRow(q=q, n=n, k=k, r=r, construction="t34",
                                  t=t, a=a, d_lower=d_lower, d_upper=upper,
                                  optimality=classify_optimality(d_lower, upper)))
    return rows


def parameter_search(q: int, n_values, r_values) -> list[SearchRow]:
    """All (n, k, r) the families here can hit, with predicted bounds.

    Rows come back sorted by (n, r, k, construction); an empty result is fine.
    """
    rows: list[SearchRow] = []
    for n in sorted(set(int(v) for v in n_values)):
        for r in sorted(set(int(v) for v in r_values)):
            if q == 2:
                rows.extend(_search_binary(n, r))
            else:
                rows.extend(_search_qary(q, n, r))
    rows.sort(key=lambda row: (row.n, row.r, row.k, row.construction))
    return rows
