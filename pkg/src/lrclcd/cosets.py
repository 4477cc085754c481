"""q-cyclotomic cosets modulo n and defining-set algebra.

Exponents are always stored reduced to [0, n); a "negative" exponent -t enters
as n - t.  Consecutive-run detection treats the index set cyclically, since
the interesting defining sets straddle zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptySet, NotCoprime


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of one residue under multiplication by q modulo n."""

    n: int
    q: int
    rep: int
    members: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v % self.n in self.members


def cyclotomic_coset(a: int, n: int, q: int) -> CyclotomicCoset:
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    a %= n
    members = {a}
    x = a * q % n
    while x != a:
        members.add(x)
        x = x * q % n
    return CyclotomicCoset(n=n, q=q, rep=min(members), members=tuple(sorted(members)))


def all_cosets(n: int, q: int) -> list[CyclotomicCoset]:
    """The full coset partition of [0, n), ordered by representative."""
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    seen = [False] * n
    out = []
    for a in range(n):
        if seen[a]:
            continue
        coset = cyclotomic_coset(a, n, q)
        for v in coset.members:
            seen[v] = True
        out.append(coset)
    return out


@dataclass(frozen=True)
class DefiningSet:
    """A set of exponents modulo n, canonically sorted."""

    n: int
    exponents: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __contains__(self, v: int) -> bool:
        return v % self.n in set(self.exponents)

    def union(self, other: Iterable[int]) -> DefiningSet:
        return defining_set(self.n, list(self.exponents) + [v for v in other])

    def complement(self) -> DefiningSet:
        present = set(self.exponents)
        return defining_set(self.n, (v for v in range(self.n) if v not in present))

    def negated(self) -> DefiningSet:
        return negate_set(self)

    def is_negation_closed(self) -> bool:
        return self.negated() == self

    def is_closed_under(self, q: int) -> bool:
        present = set(self.exponents)
        return all(v * q % self.n in present for v in present)


def defining_set(n: int, exponents: Iterable[int]) -> DefiningSet:
    if n < 1:
        raise ValueError("modulus must be positive")
    return DefiningSet(n=n, exponents=tuple(sorted({v % n for v in exponents})))


def negate_set(s: DefiningSet) -> DefiningSet:
    return defining_set(s.n, ((s.n - v) % s.n for v in s.exponents))


def longest_consecutive_run(s: DefiningSet) -> tuple[int, int]:
    """(start, length) of the longest cyclically consecutive block inside s.

    Ties break toward the smallest start; the full set reports (0, n).
    """
    if not s.exponents:
        raise EmptySet("run detection needs a nonempty set")
    n = s.n
    present = set(s.exponents)
    if len(present) == n:
        return 0, n
    best_start, best_len = None, 0
    for v in s.exponents:
        if (v - 1) % n in present:
            continue  # not the head of a run
        length = 1
        while (v + length) % n in present:
            length += 1
        if length > best_len or (length == best_len and v < best_start):
            best_start, best_len = v, length
    return best_start, best_len
