"""Single-erasure repair: knock out one coordinate and recover it from its
recovering set, reading nothing else.

Simulation randomness comes from an explicit splitmix64 stream (documented in
the README) so that runs are reproducible bit-for-bit from the seed alone,
independent of any language runtime's RNG.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .analysis import LrcProfile
from .cyclic import CyclicCode, encode
from .errors import LengthMismatch, NoLocalCheck, ParameterViolation


class SplitMix64:
    """The splitmix64 sequence; next() yields 64-bit values."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


@dataclass(frozen=True)
class ErasurePattern:
    """A received word with exactly one hole."""

    erased_index: int
    received: Sequence  # entries are encodings, None at erased_index only

    def __post_init__(self):
        i = self.erased_index
        if not 0 <= i < len(self.received):
            raise ParameterViolation(f"erased index {i} outside the word")
        if self.received[i] is not None:
            raise ParameterViolation("the erased position must hold None")
        for j, v in enumerate(self.received):
            if j != i and v is None:
                raise ParameterViolation("exactly one erased position is supported")


def erase(word: Sequence[int], index: int) -> ErasurePattern:
    received = list(word)
    if not 0 <= index < len(received):
        raise ParameterViolation(f"erased index {index} outside the word")
    received[index] = None
    return ErasurePattern(erased_index=index, received=received)


def repair_erasure(code: CyclicCode, profile: LrcProfile,
                   pattern: ErasurePattern) -> int:
    """Recover the erased symbol as -1/lambda_i * sum of lambda_j c_j over R_i.

    Only the positions in the recovering set are read.
    """
    if len(pattern.received) != code.n:
        raise LengthMismatch(f"received word has length {len(pattern.received)}, expected {code.n}")
    i = pattern.erased_index
    check = profile.checks[i] if i < len(profile.checks) else None
    if check is None or i not in check.positions:
        raise NoLocalCheck(f"the profile has no recovering group covering coordinate {i}")
    f = code.field
    lam_i = check.coeffs[check.positions.index(i)]
    acc = 0
    for p, lam in zip(check.positions, check.coeffs):
        if p == i:
            continue
        acc = f.add(acc, f.mul(lam, pattern.received[p]))
    return f.neg(f.mul(f.inv(lam_i), acc))


@dataclass
class RepairStats:
    trials: int
    successes: int
    symbols_read_mean: float
    per_coordinate_hits: list[int]
    failures: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "successes": self.successes,
            "symbols_read_mean": self.symbols_read_mean,
            "per_coordinate_hits": self.per_coordinate_hits,
        }


def simulate(code: CyclicCode, profile: LrcProfile, trials: int, seed: int) -> RepairStats:
    """Seeded repair trials: random message, random erasure, repair, compare.

    Per trial the stream yields k message symbols (each next() % q) and then
    one erased index (next() % n).
    """
    if trials < 1:
        raise ParameterViolation("trials must be >= 1")
    rng = SplitMix64(seed)
    n, k, q = code.n, code.k, code.q
    successes = 0
    symbols_read = 0
    hits = [0] * n
    failures: list[dict] = []
    for trial in range(trials):
        message = [rng.below(q) for _ in range(k)]
        word = encode(code, message)
        index = rng.below(n)
        hits[index] += 1
        try:
            recovered = repair_erasure(code, profile, erase(word, index))
        except NoLocalCheck as exc:
            failures.append({"trial": trial, "index": index,
                             "expected": word[index], "error": str(exc)})
            continue
        symbols_read += len(profile.recovering_set(index))
        if recovered == word[index]:
            successes += 1
        else:
            failures.append({"trial": trial, "index": index,
                             "expected": word[index], "recovered": recovered})
    return RepairStats(trials=trials, successes=successes,
                       symbols_read_mean=symbols_read / trials,
                       per_coordinate_hits=hits, failures=failures)
