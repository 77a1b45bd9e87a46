"""Exhaustive generation of positive-form continued fractions.

Words are emitted by increasing entry sum (= crossing number) and
lexicographically within each sum, so two runs with the same bound
produce identical streams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from . import rational_cf
from .errors import InvalidInput
from .rational_cf import ContinuedFraction


@dataclass(frozen=True)
class EnumerationPlan:
    max_crossings: int
    dedup_mode: str = "presentations"  # or "canonical"

    def __post_init__(self) -> None:
        if self.max_crossings < 3:
            raise InvalidInput("max_crossings must be >= 3")
        if self.dedup_mode not in ("presentations", "canonical"):
            raise InvalidInput(f"unknown dedup_mode {self.dedup_mode!r}")


@dataclass
class KnotCensus:
    presentations_per_crossing: dict[int, int] = field(default_factory=dict)
    canonical_per_crossing: dict[int, int] = field(default_factory=dict)

    @property
    def total_presentations(self) -> int:
        return sum(self.presentations_per_crossing.values())

    @property
    def total_canonical(self) -> int:
        return sum(self.canonical_per_crossing.values())


def _complete(prefix: list[int], remaining: int, position: int) -> Iterator[ContinuedFraction]:
    """Extend prefix to all positive-form completions using `remaining` sum.

    position is the 1-based index of the next entry; even positions only
    take even entries.  Completions must end at an odd position.
    """
    if remaining == 0:
        if len(prefix) % 2 == 1:
            yield tuple(prefix)
        return
    start, step = (1, 1) if position % 2 == 1 else (2, 2)
    for a in range(start, remaining + 1, step):
        prefix.append(a)
        yield from _complete(prefix, remaining - a, position + 1)
        prefix.pop()


def presentations_with_sum(total: int, leading: int | None = None) -> Iterator[ContinuedFraction]:
    """All positive-form words with the given (odd) entry sum.

    With `leading` set, only words starting with that entry — the
    partition unit for parallel sweeps.
    """
    if total % 2 == 0 or total < 3:
        return
    if leading is None:
        yield from _complete([], total, 1)
    elif 1 <= leading <= total:
        yield from _complete([leading], total - leading, 2)


def enumerate_presentations(plan: EnumerationPlan) -> Iterator[ContinuedFraction]:
    """Every positive-form word with entry sum <= max_crossings, once each."""
    for total in range(3, plan.max_crossings + 1, 2):
        yield from presentations_with_sum(total)


def census(plan: EnumerationPlan) -> KnotCensus:
    """Count presentations and distinct canonical keys per crossing number.

    Asserts along the way that presentations sharing a canonical key have
    the same crossing number (reduced alternating diagrams of one knot).
    """
    result = KnotCensus()
    seen: dict[rational_cf.CanonicalKnotKey, int] = {}
    for total in range(3, plan.max_crossings + 1, 2):
        n_pres = 0
        band_keys: set[rational_cf.CanonicalKnotKey] = set()
        for word in presentations_with_sum(total):
            n_pres += 1
            value = rational_cf.eval_cf(word)
            key = rational_cf.canonical_key(value.numerator, value.denominator)
            assert key.p > 1, "unknot cannot arise at sum >= 3"
            prior = seen.setdefault(key, total)
            if prior != total:
                raise AssertionError(f"key {key} seen at crossings {prior} and {total}")
            band_keys.add(key)
        result.presentations_per_crossing[total] = n_pres
        result.canonical_per_crossing[total] = len(band_keys)
    return result
