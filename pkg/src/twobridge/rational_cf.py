"""Continued-fraction and rational arithmetic for 2-bridge knots.

A 2-bridge knot is identified by a fraction p/q, itself encoded by a
continued fraction ``[a1, ..., am]`` with ``p/q = a1 + 1/(a2 + ...)``.
A *positive form* word (odd length, all entries >= 1, even-position
entries even, odd entry sum >= 3) presents a positive knot diagram.

All arithmetic is exact; fractions never leave ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidInput, NotPositiveKnot, ParseError, ZeroDenominator

ContinuedFraction = tuple[int, ...]
EvenContinuedFraction = tuple[int, ...]


class CanonicalKnotKey(NamedTuple):
    """Deduplication key: same knot, same key, for any presentation."""

    p: int
    q_star: int


def eval_cf(entries: Sequence[int]) -> Fraction:
    """Evaluate the nested fraction a1 + 1/(a2 + 1/(... + 1/am))."""
    if not entries:
        raise InvalidInput("empty continued fraction")
    value = Fraction(entries[-1])
    for a in reversed(entries[:-1]):
        if value == 0:
            raise ZeroDenominator(f"tail of {list(entries)} evaluates to 0")
        value = a + 1 / value
    return value


def is_positive_knot_form(entries: Sequence[int]) -> bool:
    """True iff the word presents a positive 2-bridge *knot* diagram."""
    if len(entries) % 2 == 0:
        return False
    if any(a < 1 for a in entries):
        return False
    if any(entries[i] % 2 != 0 for i in range(1, len(entries), 2)):
        return False
    total = sum(entries)
    return total % 2 == 1 and total >= 3


def crossing_count(entries: Sequence[int]) -> int:
    """Crossing number of the positive-form diagram: the entry sum."""
    return sum(entries)


def to_even_cf(p: int, q: int) -> EvenContinuedFraction:
    """Expand p/q into an all-even continued fraction of even length.

    If q is odd it is first replaced by the shift q +/- p with
    |q'| < |p| (the negative shift when both qualify).  Each partial
    quotient is then the even member of {floor, floor+1}, preferring
    the floor when the floor itself is even.  The denominator chain
    strictly decreases in magnitude, so this terminates.
    """
    if abs(p) <= abs(q) or p % 2 == 0:
        raise InvalidInput(f"need |p| > |q| with p odd, got {p}/{q}")
    if math.gcd(p, q) != 1:
        raise InvalidInput(f"{p}/{q} is not in lowest terms")
    if q % 2 != 0:
        candidates = [s for s in (q - p, q + p) if abs(s) < abs(p)]
        if not candidates:
            raise InvalidInput(f"no shift of q={q} lies within (-|p|, |p|)")
        q = min(candidates)
    entries: list[int] = []
    num, den = p, q
    while True:
        floor = num // den
        a = floor if floor % 2 == 0 else floor + 1
        entries.append(a)
        rem = num - a * den
        if rem == 0:
            break
        num, den = den, rem
    result = tuple(entries)
    assert len(result) % 2 == 0 and all(a != 0 and a % 2 == 0 for a in result)
    return result


def canonical_key(p: int, q: int) -> CanonicalKnotKey:
    """Key (p, min(q, q^-1) mod p) shared by all presentations of one knot."""
    if p <= 0 or p % 2 == 0 or math.gcd(p, q) != 1:
        raise InvalidInput(f"need positive odd p coprime to q, got {p}/{q}")
    q0 = q % p
    return CanonicalKnotKey(p, min(q0, pow(q0, -1, p)))


def _all_positive_expansions(p: int, q: int) -> Iterator[ContinuedFraction]:
    """The (at most two) continued fractions of p/q with every entry >= 1.

    The canonical floor expansion ends with a final entry >= 2; splitting
    that entry as (a-1, 1) gives the only other all-positive word.
    """
    entries: list[int] = []
    num, den = p, q
    while den:
        a = num // den
        entries.append(a)
        num, den = den, num - a * den
    yield tuple(entries)
    if entries[-1] >= 2:
        yield tuple(entries[:-1] + [entries[-1] - 1, 1])


def positive_cf_from_rational(p: int, q: int) -> ContinuedFraction:
    """Positive-form word for C(p, q), if the knot is positive.

    Works with the representative q mod p; a positive form evaluating
    to p/q' with q' = q^-1 mod p would, reversed, evaluate to p/(q mod p)
    itself, so no other representative needs searching.
    """
    if p <= 0 or p % 2 == 0:
        raise InvalidInput(f"need positive odd p, got {p}")
    if math.gcd(p, q) != 1:
        raise InvalidInput(f"{p}/{q} is not in lowest terms")
    q0 = q % p
    if q0 != 0:
        for word in _all_positive_expansions(p, q0):
            if is_positive_knot_form(word):
                return word
    raise NotPositiveKnot(f"C({p},{q}) has no positive-form presentation")


def parse_cf(text: str) -> ContinuedFraction:
    """Parse the comma-separated wire format, e.g. ``"2,2,1"``."""
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad continued fraction {text!r}") from exc
    if not entries:
        raise ParseError("empty continued fraction")
    return entries


def format_cf(entries: Sequence[int]) -> str:
    return ",".join(str(a) for a in entries)


def parse_fraction(text: str) -> Fraction:
    """Parse the ``"p/q"`` wire format."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc
