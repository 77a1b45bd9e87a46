"""The chirally cosmetic surgery obstruction and per-knot verdicts.

A positive 2-bridge knot that is not a (2, 2n+1) torus knot admits no
chirally cosmetic surgery whenever

    v3 * ((det - 5)/2 + 3g)  !=  7*a2^2 - a2 - 10*a4

holds; both sides are exact integers (det is odd).  Torus knots C(2n+1, 1)
are the known exceptional family and are excluded up front.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import rational_cf
from .conway import MemoStore
from .errors import InvalidInput
from .invariants import InvariantSet, invariants_for
from .rational_cf import CanonicalKnotKey, ContinuedFraction


class Verdict(enum.Enum):
    EXCLUDED_TORUS = "ExcludedTorus"
    OBSTRUCTION_HOLDS = "ObstructionHolds"
    OBSTRUCTION_INCONCLUSIVE = "ObstructionInconclusive"


@dataclass(frozen=True)
class ObstructionRecord:
    key: CanonicalKnotKey
    cf: ContinuedFraction
    p: int                     # numerator of the presentation's fraction
    q: int                     # denominator of the presentation's fraction
    inv: InvariantSet
    lhs: int
    rhs: int
    verdict: Verdict
    complexity: int            # p + q* of the canonical key
    quotient: Fraction | None  # |lhs| / |rhs|; None when rhs = 0
    s_k: Fraction | None       # quotient / q*; None when rhs = 0

    @property
    def rhs_is_zero(self) -> bool:
        return self.rhs == 0


def lhs(inv: InvariantSet) -> int:
    """v3 * ((det - 5)/2 + 3g); exact since det is odd."""
    if inv.det % 2 == 0:
        raise InvalidInput(f"determinant must be odd, got {inv.det}")
    return inv.v3 * ((inv.det - 5) // 2 + 3 * inv.genus)


def rhs(inv: InvariantSet) -> int:
    return 7 * inv.a2 * inv.a2 - inv.a2 - 10 * inv.a4


def is_two_strand_torus(key: CanonicalKnotKey) -> bool:
    """C(2n+1, 1), the only 2-bridge L-space knots."""
    return key.q_star == 1


def check(cf: Sequence[int], memo: MemoStore | None = None) -> ObstructionRecord:
    """Full per-knot record for one positive-form presentation."""
    word = tuple(cf)
    if not rational_cf.is_positive_knot_form(word):
        raise InvalidInput(f"{list(word)} is not a positive-form word")
    value = rational_cf.eval_cf(word)
    p, q = value.numerator, value.denominator
    key = rational_cf.canonical_key(p, q)
    inv = invariants_for(word, memo)
    assert inv.v3 != 0, f"v3 vanished for {list(word)}"
    left, right = lhs(inv), rhs(inv)
    if is_two_strand_torus(key):
        verdict = Verdict.EXCLUDED_TORUS
    elif left != right:
        verdict = Verdict.OBSTRUCTION_HOLDS
    else:
        verdict = Verdict.OBSTRUCTION_INCONCLUSIVE
    # Metrics are taken from the canonical key so that every presentation
    # of the same knot yields the same record apart from the cf field.
    if right != 0:
        quotient = Fraction(abs(left), abs(right))
        s_k = quotient / key.q_star
    else:
        quotient = None
        s_k = None
    return ObstructionRecord(
        key=key, cf=word, p=p, q=q, inv=inv, lhs=left, rhs=right,
        verdict=verdict, complexity=key.p + key.q_star, quotient=quotient, s_k=s_k,
    )


def torus_cc_slopes(n: int, m: int) -> tuple[Fraction | None, Fraction | None]:
    """The chirally cosmetic surgery slopes 2n^2(2m+1) / (n(2m+1) +/- 1)
    on the (2, 2n+1) torus knot; None stands for the slope infinity."""
    if n < 1 or m < 0:
        raise InvalidInput("need n >= 1 and m >= 0")
    numerator = 2 * n * n * (2 * m + 1)
    slopes = []
    for sign in (+1, -1):
        denominator = n * (2 * m + 1) + sign
        slopes.append(Fraction(numerator, denominator) if denominator else None)
    return slopes[0], slopes[1]
