"""Genus and the degree-3 Vassiliev invariant v3 for positive 2-bridge knots.

Both invariants read directly off continued-fraction data: genus from
the odd-position entries of a positive-form word (or half the length of
the all-even expansion), v3 from the half-entries of the all-even
expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import rational_cf
from .conway import MemoStore, a2 as _a2, a4 as _a4, conway as _conway
from .conway import determinant as _determinant
from .errors import NonIntegerResult
from .rational_cf import ContinuedFraction, EvenContinuedFraction


@dataclass(frozen=True)
class InvariantSet:
    a2: int
    a4: int
    det: int
    genus: int
    v3: int


def genus_closed(cf: Sequence[int]) -> int:
    """(sum of odd-position entries - 1) / 2, from the Seifert surface
    of the standard positive diagram."""
    return (sum(cf[0::2]) - 1) // 2


def genus_even(ecf: Sequence[int]) -> int:
    """Half the length of the all-even expansion."""
    return len(ecf) // 2


def v3_even(ecf: Sequence[int]) -> int:
    """v3 from the all-even expansion [2b1, 2c1, ..., 2bn, 2cn]."""
    b = [a // 2 for a in ecf[0::2]]
    c = [a // 2 for a in ecf[1::2]]
    n = len(b)
    left = sum(c[k] * sum(b[: k + 1]) ** 2 for k in range(n))
    right = sum(b[k] * sum(c[k:]) ** 2 for k in range(n))
    half = Fraction(left - right, 2)
    if half.denominator != 1:
        raise NonIntegerResult(f"v3 of {list(ecf)} is not integral: {half}")
    return int(half)


def invariants_for(cf: ContinuedFraction, memo: MemoStore | None = None) -> InvariantSet:
    """Bundle a2, a4, det, genus, v3 for a positive-form word."""
    poly = _conway(cf, memo)
    value = rational_cf.eval_cf(cf)
    ecf = rational_cf.to_even_cf(value.numerator, value.denominator)
    return InvariantSet(
        a2=_a2(poly),
        a4=_a4(poly),
        det=_determinant(poly),
        genus=genus_even(ecf),
        v3=v3_even(ecf),
    )
