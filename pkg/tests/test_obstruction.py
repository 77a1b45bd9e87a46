from fractions import Fraction

import pytest

from twobridge.errors import InvalidInput
from twobridge.invariants import InvariantSet
from twobridge.obstruction import (
    Verdict,
    check,
    is_two_strand_torus,
    lhs,
    rhs,
    torus_cc_slopes,
)
from twobridge.rational_cf import CanonicalKnotKey


def _inv(a2=0, a4=0, det=1, genus=1, v3=1):
    return InvariantSet(a2=a2, a4=a4, det=det, genus=genus, v3=v3)


def test_lhs_examples():
    assert lhs(_inv(det=3, genus=1, v3=1)) == 2     # trefoil
    assert lhs(_inv(det=5, genus=2, v3=5)) == 30    # C(5,1)
    assert lhs(_inv(det=7, genus=1, v3=3)) == 12    # 5_2


def test_lhs_rejects_even_determinant():
    with pytest.raises(InvalidInput):
        lhs(_inv(det=4))


def test_rhs_examples():
    assert rhs(_inv(a2=1, a4=0)) == 6
    assert rhs(_inv(a2=3, a4=1)) == 50
    assert rhs(_inv(a2=2, a4=0)) == 26


def test_torus_detection():
    assert is_two_strand_torus(CanonicalKnotKey(3, 1)) is True
    assert is_two_strand_torus(CanonicalKnotKey(7, 3)) is False
    assert is_two_strand_torus(CanonicalKnotKey(31, 1)) is True


def test_check_five_two():
    rec = check((2, 2, 1))
    assert rec.verdict is Verdict.OBSTRUCTION_HOLDS
    assert (rec.lhs, rec.rhs) == (12, 26)
    assert rec.complexity == 10
    assert rec.quotient == Fraction(12, 26)
    assert rec.s_k == Fraction(12, 26 * 3)
    assert not rec.rhs_is_zero


def test_check_trefoil_excluded():
    rec = check((3,))
    assert rec.verdict is Verdict.EXCLUDED_TORUS
    assert (rec.lhs, rec.rhs) == (2, 6)


def test_check_presentations_of_same_knot_agree():
    a = check((2, 2, 1))  # 7/3
    b = check((1, 2, 2))  # 7/5, same knot
    assert a.key == b.key == (7, 3)
    assert a.cf != b.cf and a.q != b.q
    # Everything except the presentation itself must agree.
    for field in ("key", "inv", "lhs", "rhs", "verdict",
                  "complexity", "quotient", "s_k"):
        assert getattr(a, field) == getattr(b, field), field


def test_check_rejects_non_positive_form():
    with pytest.raises(InvalidInput):
        check((2, 2))


def test_torus_inequality_direction():
    # rhs > lhs for (2, 2n+1) torus knots, 1 <= n <= 7
    for n in range(1, 8):
        rec = check((2 * n + 1,))
        assert rec.verdict is Verdict.EXCLUDED_TORUS
        assert rec.rhs > rec.lhs


def test_torus_cc_slopes():
    assert torus_cc_slopes(2, 0) == (Fraction(8, 3), Fraction(8, 1))
    assert torus_cc_slopes(1, 0) == (Fraction(1, 1), None)
    assert torus_cc_slopes(1, 1) == (Fraction(3, 2), Fraction(3, 1))
    with pytest.raises(InvalidInput):
        torus_cc_slopes(0, 0)
