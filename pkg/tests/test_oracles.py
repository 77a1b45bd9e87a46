from twobridge import rational_cf
from twobridge.conway import MemoStore, conway, determinant
from twobridge.enumeration import EnumerationPlan, enumerate_presentations
from twobridge.invariants import genus_closed
from twobridge.oracles import (
    alexander_from_conway,
    alexander_from_seifert,
    jones_poly,
    seifert_matrix,
    v3_from_jones,
)


def test_seifert_matrix_examples():
    assert seifert_matrix((3,)) == [[-1, 0], [1, -1]]
    assert seifert_matrix((2, 2, 1)) == [[-1, 0], [1, -2]]
    m5 = seifert_matrix((5,))
    assert len(m5) == 4
    for i in range(4):
        for j in range(4):
            expected = -1 if i == j else (1 if i == j + 1 else 0)
            assert m5[i][j] == expected


def test_seifert_matrix_dimension_is_twice_genus():
    for word in enumerate_presentations(EnumerationPlan(13)):
        assert len(seifert_matrix(word)) == 2 * genus_closed(word)


def test_alexander_from_seifert_examples():
    # trefoil: t - 1 + 1/t after normalization
    assert alexander_from_seifert([[-1, 0], [1, -1]]) == {1: 1, 0: -1, -1: 1}
    # 5_2: 2t - 3 + 2/t
    assert alexander_from_seifert([[-1, 0], [1, -2]]) == {1: 2, 0: -3, -1: 2}
    assert alexander_from_seifert([]) == {0: 1}


def test_alexander_from_conway_examples():
    assert alexander_from_conway((1, 0, 1)) == {1: 1, 0: -1, -1: 1}
    assert alexander_from_conway((1, 0, 2)) == {1: 2, 0: -3, -1: 2}
    assert alexander_from_conway((1,)) == {0: 1}


def test_jones_examples():
    assert jones_poly((3,)) == {4: -1, 3: 1, 1: 1}
    assert jones_poly((5,)) == {7: -1, 6: 1, 5: -1, 4: 1, 2: 1}


def test_v3_from_jones_examples():
    assert v3_from_jones(jones_poly((3,))) == 1
    assert v3_from_jones(jones_poly((5,))) == 5
    assert v3_from_jones({0: 1}) == 0  # unknot


def test_oracle_equivalence_up_to_13():
    memo = MemoStore()
    for word in enumerate_presentations(EnumerationPlan(13)):
        poly = conway(word, memo)
        from_skein = alexander_from_conway(poly)
        from_matrix = alexander_from_seifert(seifert_matrix(word))
        assert from_skein == from_matrix
        value = rational_cf.eval_cf(word)
        at_minus_one = abs(sum(c * (-1) ** (e % 2) for e, c in from_matrix.items()))
        assert at_minus_one == determinant(poly) == value.numerator


def test_jones_normalization_up_to_13():
    for word in enumerate_presentations(EnumerationPlan(13)):
        jones = jones_poly(word)
        assert sum(jones.values()) == 1                      # V(1) = 1
        assert sum(c * e for e, c in jones.items()) == 0     # V'(1) = 0
