import itertools

import pytest

from qcrystal import mixed, words
from qcrystal import tableaux as tb


def all_words(n, m):
    return [
        "".join(map(str, w))
        for w in itertools.product(range(1, n + 1), repeat=m)
    ]


def test_hm_golden():
    p, q = mixed.hm("333323212")
    assert p == tb.parse_primed("1 2' 2 3' 3 / 2 3' 3 / 3")
    assert q == tb.parse_plain("1 2 3 4 6 / 5 7 9 / 8")


def test_hm_small():
    assert mixed.hm("1") == (((2,),), ((1,),))
    p, q = mixed.hm("21")
    assert p == tb.parse_primed("1 2'")
    assert q == tb.parse_plain("1 2")
    p, q = mixed.hm("11")
    assert p == tb.parse_primed("1 1")
    assert q == tb.parse_plain("1 2")
    assert mixed.hm("") == ((), ())


def test_hm_insert_public():
    assert mixed.hm_insert((), 3) == (((6,),), (1, 1))
    rows, cell = mixed.hm_insert(((2,),), 1)
    assert rows == tb.parse_primed("1 1")
    assert cell == (1, 2)


def test_hm_weight_and_shape():
    for w in all_words(3, 4):
        p, q = mixed.hm(w)
        assert tb.shape_of(p) == tb.shape_of(q)
        assert tb.validate_pt(p, n=3) is None
        assert tb.validate_st(q) is None
        assert tb.pt_weight(p, 3) == words.weight(w, 3)


def test_hm_injective():
    for n, m in [(2, 5), (3, 4)]:
        images = {mixed.hm(w) for w in all_words(n, m)}
        assert len(images) == n**m


@pytest.mark.parametrize("n,m", [(2, 1), (2, 3), (2, 5), (3, 3), (3, 4)])
def test_hm_roundtrip(n, m):
    for w in all_words(n, m):
        p, q = mixed.hm(w)
        assert mixed.hm_inverse(p, q) == words.letters_of(w)


def test_hm_inverse_golden():
    p = tb.parse_primed("1 2' 2 3' 3 / 2 3' 3 / 3")
    q = tb.parse_plain("1 2 3 4 6 / 5 7 9 / 8")
    assert mixed.hm_inverse(p, q) == tuple(int(ch) for ch in "333323212")
    assert mixed.hm_inverse(((2,),), ((1,),)) == (1,)
    assert mixed.hm_inverse((), ()) == ()


def test_hm_surjective_small():
    # every valid same-shape pair is hit: reverse then forward is identity
    n = 2
    for m in (1, 2, 3, 4):
        covered = set()
        for shape in set(_strict_partitions(m)):
            for p in tb.enumerate_pt(n, shape):
                for q in tb.enumerate_st(shape):
                    w = mixed.hm_inverse(p, q)
                    assert mixed.hm(w) == (p, q)
                    covered.add(w)
        assert covered == {words.letters_of(w) for w in all_words(n, m)}


def _strict_partitions(total, biggest=None):
    if biggest is None:
        biggest = total
    if total == 0:
        return [()]
    out = []
    for part in range(min(total, biggest), 0, -1):
        for rest in _strict_partitions(total - part, part - 1):
            out.append((part,) + rest)
    return out


def test_count_identity():
    # the image partitions B_n^m by shape: sum of |PT| * |ST| recounts n^m
    for n, m in [(2, 3), (3, 3), (2, 4)]:
        total = 0
        for shape in _strict_partitions(m):
            total += len(tb.enumerate_pt(n, shape)) * len(tb.enumerate_st(shape))
        assert total == n**m


def test_psi_lambda():
    p, q = mixed.hm("21")
    assert mixed.psi_lambda(p, q) == (2, 1)


def test_q_canon():
    assert mixed.q_canon(()) == ()
    q = mixed.q_canon((5, 3, 1))
    assert q == ((1, 2, 3, 4, 5), (6, 7, 8), (9,))
    assert tb.validate_st(q) is None
    for shape in _strict_partitions(6):
        assert tb.validate_st(mixed.q_canon(shape)) is None


def test_hm_inverse_rejects_bad_input():
    with pytest.raises(mixed.NotInImage):
        mixed.hm_inverse(tb.parse_primed("1 1"), tb.parse_plain("1"))
    with pytest.raises(mixed.NotInImage):
        mixed.hm_inverse(tb.parse_primed("2'"), tb.parse_plain("1"))
    with pytest.raises(mixed.NotInImage):
        mixed.hm_inverse(tb.parse_primed("1 1"), tb.parse_plain("2 1"))
