import itertools

import pytest

from qcrystal import mixed, ptops, words
from qcrystal import tableaux as tb


def all_words(n, m):
    return [
        tuple(w) for w in itertools.product(range(1, n + 1), repeat=m)
    ]


# ---------------------------------------------------------------------------
# odd operators


def test_e_bar1_pt_cases():
    assert ptops.e_bar1_pt(tb.parse_primed("2 2 2 / 3")) == tb.parse_primed(
        "1 2 2 / 3"
    )
    assert ptops.e_bar1_pt(tb.parse_primed("1 1 1 / 2")) is None
    assert ptops.e_bar1_pt(tb.parse_primed("1 2' 2 / 3")) == tb.parse_primed(
        "1 1 2 / 3"
    )
    assert ptops.e_bar1_pt(()) is None


def test_f_bar1_pt_cases():
    assert ptops.f_bar1_pt(tb.parse_primed("1 2 2 / 3")) == tb.parse_primed(
        "2 2 2 / 3"
    )
    assert ptops.f_bar1_pt(tb.parse_primed("1 1 1 / 2")) == tb.parse_primed(
        "1 1 2' / 2"
    )
    assert ptops.f_bar1_pt(tb.parse_primed("2 2 2 / 3")) is None
    # blocked: the cell right of the rightmost 1 holds 2'
    assert ptops.f_bar1_pt(tb.parse_primed("1 2' 2 / 3")) is None
    assert ptops.f_bar1_pt(()) is None


def test_odd_pt_ops_mutually_inverse():
    for shape in [(2,), (2, 1), (3, 1)]:
        for t in tb.enumerate_pt(3, shape):
            up = ptops.e_bar1_pt(t)
            if up is not None:
                assert ptops.f_bar1_pt(up) == t
            down = ptops.f_bar1_pt(t)
            if down is not None:
                assert ptops.e_bar1_pt(down) == t


# ---------------------------------------------------------------------------
# even operators


def test_f_even_pt_examples():
    assert ptops.f_even_pt(1, tb.parse_primed("1 1 1 / 2")) == tb.parse_primed(
        "1 1 2 / 2"
    )
    assert ptops.f_even_pt(2, tb.parse_primed("1 1 1 / 2")) == tb.parse_primed(
        "1 1 1 / 3"
    )
    assert ptops.f_even_pt(1, tb.parse_primed("2")) is None


def test_e_even_pt_inverse_of_f():
    for shape in [(2,), (3,), (2, 1), (3, 1)]:
        for t in tb.enumerate_pt(3, shape):
            for i in (1, 2):
                down = ptops.f_even_pt(i, t)
                if down is not None:
                    assert ptops.e_even_pt(i, down) == t
                up = ptops.e_even_pt(i, t)
                if up is not None:
                    assert ptops.f_even_pt(i, up) == t


def test_f_even_pt_weight_shift_and_validity():
    n = 3
    for shape in [(2, 1), (3, 1), (4,)]:
        for t in tb.enumerate_pt(n, shape):
            for i in (1, 2):
                out = ptops.f_even_pt(i, t)
                if out is None:
                    continue
                assert tb.validate_pt(out, n=n) is None
                wt, wo = tb.pt_weight(t, n), tb.pt_weight(out, n)
                diff = tuple(a - b for a, b in zip(wt, wo))
                expect = [0] * n
                expect[i - 1], expect[i] = 1, -1
                assert diff == tuple(expect)


# ---------------------------------------------------------------------------
# intertwining with insertion


@pytest.mark.parametrize("n,m", [(2, 4), (3, 3), (3, 4)])
def test_insertion_intertwines_operators(n, m):
    for w in all_words(n, m):
        p, _ = mixed.hm(w)
        for op_w, op_t in [
            (words.e_bar1, ptops.e_bar1_pt),
            (words.f_bar1, ptops.f_bar1_pt),
        ]:
            w2 = op_w(w)
            t2 = op_t(p)
            assert (w2 is None) == (t2 is None)
            if w2 is not None:
                assert mixed.hm(w2)[0] == t2
        for i in range(1, n):
            w2 = words.f_even(i, w)
            t2 = ptops.f_even_pt(i, p)
            assert (w2 is None) == (t2 is None)
            if w2 is not None:
                assert mixed.hm(w2)[0] == t2


# ---------------------------------------------------------------------------
# transport with arbitrary recording tableaux


def test_transport_independent_of_recording_tableau():
    n = 3
    for shape in [(2,), (3,), (2, 1), (3, 1), (4,)]:
        sts = tb.enumerate_st(shape)
        for t in tb.enumerate_pt(n, shape):
            expect_e = ptops.e_bar1_pt(t)
            expect_f = ptops.f_bar1_pt(t)
            expect_even = {i: ptops.f_even_pt(i, t) for i in (1, 2)}
            for q in sts:
                assert ptops.transport_op(t, q, words.e_bar1) == expect_e
                assert ptops.transport_op(t, q, words.f_bar1) == expect_f
                for i in (1, 2):
                    assert (
                        ptops.transport_op(
                            t, q, lambda w, i=i: words.f_even(i, w)
                        )
                        == expect_even[i]
                    )


# ---------------------------------------------------------------------------
# signed variants


def test_signed_ops_empty_prime_type_match_plain():
    for t in tb.enumerate_pt(3, (2, 1)):
        assert ptops.e_signed("b1", t) == ptops.e_bar1_pt(t)
        assert ptops.f_signed(2, t) == ptops.f_even_pt(2, t)


def test_signed_ops_preserve_prime_type():
    for t in tb.enumerate_pt(2, (2, 1), diagonal_unprimed=False):
        for color in (1, "b1"):
            for op in (ptops.e_signed, ptops.f_signed):
                out = op(color, t)
                if out is not None:
                    assert tb.prime_type(out) == tb.prime_type(t)
                    assert (
                        tb.validate_pt(out, diagonal_unprimed=False) is None
                    )


def test_signed_ops_inverse():
    for t in tb.enumerate_pt(2, (2, 1), diagonal_unprimed=False):
        for color in (1, "b1"):
            up = ptops.e_signed(color, t)
            if up is not None:
                assert ptops.f_signed(color, up) == t


# ---------------------------------------------------------------------------
# extreme tableaux


def test_highest_pt():
    assert tb.fmt_primed(ptops.highest_pt(5, (5, 3, 1))) == "1 1 1 1 1 / 2 2 2 / 3"
    assert ptops.highest_pt(2, (2,)) == ((2, 2),)
    with pytest.raises(ValueError):
        ptops.highest_pt(2, (3, 2, 1))


def test_lowest_pt():
    assert tb.fmt_primed(ptops.lowest_pt(5, (5, 3, 1))) == "3 4' 4 5' 5 / 4 5' 5 / 5"
    assert tb.fmt_primed(ptops.lowest_pt(3, (3, 1))) == "2 3' 3 / 3"
    assert tb.fmt_primed(ptops.lowest_pt(2, (4, 1))) == "1 2' 2 2 / 2"
    with pytest.raises(ValueError):
        ptops.lowest_pt(1, (2, 1))


def test_extremes_are_killed_by_their_ops():
    n = 3
    for shape in [(2,), (2, 1), (3, 1)]:
        hi = ptops.highest_pt(n, shape)
        assert ptops.e_bar1_pt(hi) is None
        for i in (1, 2):
            assert ptops.e_even_pt(i, hi) is None
        lo = ptops.lowest_pt(n, shape)
        assert ptops.f_bar1_pt(lo) is None
        for i in (1, 2):
            assert ptops.f_even_pt(i, lo) is None
