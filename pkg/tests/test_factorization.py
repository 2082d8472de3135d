import pytest

from qcrystal import factorization as fc
from qcrystal import kraskiewicz as kw
from qcrystal import typeb

U3 = list(typeb.enumerate_factorizations((3, 2, -1), 3))


def test_odd_frozen_edges():
    assert fc.f_bar1_fact("(+201)(+2)()") == "(+20)(-12)()"
    assert fc.e_bar1_fact("(+20)(-12)()") == "(+201)(+2)()"
    assert fc.f_bar1_fact("(+2012)()()") == "(+201)(-2)()"
    assert fc.e_bar1_fact("(+201)(-2)()") == "(+2012)()()"
    assert fc.f_bar1_fact("(+0)(-1)(+21)") is None


def test_even_frozen_edges():
    assert fc.f_fact("(+012)(+1)()", 1) == "(+02)(+12)()"
    assert fc.f_fact("(+012)(+1)()", 2) == "(+012)()(+1)"
    assert fc.f_fact("(+201)(-2)()", 2) == "(+201)()(-2)"
    assert fc.f_fact("(+201)(-2)()", 1) == "(+20)(-12)()"
    assert fc.f_fact("(+201)(+2)()", 1) == "(+20)(+12)()"
    assert fc.f_fact("(+201)(+2)()", 2) == "(+201)()(+2)"


def test_empty_factorization():
    empty = typeb.parse_factorization("()()()")
    assert fc.e_bar1_fact(empty) is None
    assert fc.f_bar1_fact(empty) is None
    assert fc.e_bar1_transport(empty) is None
    assert fc.f_bar1_transport(empty) is None


def test_single_factor_has_no_odd_ops():
    assert fc.e_bar1_fact("(+01)") is None
    assert fc.f_bar1_fact("(+01)") is None


def test_tuple_in_tuple_out():
    fact = typeb.parse_factorization("(+2012)()()")
    out = fc.f_bar1_fact(fact)
    assert out == typeb.parse_factorization("(+201)(-2)()")


def test_explicit_matches_transport_on_u3():
    for fact in U3:
        assert fc.e_bar1_fact(fact) == fc.e_bar1_transport(fact)
        assert fc.f_bar1_fact(fact) == fc.f_bar1_transport(fact)


def test_odd_ops_mutually_inverse_on_u3():
    for fact in U3:
        down = fc.f_bar1_fact(fact)
        if down is not None:
            assert fc.e_bar1_fact(down) == fact
        up = fc.e_bar1_fact(fact)
        if up is not None:
            assert fc.f_bar1_fact(up) == fact


def test_odd_ops_shift_weight():
    for fact in U3:
        wt = typeb.fact_weight(fact)
        down = fc.f_bar1_fact(fact)
        if down is not None:
            got = typeb.fact_weight(down)
            assert got == (wt[0] - 1, wt[1] + 1) + wt[2:]
        up = fc.e_bar1_fact(fact)
        if up is not None:
            got = typeb.fact_weight(up)
            assert got == (wt[0] + 1, wt[1] - 1) + wt[2:]


def test_results_stay_valid():
    for fact in U3[::7]:
        for i in (1, 2, "b1"):
            for op in (fc.e_fact, fc.f_fact):
                out = op(fact, i)
                if out is None:
                    continue
                typeb.check_factorization(out)
                assert len(out) == 3
                assert typeb.is_reduced(typeb.fact_word(out))


def test_even_ops_preserve_insertion_tableau():
    for fact in U3[::7]:
        p, _ = kw.pkr(fact)
        for i in (1, 2):
            out = fc.f_fact(fact, i)
            if out is not None:
                assert kw.pkr(out)[0] == p


def test_even_ops_mutually_inverse():
    for fact in U3[::5]:
        for i in (1, 2):
            down = fc.f_fact(fact, i)
            if down is not None:
                assert fc.e_fact(down, i) == fact


def test_string_round_trip():
    out = fc.f_fact("(+012)(+1)()", 1)
    assert isinstance(out, str)
    back = fc.e_fact(out, 1)
    assert back == "(+012)(+1)()"


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        fc.f_bar1_fact("(+00)()")
