import pytest

from qcrystal import engine, models, ptops, typeb
from qcrystal import tableaux as tb


def test_model_words_component():
    g = engine.component(models.model_words(2), "1")
    assert sorted(g.vertices) == ["1", "2"]


def test_model_pt_component_is_all_of_pt():
    model = models.model_pt(3)
    g = engine.component(model, ptops.highest_pt(3, (3, 1)))
    assert len(g.vertices) == 24
    assert set(g.vertices) == set(tb.enumerate_pt(3, (3, 1)))
    assert engine.find_highest(g) == ptops.highest_pt(3, (3, 1))
    assert engine.find_lowest(g) == ptops.lowest_pt(3, (3, 1))
    report = engine.check_q_axioms(g)
    assert report["failures"] == []


def test_model_ssdt_component_is_all_of_ssdt():
    model = models.model_ssdt(3)
    g = engine.component(model, models.highest_ssdt(3, (3, 1)))
    assert set(g.vertices) == set(tb.enumerate_ssdt(3, (3, 1)))
    assert len(g.vertices) == 24
    assert engine.find_highest(g) == models.highest_ssdt(3, (3, 1))
    assert engine.find_lowest(g) == models.lowest_ssdt(3, (3, 1))
    report = engine.check_q_axioms(g)
    assert report["failures"] == []


def test_ssdt_extremes():
    assert tb.fmt_plain(models.highest_ssdt(4, (5, 3, 1))) == \
        "3 2 2 1 1 / 2 1 1 / 1"
    assert tb.fmt_plain(models.lowest_ssdt(4, (5, 3, 1))) == \
        "4 4 4 4 4 / 3 3 3 / 2"
    assert models.highest_ssdt(3, (1,)) == ((1,),)
    assert models.lowest_ssdt(3, (1,)) == ((3,),)
    with pytest.raises(ValueError):
        models.highest_ssdt(2, (3, 2, 1))


def test_ssdt_extremes_are_extremal():
    model = models.model_ssdt(3)
    hi = models.highest_ssdt(3, (2, 1))
    lo = models.lowest_ssdt(3, (2, 1))
    assert engine.is_q_highest(model, hi)
    for i in range(1, 3):
        assert model.e(i, hi) is None
        assert model.f(i, lo) is None
    assert model.e_bar(hi) is None
    assert model.f_bar(lo) is None
    assert model.weight(hi) == (2, 1, 0)
    assert model.weight(lo) == (0, 1, 2)


def test_model_spt_component():
    model = models.model_spt(2)
    hi = ptops.highest_pt(2, (2, 1))
    g = engine.component(model, hi)
    assert set(g.vertices) == set(tb.enumerate_pt(2, (2, 1)))
    report = engine.check_q_axioms(g)
    assert report["failures"] == []
    # a primed diagonal seeds the sibling copy of the same crystal
    g2 = engine.component(model, tb.pr(hi, {1}))
    assert len(g2.vertices) == len(g.vertices)
    assert all(tb.prime_type(t) == frozenset({1}) for t in g2.vertices)


def test_model_fact_component_33():
    model = models.model_fact(3)
    seed = typeb.parse_factorization("(+2012)()()")
    g = engine.component(model, seed)
    assert len(g.vertices) == 33
    report = engine.check_q_axioms(g)
    assert report["failures"] == []


def test_seed_factorization():
    seed = models.seed_factorization((3, 2, -1), 3)
    assert typeb.fact_word(seed) in typeb.enumerate_reduced((3, 2, -1))
    assert len(seed) == 3
    seed1 = models.seed_factorization((2, 1), 1)
    assert typeb.fmt_factorization(seed1) == "(+1)"
    seed0 = models.seed_factorization((-1,), 1)
    assert typeb.fmt_factorization(seed0) == "(+0)"
    with pytest.raises(ValueError):
        models.seed_factorization((-1, -2), 1)  # needs two unimodal factors


def test_model_fact_agrees_with_spt_counts():
    # factor crystals decompose like the signed tableau crystals they
    # insert into: |U_m(w)| = sum over distinct P of |SPT_m(shape P)|
    from qcrystal import kraskiewicz as kw

    perm = (3, 2, -1)
    m = 3
    facts = typeb.enumerate_factorizations(perm, m)
    ps = {kw.kr(word)[0] for word in typeb.enumerate_reduced(perm)}
    total = sum(
        sum(1 for _ in tb.enumerate_pt(m, tb.shape_of(p),
                                       diagonal_unprimed=False))
        for p in ps
    )
    assert len(ps) == 2
    assert total == len(facts) == 162
