import pytest

import mahonian as mh


FIVE_LETTER_BLOCKS = "{5,4} > {3} > {2,1}"
FIVE_LETTER_ALPHA = [2, 1, 1, 3, 1]


def test_permutation_sorting_index():
    u = mh.Relation.natural_order(7)
    w = [2, 4, 1, 3, 5, 7, 6]
    assert mh.sor(u, w) == 5
    assert mh.inv(u, w) == 4
    assert [step[3] for step in mh.sort_trace(u, w)] == [1, 0, 0, 2, 1, 1, 0]


def test_macmahon():
    u = mh.Relation.natural_order(3)
    expected = mh.q_multinomial([2, 1, 1])
    assert expected == [1, 2, 3, 3, 2, 1]
    assert mh.distribution("inv", [2, 1, 1], u) == expected
    assert mh.distribution("maj", [2, 1, 1], u, jobs=2) == expected


def test_relations():
    u = mh.Relation(2, [(2, 1), (2, 2)])
    bp = u.to_bipartition()
    assert str(bp) == "_{2}_ > {1}"
    assert bp.flags == [True, False]
    assert bp.relation() == u
    assert u.complement().complement() == u
    assert not mh.Relation(2, [(1, 2), (2, 1)]).is_bipartitional()
    removed, added, witness = mh.is_essentially_bipartitional(mh.Relation(2, [(1, 1), (1, 2)]), [1, 1])
    assert removed == {1} and added == set()
    assert str(witness) == "{1} > {2}"


def test_sorting_generating_function_and_bcode():
    bp = mh.OrderedBipartition.parse(FIVE_LETTER_BLOCKS)
    u = bp.relation()
    ok, reasons = mh.sor_conditions(u, FIVE_LETTER_ALPHA)
    assert ok and reasons == []
    gf = mh.gf_sorting(FIVE_LETTER_ALPHA, bp)
    assert sum(gf) == mh.class_size(FIVE_LETTER_ALPHA) == 3360
    assert mh.distribution("sor-graphical", FIVE_LETTER_ALPHA, u) == gf

    w = [4, 2, 3, 4, 5, 4, 1, 1]
    partitions, markers = mh.bcode_encode(w, bp, FIVE_LETTER_ALPHA)
    assert markers == [3, 0, 2]
    assert mh.bcode_decode(partitions, markers, bp, FIVE_LETTER_ALPHA) == w


def test_verification():
    report = mh.verify_theorem1(3, [1, 1, 2], jobs=2)
    assert report["agreements"] == 512 and report["passed"]
    assert mh.verify_theorem2(2, [2, 1])["passed"]
    assert not mh.verify_theorem2(2, [2, 1], tie_rule="leftmost")["passed"]


def test_chain_word_and_errors():
    assert mh.maximal_chain_word(mh.Relation(2, [(2, 1)]), [2, 1]) == [1, 2, 1]
    with pytest.raises(mh.Error):
        mh.q_binomial(2, 3)
    with pytest.raises(mh.Error):
        mh.verify_theorem1(4, [1, 1, 1, 1])
