import itertools

import pytest

from kmbruhat.affine import AffineRoot, WPlusElt
from kmbruhat.bruhat import (
    NOT_FOUND,
    SAME_CLASS,
    UNKNOWN,
    VARYING_CLASS,
    BruhatOrder,
    SearchBounds,
    tri_str,
)
from kmbruhat.grading import GradingRegion, enumerate_region, verify_grading
from kmbruhat.root_datum import datum_from_cartan
from kmbruhat.roots import simple_root

from conftest import A1


def test_search_bounds_must_be_positive():
    with pytest.raises(ValueError):
        SearchBounds(root_height_bound=0)


def test_unknown_is_not_a_boolean():
    with pytest.raises(TypeError):
        bool(UNKNOWN)
    assert tri_str(UNKNOWN) == "Unknown" and tri_str(True) == "True"


def test_raises_examples(aw_a2, a2):
    W = aw_a2.W
    for i in range(2):
        a = AffineRoot(simple_root(a2, i), 0)
        assert aw_a2.raises(aw_a2.identity(), a)
        assert not aw_a2.raises(aw_a2.element((0, 0), W.gen(i)), a)


def test_raises_on_ambient_elements(aw_hyp, hyp):
    x = aw_hyp.ambient((4, 5))
    assert aw_hyp.raises(x, AffineRoot(simple_root(hyp, 0), 3)) in (True, False)


def test_less_than_examples(order_a2, aw_a2):
    x = aw_a2.element((1, 0), aw_a2.W.gen(1))
    assert order_a2.less_than(x, x) is False
    a = AffineRoot(simple_root(aw_a2.datum, 0), 2)
    if aw_a2.raises(x, a):
        y = aw_a2.reflect_left(a, x)
    else:
        y, x = x, aw_a2.tag(aw_a2.reflect_left(a, x))
    y = aw_a2.tag(y)
    assert order_a2.less_than(x, y) is True
    chain = order_a2.find_chain(x, y)
    assert chain.elements[0] == x and chain.elements[-1] == y


def test_less_than_is_false_when_length_does_not_grow(order_hyp, aw_hyp):
    x, y = aw_hyp.element((-2, -3)), aw_hyp.element((-1, -1))
    if aw_hyp.affine_length(y) <= aw_hyp.affine_length(x):
        assert order_hyp.less_than(x, y) is False
    else:
        assert order_hyp.less_than(y, x) is False


def test_upper_covers_of_identity(order_a2, aw_a2):
    covers = order_a2.upper_covers(aw_a2.identity())
    targets = covers.targets()
    W = aw_a2.W
    assert aw_a2.element((0, 0), W.gen(0)) in targets
    assert aw_a2.element((0, 0), W.gen(1)) in targets
    assert covers.complete
    assert all(c.length_delta == 1 and c.oracle is True for c in covers)


@pytest.mark.parametrize("name", ["order_a2", "order_hyp", "order_aff"])
def test_cover_certificates_have_the_predicted_shape(name, request):
    order = request.getfixturevalue(name)
    for x in enumerate_region(order.aw, GradingRegion(2, 2))[:40]:
        for c in order.upper_covers(x):
            assert c.length_delta == 1
            assert c.oracle is True
            assert not c.shape_failures
            if c.kind == VARYING_CLASS:
                k = order.datum.pair(x.lam, c.reflection.beta.root_vec)
                sigma = 1 if k >= 0 else -1
                assert c.reflection.n in (-sigma, k + sigma)
            else:
                assert c.kind == SAME_CLASS


def test_is_cover_examples(order_a2, aw_a2):
    e = aw_a2.identity()
    s1 = aw_a2.element((0, 0), aw_a2.W.gen(0))
    assert order_a2.is_cover(e, s1) is True
    assert order_a2.is_cover(s1, e) is False
    w0 = aw_a2.element((0, 0), aw_a2.W.from_word([0, 1, 0]))
    assert order_a2.is_cover(e, w0) is False


def test_find_chain_trivial_cases(order_a2, aw_a2):
    e = aw_a2.identity()
    assert len(order_a2.find_chain(e, e)) == 0
    s1 = aw_a2.element((0, 0), aw_a2.W.gen(0))
    assert len(order_a2.find_chain(e, s1)) == 1
    assert order_a2.find_chain(s1, e) is NOT_FOUND


def test_chains_are_maximal_in_a2(order_a2, aw_a2):
    els = [aw_a2.element(lam, w) for lam in itertools.product(range(-1, 2), repeat=2) for w in aw_a2.W.elements_up_to(3)]
    checked = 0
    for x in els:
        for y in els:
            delta = order_a2.length(y) - order_a2.length(x)
            if 0 < delta <= 4 and order_a2.less_than(x, y) is True:
                chain = order_a2.find_chain(x, y)
                assert len(chain) == delta
                lengths = [order_a2.length(z) for z in chain.elements]
                assert lengths == list(range(lengths[0], lengths[0] + delta + 1))
                checked += 1
    assert checked > 100


def test_interval_in_a1(aw_a1):
    order = BruhatOrder(aw_a1)
    iv = order.interval(aw_a1.identity(), aw_a1.element((1,), aw_a1.W.gen(0)))
    assert iv.complete
    assert [order.length(z) for z in iv.elements] == [0, 1, 1, 2, 2, 3]


def test_interval_of_incomparable_pair(order_a2, aw_a2):
    s1 = aw_a2.element((0, 0), aw_a2.W.gen(0))
    s2 = aw_a2.element((0, 0), aw_a2.W.gen(1))
    iv = order_a2.interval(s1, s2)
    assert iv.elements == () and iv.complete


def test_verify_grading_a1():
    report = verify_grading(datum_from_cartan(A1), GradingRegion(3, 3))
    assert report.ok and not report.unknowns
    assert report.elements > 0 and report.certificates


def test_verify_grading_empty_region(a2):
    report = verify_grading(a2, GradingRegion(-1, 2))
    assert report.elements == 0 and report.relations == 0 and report.ok


def test_grading_report_table(hyp):
    report = verify_grading(hyp, GradingRegion(1, 1))
    table = report.tsv().splitlines()
    assert table[0] == "base\treflection\ttarget\tkind\tdelta\toracle\tshape"
    assert len(table) == len(report.certificates) + 1
    assert "violations: 0" in report.text()


def test_same_class_relative_order(order_hyp, aw_hyp):
    W = aw_hyp.W
    lam = (-2, -3)
    v = aw_hyp.dominance(aw_hyp.element(lam)).v_min
    ws = W.elements_up_to(3)
    for w in ws:
        for w2 in ws:
            x, y = aw_hyp.element(lam, w), aw_hyp.element(lam, w2)
            lt = order_hyp.less_than(x, y)
            if lt is True:
                assert W.relative_length(v, w2) > W.relative_length(v, w)
