from kmbruhat.errors import NotInTitsCone
from kmbruhat.tits_cone import (
    DominanceResult,
    Undetermined,
    dominant_height,
    dominant_height_via_inversions,
    dominate,
    is_dominant,
    require_dominance,
)

import pytest


def test_dominant_input(W_hyp):
    # dominant coweights of this datum have negative coordinates
    res = dominate(W_hyp, (-4, -5))
    assert res == DominanceResult((-4, -5), W_hyp.identity, frozenset())


def test_dominant_with_stabilizer(W_a2):
    res = dominate(W_a2, (1, 2))  # <(1,2), a1> = 0
    assert res.dominant == (1, 2) and res.stabilizer_gens == frozenset({0})


def test_single_reflection_undone(W_a2):
    s1 = W_a2.gen(0)
    lam = s1.apply((1, 1))
    res = dominate(W_a2, lam)
    assert res.dominant == (1, 1)
    assert res.v_min == s1
    assert res.stabilizer_gens == frozenset()


def test_negative_regular_point_is_outside(W_hyp):
    # minus a regular dominant coweight
    res = dominate(W_hyp, (4, 5))
    assert isinstance(res, Undetermined) and not res
    assert res.outside


def test_without_invariants_the_greedy_runs_to_the_cap(W_hyp):
    res = dominate(W_hyp, (4, 5), step_cap=200, use_invariants=False)
    assert isinstance(res, Undetermined) and not res.outside
    assert res.steps == 200
    heights = [W_hyp.datum.height(mu) for mu in res.trace]
    assert heights == sorted(heights) and len(set(heights)) == len(heights)


def test_require_dominance_raises_with_trace(W_hyp):
    with pytest.raises(NotInTitsCone) as info:
        require_dominance(W_hyp, (3, 4))
    assert info.value.trace[0] == (3, 4)


def test_dominant_height_examples(W_a2):
    assert dominant_height(W_a2, (2, 1)) == 3
    assert dominant_height(W_a2, W_a2.gen(0).apply((1, 1))) == 2


def test_result_invariants(W_hyp):
    for w in W_hyp.elements_up_to(5):
        for lam0 in [(-1, -1), (-2, -2), (-2, -3), (-4, -5)]:
            lam = w.apply(lam0)
            res = dominate(W_hyp, lam)
            assert res.v_min.apply(res.dominant) == lam
            assert is_dominant(W_hyp, res.dominant)
            assert res.dominant == lam0
            for j in res.stabilizer_gens:
                assert (res.v_min * W_hyp.gen(j)).length > res.v_min.length
            assert dominant_height(W_hyp, lam) == dominant_height_via_inversions(W_hyp, lam)
