import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from gonality import (DomainError, GonalitySequence, complete_sequence, dual_pair,
                      fixture_sequence, general_bn_value, general_sequence,
                      pentagonal_sequence, plane_curve_sequence, tail_values,
                      validate_sequence)
from gonality.duality import check_prefix

from oracles import closure_oracle

QUINTIC = {1: 5, 2: 9, 3: 10, 4: 14, 5: 15}


@pytest.mark.parametrize("args,expected", [((9, 4, 1), (12, 5)), ((19, 12, 3), (24, 9)), ((16, 15, 4), (15, 4))])
def test_dual_pair_examples(args, expected):
    p = dual_pair(*args)
    assert (p.d_dual, p.r_dual) == expected


def test_dual_pair_involution():
    for g in range(4, 201):
        for d in range(0, 2 * g - 1):
            for r in (0, 1, d // 3, g):
                p = dual_pair(g, d, r)
                q = dual_pair(g, p.d_dual, p.r_dual)
                assert (q.d_dual, q.r_dual) == (d, r)


def test_dual_pair_domain():
    with pytest.raises(DomainError):
        dual_pair(3, 1, 1)


def test_completion_extremal():
    s = complete_sequence(9, {1: 4, 2: 7, 3: 8}, 14)
    assert [s[r] for r in range(4, 9)] == [11, 12, 14, 15, 16]
    assert all(s[r] == r + 9 for r in range(9, 15))
    assert s.values() == fixture_sequence("extremal_8_3", 14).values()


def test_completion_quintic():
    s = complete_sequence(16, QUINTIC, 12)
    assert [s[r] for r in range(6, 11)] == [18, 19, 20, 23, 24]
    assert (s[11], s[12]) == (25, 27)
    assert s.provenance[11] == "duality" and s.provenance[1] == "fixture"


def test_completion_agrees_with_tails_on_fixtures():
    for g, pre in ((9, {1: 4, 2: 7, 3: 8}), (16, QUINTIC), (14, {1: 8, 2: 10, 3: 12, 4: 13})):
        s = complete_sequence(g, pre, 2 * g)
        for r in range(g - pre[1] + 1, 2 * g + 1):
            assert s[r] == tail_values(g, pre[1], r)


@pytest.mark.parametrize("pre", [{1: 4, 2: 4}, {2: 5}, {1: 4, 3: 7}, {1: 9}, {}])
def test_bad_prefix(pre):
    with pytest.raises(DomainError):
        complete_sequence(9, pre, 5)


def test_bad_r_max():
    with pytest.raises(DomainError):
        complete_sequence(9, {1: 4}, 0)


def test_validator_examples():
    assert validate_sequence(fixture_sequence("extremal_8_3")) == []
    bad = validate_sequence(GonalitySequence(9, {1: 4, 2: 4}))
    assert any(v.rule == "strict_increase" and v.indices == (1, 2) for v in bad)
    q = complete_sequence(16, QUINTIC, 12)
    assert q[11] == 2 * 16 - 2 - 5
    assert validate_sequence(q, plane=False) == []


def test_validator_rules_fire():
    rules = lambda s, **kw: {v.rule for v in validate_sequence(s, **kw)}
    assert "subadditivity" in rules(GonalitySequence(9, {1: 3, 2: 7}))
    assert "additivity_forces_linear" in rules(GonalitySequence(20, {1: 4, 2: 9, 3: 13}))
    assert "upper_bound" in rules(GonalitySequence(9, {1: 7}))
    assert "tail" in rules(GonalitySequence(9, {1: 4, 9: 17}))
    assert "tail" in rules(GonalitySequence(9, {1: 4, 6: 15}))
    assert "clifford_lower_bound" in rules(fixture_sequence("extremal_8_3"), clifford=3)
    assert rules(fixture_sequence("extremal_8_3"), clifford=2) == set()
    plane = plane_curve_sequence(5, 6)
    assert rules(plane, plane=True) == set()
    assert rules(plane, plane=False) == {"dual_of_gonal_pencil"}


def _family_sequences():
    for g in range(4, 61):
        yield general_sequence(g)
    for g in range(11, 120):
        if g % 5 != 1:
            yield pentagonal_sequence(g)
    for d in range(5, 13):
        yield plane_curve_sequence(d, 2 * plane_curve_sequence(d).g)
    for name in ("extremal_8_3", "genus14_g13_4", "tetragonal_g9", "bielliptic_g9"):
        s = fixture_sequence(name)
        yield fixture_sequence(name, 2 * s.g)


def test_idempotence_on_families():
    for s in _family_sequences():
        pre = s.special_prefix()
        again = complete_sequence(s.g, pre, s.r_max)
        assert again.values() == s.values(), s.family
        assert [v.rule for v in validate_sequence(again)] == []


@st.composite
def prefixes(draw):
    g = draw(st.integers(4, 60))
    d = draw(st.integers(2, (g + 3) // 2))
    vals = [d]
    for step in draw(st.lists(st.integers(1, 4), max_size=g)):
        if vals[-1] + step >= g:
            break
        vals.append(vals[-1] + step)
    return g, {i + 1: v for i, v in enumerate(vals)}


@settings(max_examples=400, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(prefixes())
def test_completion_fuzz(case):
    g, pre = case
    check_prefix(g, pre)
    r0 = len(pre)
    # the prefix must be exactly the sub-genus part of something plausible
    assume(validate_sequence(GonalitySequence(g, pre)) == [])
    assume(general_bn_value(g, r0 + 1) >= g)
    r_max = 2 * g + 2
    s = complete_sequence(g, pre, r_max)
    oracle = closure_oracle(g, pre, r_max)
    assert s.values() == [oracle[r] for r in range(1, r_max + 1)]
    for r in range(g - pre[1] + 1, r_max + 1):
        assert s[r] == tail_values(g, pre[1], r)
    hard = {v.rule for v in validate_sequence(s)} & {"strict_increase", "upper_bound", "tail"}
    assert hard == set()
