"""Motion encoding: examples, invariants, and the certification sweep."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qschur.bijection import (
    DecodeError,
    MinimalConfig,
    MotionData,
    MotionRuleError,
    apply_motions,
    certify_range,
    decode,
    enumerate_motion_data,
    max_motions,
    minimal_configuration,
)
from qschur.partitions import is_schur_admissible, schur_counts
from qschur.schur_sums import weight_a


def test_minimal_configuration_examples():
    assert minimal_configuration(0, 0, 0) == ()
    assert minimal_configuration(1, 1, 0) == (1, 5)
    assert minimal_configuration(2, 1, 1) == (1, 4, 8, 12)
    assert minimal_configuration(0, 3, 0) == (2, 5, 8)
    assert minimal_configuration(0, 0, 3) == (3, 7, 11)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_minimal_configuration_is_admissible_with_declared_size(n1, n2, m):
    parts = minimal_configuration(n1, n2, m)
    assert is_schur_admissible(parts)
    assert sum(parts) == weight_a(n1, n2, m)
    assert len(parts) == n1 + n2 + m


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
def test_minimal_configuration_decodes_to_zero_budgets(n1, n2, m):
    want = MotionData(n1, n2, m, r=(0,) * m, rho2=(0,) * (n2 // 2),
                      rho1=(0,) * (n1 // 2))
    assert decode(minimal_configuration(n1, n2, m)) == want


def test_apply_motions_examples():
    assert apply_motions(MotionData(0, 0, 1, r=(2,))) == (5,)
    assert apply_motions(MotionData(0, 2, 0, rho2=(1,))) == (5, 8)
    # all-zero budgets: the minimal configuration itself
    still = MotionData(2, 1, 1, r=(0,), rho1=(0,))
    assert apply_motions(still) == minimal_configuration(2, 1, 1)


def test_unobstructed_pairs_slide_freely():
    for k in range(5):
        assert apply_motions(MotionData(2, 0, 0, rho1=(k,))) == \
            (1 + 3 * k, 4 + 3 * k)
        assert apply_motions(MotionData(0, 2, 0, rho2=(k,))) == \
            (2 + 3 * k, 5 + 3 * k)


def test_motion_data_validation():
    with pytest.raises(ValueError):
        MotionData(0, 0, 1)                    # r must have length 1
    with pytest.raises(ValueError):
        MotionData(2, 0, 0, rho1=(1, 2))       # one pair, two step counts
    with pytest.raises(ValueError):
        MotionData(0, 0, 2, r=(3, 1))          # not weakly increasing
    with pytest.raises(ValueError):
        MotionData(0, 0, 1, r=(-1,))
    with pytest.raises(ValueError):
        MotionData(-1, 0, 0)


def test_motion_data_dict_roundtrip():
    d = MotionData(3, 2, 2, r=(0, 4), rho2=(2,), rho1=(1,))
    assert MotionData.from_dict(d.as_dict()) == d
    assert d.config == MinimalConfig(3, 2, 2)


motion_data = st.builds(
    lambda n1, n2, m, rs, p2, p1: MotionData(
        n1, n2, m,
        r=tuple(sorted(rs[:m])),
        rho2=tuple(sorted(p2[:n2 // 2])),
        rho1=tuple(sorted(p1[:n1 // 2]))),
    st.integers(0, 4), st.integers(0, 4), st.integers(0, 3),
    st.lists(st.integers(0, 6), min_size=3, max_size=3),
    st.lists(st.integers(0, 3), min_size=2, max_size=2),
    st.lists(st.integers(0, 3), min_size=2, max_size=2),
)


@given(motion_data)
def test_size_additivity_and_admissibility(data):
    # every no-rule gap known in the rule table sits above size 52
    assume(data.size <= 52)
    result = apply_motions(data, strict=True)
    assert sum(result) == data.size
    assert is_schur_admissible(result)
    assert len(result) == data.n1 + data.n2 + data.m


@given(motion_data)
def test_decode_inverts_apply(data):
    assume(data.size <= 40)
    assert decode(apply_motions(data)) == data


def test_decode_examples():
    assert decode(()) == MotionData(0, 0, 0)
    assert decode((5, 8)) == MotionData(0, 2, 0, rho2=(1,))
    assert decode((1, 4, 8, 12)) == MotionData(2, 1, 1, r=(0,), rho1=(0,))
    assert decode((5,)) == MotionData(0, 0, 1, r=(2,))


def test_decode_rejects_inadmissible():
    with pytest.raises(ValueError):
        decode((1, 3))
    with pytest.raises(ValueError):
        decode((3, 6))


def test_max_motions_examples():
    caps = max_motions(MinimalConfig(0, 0, 1), 5)
    assert caps["r"] == 2
    assert caps["rho2"] is None and caps["rho1"] is None
    caps = max_motions(MinimalConfig(0, 2, 0), 8)
    assert caps["rho2"] == 1
    caps = max_motions(MinimalConfig(0, 0, 0), 0)
    assert caps == {"r": None, "rho2": None, "rho1": None}


def test_max_motions_caps_are_sharp():
    # the cap value is reachable, one more breaks the bound
    for config, key, budget in (
            (MinimalConfig(0, 0, 1), "r", lambda v: MotionData(0, 0, 1, r=(v,))),
            (MinimalConfig(0, 2, 0), "rho2",
             lambda v: MotionData(0, 2, 0, rho2=(v,))),
            (MinimalConfig(2, 0, 0), "rho1",
             lambda v: MotionData(2, 0, 0, rho1=(v,)))):
        for N in range(4, 14):
            cap = max_motions(config, N)[key]
            if cap < 0:
                # the component cannot fit under the bound at all
                assert max(config.partition()) > N
                continue
            assert max(apply_motions(budget(cap))) <= N
            assert max(apply_motions(budget(cap + 1))) > N


def test_enumeration_respects_size_bound():
    seen = set()
    for data in enumerate_motion_data(18):
        assert data.size <= 18
        assert data not in seen
        seen.add(data)
    # and its image is exactly the admissible partitions up to 18
    images = sorted(apply_motions(d) for d in seen)
    assert len(images) == len(set(images)) == sum(schur_counts(18))


def test_enumeration_with_largest_part_bound():
    for N in (4, 7, 10):
        images = [apply_motions(d) for d in enumerate_motion_data(20, largest_part=N)]
        assert all(not p or p[-1] <= N for p in images)
        capped = sum(schur_counts(20, largest_part=N))
        assert len(set(images)) == len(images) == capped


def test_certification_sweep():
    report = certify_range(30)
    assert report["status"] == "verified"
    assert report["failure"] is None
    assert report["partitions"] == sum(schur_counts(30))


def test_certification_rejects_negative_bound():
    with pytest.raises(ValueError):
        certify_range(-1)


def test_uncovered_cluster_signals_instead_of_guessing():
    # A 1 mod 3 pair facing a singleton at +3 with a docked 2 mod 3 pair
    # at +7, +10 matches no motion rule.  The contract is a loud
    # MotionRuleError naming the state, never a silently skipped or
    # invented step.  Smallest instance: size 58.
    data = MotionData(2, 2, 1, r=(1,), rho2=(1,), rho1=(2,))
    assert data.size == 58
    with pytest.raises(MotionRuleError) as exc:
        apply_motions(data, strict=True)
    assert exc.value.family == 1
    assert exc.value.bottom == 4
    assert exc.value.state == (4, 7, 10, 14, 17)


def test_certify_reports_the_known_gap_without_raising():
    # the sweep surfaces the same uncovered cluster as data, not a crash
    report = certify_range(58)
    assert report["status"] == "failed"
    assert report["failure"]["kind"] == "no-rule"
    assert report["failure"]["data"] == {
        "n1": 2, "n2": 2, "m": 1, "r": [1], "rho2": [1], "rho1": [2]}
