"""Identity-by-identity checks of the series builders at small sizes.

Expected values fall in three groups: frozen low-order polynomials
(goldens), equalities between two builders computed by unrelated routes,
and counts replayed against the brute-force enumerators.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschur import schur_sums as ss
from qschur.partitions import schur_counts, schur_gf_oracle
from qschur.qcoeff import MonomialBase, pochhammer_finite
from qschur.qpoly import QPoly

# frozen coefficient lists of lhs_schur(0..3), ascending q-powers
GOLDEN_LOW = {
    0: [1],
    1: [1, 1, 1],
    2: [1, 1, 1, 1, 1, 2, 1, 1],
    3: [1, 1, 1, 1, 1, 2, 2, 3, 3, 2, 2, 2, 2, 2, 1, 1],
}


@pytest.mark.parametrize("N", sorted(GOLDEN_LOW))
def test_low_order_goldens(N):
    want = QPoly.from_q_coeffs(
        {i: c for i, c in enumerate(GOLDEN_LOW[N])})
    assert ss.lhs_schur(N) == want
    assert ss.rhs_schur(N) == want


@pytest.mark.parametrize("N", range(0, 11))
def test_central_identity_small(N):
    assert ss.lhs_schur(N) == ss.rhs_schur(N)


def test_summands_tile_the_sum():
    for N in range(7):
        total = QPoly.zero()
        for n1 in range(N + 1):
            for n2 in range(N + 1 - n1):
                for m in range(N + 1 - n1 - n2):
                    total = total + ss.schur_summand(N, m, n1, n2)
        assert total == ss.lhs_schur(N)


def test_summand_out_of_range_is_zero():
    assert ss.schur_summand(-1, 0, 0, 0).is_zero()
    assert ss.schur_summand(3, -1, 0, 0).is_zero()
    assert ss.schur_summand(2, 0, 2, 1).is_zero()   # V < 0
    assert ss.schur_summand(1, 3, 0, 0).is_zero()   # m > 3V


@pytest.mark.parametrize("N", range(2, 12))
def test_rhs_recurrence(N):
    assert ss.recurrence_residual(ss.IdentityId.REC_ANDREWS, N).is_zero()


@pytest.mark.parametrize("N", range(4, 12))
def test_lhs_recurrence(N):
    assert ss.recurrence_residual(ss.IdentityId.REC_L, N).is_zero()


def test_termwise_recurrence_small_sweep():
    bad = []
    for N in range(4, 9):
        for m in range(N + 5):
            for n1 in range(N + 5 - m):
                for n2 in range(N + 5 - m - n1):
                    r = ss.recurrence_residual(
                        ss.IdentityId.REC_SUMMAND, N, m=m, n1=n1, n2=n2)
                    if not r.is_zero():
                        bad.append((N, m, n1, n2))
    assert bad == []


def test_termwise_recurrence_needs_all_indices():
    with pytest.raises(ValueError):
        ss.recurrence_residual(ss.IdentityId.REC_SUMMAND, 5, m=1)


@pytest.mark.parametrize("N", range(0, 13))
def test_dual_transform(N):
    lhs, rhs = ss.dual_sides(N)
    assert lhs == rhs


@pytest.mark.parametrize("N", range(0, 13))
def test_half_sum_as_single_binomial(N):
    lhs, rhs = ss.t0_binomial_sides(N)
    assert lhs == rhs


def test_half_sum_truncation_windows():
    for N in (6, 9, 12):
        full = ss.t0_half_sum(N)
        for T in (0, 3, 11):
            cut = QPoly._raw(
                {e: c for e, c in full.items() if e <= 2 * T})
            assert ss.t0_half_sum_truncated(N, T) == cut


def test_half_sum_limit_window():
    # once N is comfortably past T the truncated sum stops moving and
    # equals the closed product
    T = 16
    stable = ss.t0_half_sum_truncated(T + 2, T)
    assert ss.t0_half_sum_truncated(T + 5, T) == stable
    assert ss.t0_limit_product(T) == stable


@pytest.mark.parametrize("t", [1, 2])
def test_parity_split_limits(t):
    T = 18
    assert ss.qt_limit_sum(t, T) == ss.t0_limit_product(T)


def test_parity_split_rejects_other_t():
    with pytest.raises(ValueError):
        ss.qt_limit_sum(3, 10)


@pytest.mark.parametrize("M", range(0, 8))
def test_finite_summation_formula(M):
    lhs, rhs = ss.summation_formula_sides(M)
    assert lhs == rhs


def test_summation_limit_reaches_the_product():
    T = 20
    assert ss.summation_limit_sum(T) == ss.schur_product_truncated(T)


def test_warnaar_small_grid():
    for L in range(0, 7):
        for a in range(-L, L + 1):
            lhs, rhs = ss.warnaar_sides(L, a)
            assert lhs == rhs, (L, a)


@pytest.mark.parametrize("M", range(0, 10))
def test_q1_collapse(M):
    assert ss.q1_triple_value(M) == 3 ** M
    assert ss.q1_quad_value(M) == 4 ** M


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_weight_gap_is_twice_m(n1, n2, m):
    assert ss.weight_a(2 * n1, 2 * n2, m) - ss.weight_k(n1, n2, m) == 2 * m


def test_weight_a_is_minimal_configuration_size():
    from qschur.bijection import minimal_configuration
    for n1 in range(5):
        for n2 in range(5):
            for m in range(5):
                assert sum(minimal_configuration(n1, n2, m)) == \
                    ss.weight_a(n1, n2, m)


def test_weight_b_half_needs_room():
    with pytest.raises(ValueError):
        ss.weight_b_half(2, 2, 2, 4)


def test_weight_q_rejects_bad_t():
    with pytest.raises(ValueError):
        ss.weight_q(0, 1, 1, 1)


def test_product_side_counts_by_size():
    T = 30
    prod = ss.schur_product_truncated(T)
    counts = schur_counts(T)
    for n in range(T + 1):
        assert prod.coefficient_q(n) == counts[n]


def test_pair_series_agree_with_each_other_and_the_oracle():
    T = 24
    ali = ss.ali_gf_truncated(T)
    kur = ss.kursungoz_gf_truncated(T)
    split = ss.even_odd_split_lhs(T)
    oracle = schur_gf_oracle(T)
    assert ali == kur
    assert ali == split
    assert ali == oracle


def test_pair_series_at_x_one_is_the_product():
    T = 24
    assert ss.ali_gf_truncated(T).at_x_one() == ss.schur_product_truncated(T)


@pytest.mark.parametrize("N", range(0, 8))
def test_bounded_series_vs_bounded_oracle(N):
    T = 24
    assert ss.bounded_gf(N, T) == schur_gf_oracle(T, largest_part=N)


@pytest.mark.parametrize("N", range(1, 7))
def test_bounded_sum_collapses_to_central_lhs(N):
    lhs, rhs = ss.cor1_bounded_sum(N)
    assert lhs == rhs


def test_analytic_product_identity_small():
    # (-q;q^3)(-q^2;q^3) infinite products expanded two ways
    T = 24
    prod = ss.schur_product_truncated(T)
    direct = (pochhammer_finite(MonomialBase.of_q(-1, 1, 3), T)
              * pochhammer_finite(MonomialBase.of_q(-1, 2, 3), T)).truncate(T)
    assert prod == direct


def test_verify_wrapper_smoke():
    rep = ss.verify(ss.IdentityId.SCHUR_POLY, {"N": 4})
    assert rep.status == "verified"
    assert rep.first_discrepancy is None
    d = rep.as_dict()
    assert d["identity"] == "schur-poly"
    assert d["params"]["N"] == 4


def test_verify_reports_forced_mismatch():
    rep = ss.verify(ss.IdentityId.SCHUR_POLY, {
        "N": 3, "_perturb": {"delta": 1, "exponent_half_steps": 4}})
    assert rep.status == "failed"
    fd = rep.first_discrepancy
    assert fd is not None
    assert fd["exponent_half_steps"] == 4
    assert fd["lhs"] != fd["rhs"]


def test_verify_rejects_bad_params():
    with pytest.raises(ss.UsageError):
        ss.verify(ss.IdentityId.QT_LIMIT, {"t": 3, "T": 10})
    with pytest.raises(ss.UsageError):
        ss.verify("no-such-identity", {})
