"""The verify() entry point: reports, parameter handling, fault paths."""

import json

import pytest

from qschur.schur_sums import (
    IdentityId,
    UsageError,
    VerificationReport,
    verify,
)

# identities with cheap parameter choices, used to walk the whole registry
CHEAP_PARAMS = {
    IdentityId.SCHUR_POLY: {"N": 4},
    IdentityId.DUAL: {"N": 5},
    IdentityId.T0_BINOM: {"N": 6},
    IdentityId.T0_LIMIT: {"N": 12, "T": 12},
    IdentityId.QT_LIMIT: {"t": 1, "T": 14},
    IdentityId.SUMMATION_M: {"M": 4},
    IdentityId.WARNAAR: {"L": 4},
    IdentityId.REC_ANDREWS: {"N": 5},
    IdentityId.REC_L: {"N": 6},
    IdentityId.REC_SUMMAND: {"N": 5},
    IdentityId.GF_BOUNDED: {"N": 4, "T": 16},
    IdentityId.GF_ALI_EQ_KURSUNGOZ: {"T": 16},
    IdentityId.GF_EVEN_ODD_SPLIT: {"T": 16},
    IdentityId.ANALYTIC_SCHUR: {"T": 16},
    IdentityId.Q1_TRIPLE: {"M": 5},
    IdentityId.Q1_QUAD: {"M": 5},
    IdentityId.EXPONENT_DIFF: {"max": 5},
}


@pytest.mark.parametrize("ident", list(IdentityId))
def test_every_identity_verifies_at_small_parameters(ident):
    rep = verify(ident, CHEAP_PARAMS[ident])
    assert rep.status == "verified"
    assert rep.verified
    assert rep.first_discrepancy is None
    assert rep.identity == ident.value


@pytest.mark.parametrize("ident", list(IdentityId))
def test_injected_fault_is_caught_everywhere(ident):
    # the hook adds 1 to the left side; every runner must notice
    params = dict(CHEAP_PARAMS[ident])
    params["_perturb"] = {"delta": 1, "exponent_half_steps": 0}
    rep = verify(ident, params)
    assert rep.status == "failed"
    fd = rep.first_discrepancy
    assert fd is not None
    assert set(fd) == {"x_degree", "exponent_half_steps", "lhs", "rhs"}
    assert fd["lhs"] != fd["rhs"]
    # hooks are not echoed back
    assert "_perturb" not in rep.params


def test_report_roundtrips_through_json():
    rep = verify(IdentityId.SCHUR_POLY, {"N": 3})
    doc = json.loads(json.dumps(rep.as_dict()))
    assert doc["identity"] == "schur-poly"
    assert doc["params"] == {"N": 3}
    assert doc["status"] == "verified"
    assert doc["first_discrepancy"] is None
    assert doc["elapsed_ms"] == 0


def test_timings_flag_controls_elapsed():
    silent = verify(IdentityId.SCHUR_POLY, {"N": 3})
    assert silent.elapsed_ms == 0
    timed = verify(IdentityId.SCHUR_POLY, {"N": 8}, timings=True)
    assert timed.elapsed_ms >= 0


def test_string_names_are_accepted():
    rep = verify("rec-andrews", {"N": 4})
    assert rep.status == "verified"


def test_unknown_identity_is_a_usage_error():
    with pytest.raises(UsageError):
        verify("schur_poly", {"N": 3})
    with pytest.raises(UsageError):
        verify("", {})


def test_missing_and_malformed_parameters():
    with pytest.raises(UsageError):
        verify(IdentityId.SCHUR_POLY, {})
    with pytest.raises(UsageError):
        verify(IdentityId.SCHUR_POLY, {"N": "4"})
    with pytest.raises(UsageError):
        verify(IdentityId.SCHUR_POLY, {"N": True})
    with pytest.raises(UsageError):
        verify(IdentityId.WARNAAR, {"L": -1})


def test_parity_split_t_is_restricted():
    with pytest.raises(UsageError):
        verify(IdentityId.QT_LIMIT, {"t": 3, "T": 10})
    with pytest.raises(UsageError):
        verify(IdentityId.QT_LIMIT, {"T": 10})   # t has no default


def test_partial_sum_window_guard():
    # beyond T = N the partial sum genuinely differs from the limit, so
    # wider windows are rejected up front rather than reported failed
    with pytest.raises(UsageError):
        verify(IdentityId.T0_LIMIT, {"N": 10, "T": 11})
    rep = verify(IdentityId.T0_LIMIT, {"N": 10, "T": 10})
    assert rep.status == "verified"


def test_termwise_recurrence_cell_selection():
    rep = verify(IdentityId.REC_SUMMAND, {"N": 6, "m": 1, "n1": 1, "n2": 1})
    assert rep.status == "verified"
    with pytest.raises(UsageError):
        verify(IdentityId.REC_SUMMAND, {"N": 6, "m": 1})
    with pytest.raises(UsageError):
        verify(IdentityId.REC_SUMMAND, {"N": 3})


def test_warnaar_single_a_selection():
    rep = verify(IdentityId.WARNAAR, {"L": 5, "a": -2})
    assert rep.status == "verified"


def test_report_invariant_is_enforced():
    with pytest.raises(ValueError):
        VerificationReport("schur-poly", {}, "failed", None)
    with pytest.raises(ValueError):
        VerificationReport("schur-poly", {}, "verified", {"lhs": "0"})


def test_fault_injection_pinpoints_the_exponent():
    rep = verify(IdentityId.SCHUR_POLY, {
        "N": 3, "_perturb": {"delta": 2, "exponent_half_steps": 7}})
    fd = rep.first_discrepancy
    assert fd["exponent_half_steps"] == 7
    assert int(fd["lhs"]) - int(fd["rhs"]) == 2
