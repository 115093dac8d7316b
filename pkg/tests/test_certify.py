import random
from fractions import Fraction

import pytest

from apcount import (
    ApplicabilityError,
    CertificateCase,
    CertificateMismatchError,
    build_pn,
    certificate_for,
    evaluate_signs,
    lower,
    lower_bound,
    parity_check,
    spectral_report,
    verify_certificate,
)

_F = Fraction


def test_case_selection_and_constants():
    assert certificate_for(5).name == "odd-coprime3"
    assert certificate_for(5).bound_coefficient == _F(3, 2)
    assert certificate_for(8).name == "even-coprime3"
    assert certificate_for(8).bound_coefficient == 3
    assert certificate_for(9).name == "odd-multiple3"
    assert certificate_for(9).bound_coefficient == _F(7, 2)
    assert certificate_for(24).name == "even-multiple3"
    assert certificate_for(24).bound_coefficient == 5
    with pytest.raises(ValueError):
        certificate_for(2)


def test_case_invariants_enforced():
    with pytest.raises(ValueError, match="nonnegative"):
        CertificateCase("bad", True, False, (_F(-1), 0, 0, 0, 0))
    with pytest.raises(ValueError, match="even-only"):
        CertificateCase("bad", True, False, (_F(1), 0, _F(1, 2), 0, 0))
    with pytest.raises(ValueError, match="third-period"):
        CertificateCase("bad", False, False, (_F(1), 0, 0, 0, _F(1)))


def test_verification_examples():
    record = verify_certificate(5, certificate_for(5))
    assert record.bound == _F(-15, 2)
    assert record.combination == record.objective
    record = verify_certificate(24, certificate_for(24))
    assert record.bound == -120


def test_verification_full_small_range():
    for n in range(3, 121):
        record = verify_certificate(n, certificate_for(n))
        assert record.combination == build_pn(n)


def test_perturbed_certificate_mismatch_offset():
    base = certificate_for(5)
    mults = list(base.multipliers)
    mults[1] = _F(2)  # sum_square multiplier 3/2 -> 2
    bad = CertificateCase(base.name, base.odd, base.multiple_of_3, tuple(mults))
    with pytest.raises(CertificateMismatchError) as excinfo:
        verify_certificate(5, bad)
    assert excinfo.value.offset == 1
    assert excinfo.value.expected == 0
    assert excinfo.value.actual == _F(1, 2)


def test_inapplicable_certificate_rejected():
    with pytest.raises(ApplicabilityError):
        verify_certificate(6, certificate_for(5))
    with pytest.raises(ApplicabilityError):
        verify_certificate(5, certificate_for(9))


def test_lower_bound_examples():
    assert lower_bound(7).sharpened_bound == 3
    assert lower_bound(10).sharpened_bound == 4
    assert lower_bound(18).sharpened_bound == 11
    assert lower_bound(4).sharpened_bound == 0

    report = lower_bound(10)
    assert report.raw_bound == _F(5, 2)
    assert report.sharpening_steps == ("ceil-to-integer", "round-up-to-even")
    report = lower_bound(4)
    assert report.raw_bound == -2
    assert report.sharpening_steps == ("clamp-at-zero",)
    report = lower_bound(8)
    assert report.raw_bound == 0
    assert report.sharpening_steps == ()


def test_lower_bound_report_invariants():
    for n in range(3, 121):
        report = lower_bound(n)
        assert report.sharpened_bound >= report.raw_bound
        assert report.sharpened_bound >= 0
        if "round-up-to-even" in report.sharpening_steps:
            assert n % 4 == 2
            assert report.sharpened_bound % 2 == 0


def test_lower_bound_matches_table():
    for n in range(3, 201):
        assert lower_bound(n).sharpened_bound == lower(n), n


def test_aggressive_parity_opt_in():
    # default reproduces the table value at n=18; the aggressive rule
    # (valid whenever n = 2 mod 4) rounds 11 up to 12
    assert lower_bound(18).sharpened_bound == 11
    assert lower_bound(18, aggressive_parity=True).sharpened_bound == 12
    # where the parity rule already fires by default, the flag changes nothing
    assert lower_bound(10, aggressive_parity=True).sharpened_bound == 4


def test_objective_bounded_below_on_sign_vectors():
    rng = random.Random(47)
    trials = 0
    for n in range(3, 17):
        cert = certificate_for(n)
        form = build_pn(n)
        floor = -cert.bound_coefficient * n
        for _ in range(720):
            trials += 1
            assert evaluate_signs(form, rng.getrandbits(n)) >= floor
    assert trials >= 10_000


def test_parity_check_exhaustive():
    report = parity_check(6)
    assert report.mode == "exhaustive"
    assert report.colorings_checked == 32
    assert report.all_even
    report = parity_check(14)
    assert report.colorings_checked == 8192
    assert report.all_even


def test_parity_check_random_mode():
    report = parity_check(18, exhaustive_limit=1024)
    assert report.mode == "random"
    assert report.all_even


def test_parity_check_hypothesis_violation():
    with pytest.raises(ApplicabilityError):
        parity_check(8)
    with pytest.raises(ApplicabilityError):
        parity_check(12)


def test_spectral_reports():
    for n in (5, 8, 9, 24, 37, 384, 512):
        report = spectral_report(n)
        assert report.satisfied
        assert report.min_eigenvalue >= -float(report.bound_coefficient) - 1e-6
    # the generic odd case is spectrally tight
    assert spectral_report(5).gap == pytest.approx(0, abs=1e-6)
