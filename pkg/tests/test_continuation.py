import numpy as np
import pytest

from angspec_pkg.angular import AngularParams, best_enclosure, exact_spectrum_a0, lambda_q, nu_enclosure
from angspec_pkg.errors import WindowTooSmall
from angspec_pkg.solvers import (AngularOperatorSpec, Spectrum, SpectrumEntry, compute_spectrum, diagnostics,
                                 enumerate_indices, index_window, m_pm_count, nu_numeric, shooting_spectrum,
                                 ShootingConfig)


def P(am, aomega, k):
    return AngularParams.from_products(am, aomega, k)


def test_index_window_covers_interval():
    lo, hi = index_window(P(0.25, 0.75, 0), [-2, 2])
    assert lo < -3.0 and hi > 3.0
    assert lo <= -1.25 and hi >= 1.25


def test_unperturbed_labels_identity():
    p = P(0.0, 0.0, 1)
    spec = AngularOperatorSpec(p)
    raw = shooting_spectrum(spec, ShootingConfig(), (-4.5, 4.5))
    spectrum = enumerate_indices(spec, raw)
    assert spectrum.indices() == [-3, -2, -1, 1, 2, 3]
    assert spectrum.by_index(1).lam == pytest.approx(2.0, abs=1e-8)
    assert (spectrum.m_minus, spectrum.m_plus, spectrum.interval_count) == (0, 0, 0)


def test_m_pm_window_too_small():
    p = P(0.25, 0.75, 0)
    spectrum = Spectrum(params=p, window=(0.5, 2.0), entries=[SpectrumEntry(lam=1.4, index=1)])
    with pytest.raises(WindowTooSmall):
        m_pm_count(AngularOperatorSpec(p), spectrum)


def test_m_pm_case_split():
    p = P(1.5, 0.0, 0)
    entries = [SpectrumEntry(lam=-2.0, index=-2), SpectrumEntry(lam=-1.0, index=-1),
               SpectrumEntry(lam=0.4, index=1), SpectrumEntry(lam=2.2, index=2)]
    spectrum = Spectrum(params=p, window=(-4.0, 4.0), entries=entries)
    # lambda_-1 and lambda_1 inside [-1.5, 1.5]
    assert m_pm_count(AngularOperatorSpec(p), spectrum) == (-1, 1, 2)


@pytest.mark.slow
def test_small_parameters_m_plus():
    spectrum = compute_spectrum(P(0.005, 0.015, 0), [-2, -1, 1, 2])
    assert spectrum.m_plus == 0
    assert spectrum.interval_count == 0
    assert spectrum.by_index(1).lam == pytest.approx(1.00836, abs=5e-3)
    assert spectrum.by_index(-1).lam == pytest.approx(-1.01167, abs=5e-3)


@pytest.mark.slow
def test_k_minus_one_labels():
    p = P(0.25, 0.75, -1)
    spectrum = compute_spectrum(p, [-2, -1, 1, 2])
    lam1, lam_m1 = spectrum.by_index(1).lam, spectrum.by_index(-1).lam
    assert lam1 == pytest.approx(0.67315, abs=2e-2)
    assert lam_m1 == pytest.approx(-0.44058, abs=2e-2)
    assert spectrum.interval_count == 0
    assert best_enclosure_contains(p, lam1)


def best_enclosure_contains(p, lam):
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return best_enclosure(p, 1).contains(lam)


@pytest.mark.slow
@pytest.mark.parametrize("k", [-2, 0, 1])
def test_spectrum_respects_analytic_bounds(k):
    p = P(0.25, 0.75, k)
    spectrum = compute_spectrum(p, [-2, -1, 1, 2])
    lq = lambda_q(p)
    for entry in spectrum.entries:
        if lq.defined:
            assert abs(entry.lam) >= lq.value - 1e-9
    assert spectrum.m_plus == 0
    for n in (1, 2):
        assert best_enclosure(p, n).contains(spectrum.by_index(n).lam)


@pytest.mark.slow
def test_reflection_preserves_spectrum():
    p = P(0.25, 0.75, 1)
    a = compute_spectrum(p, [-2, -1, 1, 2])
    b = compute_spectrum(p.reflect(), [-2, -1, 1, 2])
    for n in (-2, -1, 1, 2):
        assert b.by_index(n).lam == pytest.approx(a.by_index(n).lam, abs=1e-8)


@pytest.mark.slow
def test_galerkin_and_shooting_agree():
    p = P(0.25, 0.75, 0)
    shoot = compute_spectrum(p, [-2, -1, 1, 2], "shooting")
    galerkin = compute_spectrum(p, [-2, -1, 1, 2], "galerkin")
    for n in (-2, -1, 1, 2):
        assert galerkin.by_index(n).lam == pytest.approx(shoot.by_index(n).lam, abs=1e-6)


def test_compute_spectrum_method():
    with pytest.raises(NotImplementedError):
        compute_spectrum(P(0.0, 0.0, 0), [1], method="sfc")


def test_nu_numeric_unperturbed():
    assert nu_numeric(P(0.0, 0.0, 1), 3) == pytest.approx([4.0, 9.0, 16.0], abs=1e-8)


def test_nu_numeric_enclosed_and_increasing():
    nus = nu_numeric(P(0.25, 0.75, -5), 3)
    assert 17.5 <= nus[0] <= 19.0625
    assert np.all(np.diff(nus) > 0.0)


def test_diagnostics_exact_case():
    p = P(0.0, 0.0, 0)
    spec = AngularOperatorSpec(p)
    entry = shooting_spectrum(spec, ShootingConfig(), (0.5, 1.5)).entries[0]
    diag = diagnostics(spec, entry)
    assert diag.residual < 1e-7
    assert diag.symmetry_defect < 1e-8
    assert diagnostics(spec, entry, lam=entry.lam + 1e-3).residual > 1e-4


def test_diagnostics_perturbed():
    p = P(0.25, 0.75, 0)
    spec = AngularOperatorSpec(p)
    entry = shooting_spectrum(spec, ShootingConfig(), (0.75, 1.86)).entries[0]
    diag = diagnostics(spec, entry)
    assert diag.residual < 1e-6
    assert diag.symmetry_defect < 1e-6


def test_nu_numeric_small_rotation():
    p = P(0.005, 0.015, 0)
    nus = nu_numeric(p, 4)
    for n, nu in enumerate(nus, start=1):
        lo, hi = nu_enclosure(p, n)
        assert (lo, hi) == pytest.approx((n * n, n * n + 0.03))
        assert lo <= nu <= hi
    assert np.all(np.diff(nus) > 0.0)


@pytest.mark.slow
@pytest.mark.parametrize("k", range(-3, 3))
def test_unperturbed_spectrum_indexed(k):
    n_values = [n for n in range(-5, 6) if n]
    spectrum = compute_spectrum(P(0.0, 0.0, k), n_values)
    for n in n_values:
        assert spectrum.by_index(n).lam == pytest.approx(exact_spectrum_a0(k, n), abs=1e-7)
