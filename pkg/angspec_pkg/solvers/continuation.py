import math
import logging
from dataclasses import dataclass

import numpy as np

from ..errors import ContinuationAmbiguity, WindowTooSmall, EnclosureViolation
from ..angular.bounds import exact_spectrum_a0, nu_enclosure
from .base import AngularOperatorSpec, THETA_GRID
from .galerkin import GALERKIN, GalerkinConfig
from .shooting import SHOOTING


logger = logging.getLogger(__name__)

MAX_STEPS = 64
MATCH_TOL = 1e-5

# eighth order central first derivative
FD_STENCIL = np.array([1 / 280, -4 / 105, 1 / 5, -4 / 5, 0.0, 4 / 5, -1 / 5, 4 / 105, -1 / 280])
INTERIOR = (0.1 * math.pi, 0.9 * math.pi)


def _labels_at_zero(k, radius):
    labels = {}
    n = 1
    while abs(exact_spectrum_a0(k, n)) <= radius:
        labels[n] = exact_spectrum_a0(k, n)
        labels[-n] = exact_spectrum_a0(k, -n)
        n += 1
    return labels


def _track(spec, labels, steps, solver):
    """Follows each label through `steps` equal a-steps; None when a step is not certified."""
    p = spec.params
    move = p.delta / steps
    current = dict(labels)
    for j in range(1, steps + 1):
        vals = np.sort(solver.eigenvalues(AngularOperatorSpec(p.scaled(j / steps))))
        gaps = np.diff(vals)
        if gaps.size and gaps.min() <= 2.0 * move:
            return None
        nxt = {}
        for n, lam in current.items():
            near = vals[np.abs(vals - lam) <= move + 1e-9]
            if len(near) != 1:
                return None
            nxt[n] = float(near[0])
        if len(set(nxt.values())) != len(nxt):
            return None
        current = nxt
    return current


def _homotopy_labels(spec, radius):
    p = spec.params
    labels = _labels_at_zero(p.k, radius + p.delta)
    N = max(32, int(math.ceil(4.0 * (radius + 2.0 * p.delta + 2.0))) + 8)
    solver = GALERKIN(GalerkinConfig(N=N))
    steps = 1
    while steps <= MAX_STEPS:
        tracked = _track(spec, labels, steps, solver)
        if tracked is not None:
            logger.debug("homotopy certified with J=%d steps, N=%d", steps, N)
            return tracked
        steps *= 2
    raise ContinuationAmbiguity(f"homotopy not certified with {MAX_STEPS} steps at {p}")


def enumerate_indices(spec, raw):
    """Assigns continuation indices n to a raw spectrum."""
    p = spec.params
    if not raw.entries:
        return raw
    radius = max(abs(lam) for lam in raw.lambdas)
    if p.delta == 0.0:
        final = _labels_at_zero(p.k, radius + 1.0)
    else:
        final = _homotopy_labels(spec, radius)
    labels = np.array(list(final.keys()))
    values = np.array(list(final.values()))
    entries = []
    for entry in raw.entries:
        i = int(np.argmin(np.abs(values - entry.lam)))
        if abs(values[i] - entry.lam) > MATCH_TOL * (1.0 + abs(entry.lam)):
            raise ContinuationAmbiguity(f"eigenvalue {entry.lam} has no continuation partner (nearest {values[i]})")
        entry.index = int(labels[i])
        entries.append(entry)
    entries.sort(key=lambda e: e.lam)
    indices = [e.index for e in entries]
    if any(b <= a for a, b in zip(indices, indices[1:])) or len(set(indices)) != len(indices):
        raise ContinuationAmbiguity(f"continuation indices out of order: {indices}")
    spectrum = raw.with_entries(entries)
    am = abs(p.am)
    if spectrum.covers(-am - 1.0, am + 1.0):
        spectrum.m_minus, spectrum.m_plus, spectrum.interval_count = m_pm_count(spec, spectrum)
    return spectrum


def m_pm_count(spec, spectrum):
    am = abs(spec.params.am)
    if not spectrum.covers(-am - 1.0, am + 1.0):
        raise WindowTooSmall(f"window {spectrum.window} does not cover [{-am - 1.0}, {am + 1.0}]")
    entries = sorted(spectrum.entries, key=lambda e: e.lam)
    above = [e for e in entries if e.lam > am]
    below = [e for e in entries if e.lam < -am]
    if not above or not below:
        raise WindowTooSmall("no eigenvalue on one side of [-|am|, |am|]")
    # lambda_(m+) <= |am| < lambda_(m+ + 1), index 0 stands for no eigenvalue
    m_plus = above[0].index - 1
    m_minus = below[-1].index + 1
    inside = sum(1 for e in entries if -am <= e.lam <= am)
    expected = m_plus - m_minus if m_minus <= 0 <= m_plus else m_plus - m_minus + 1
    if inside != expected:
        raise ContinuationAmbiguity(f"interval count {inside} inconsistent with m- = {m_minus}, m+ = {m_plus}")
    return m_minus, m_plus, inside


def nu_numeric(p, n_max):
    """Eigenvalues nu_n of B B* from the massless operator, checked against the Sturm enclosure."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    top = math.sqrt(nu_enclosure(p, n_max)[1])
    N = max(32, int(math.ceil(4.0 * (top + 2.0))) + 16)
    vals = GALERKIN(GalerkinConfig(N=N)).eigenvalues(AngularOperatorSpec(p.massless()))
    positive = np.sort(vals[vals > 0.0])[:n_max]
    if len(positive) < n_max:
        raise WindowTooSmall(f"only {len(positive)} positive eigenvalues resolved, need {n_max}")
    nus = [float(v) ** 2 for v in positive]
    for n, nu in enumerate(nus, start=1):
        lo, hi = nu_enclosure(p, n)
        tol = 1e-9 * (1.0 + nu)
        if not lo - tol <= nu <= hi + tol:
            raise EnclosureViolation(f"nu_{n} = {nu} outside [{lo}, {hi}]")
    return nus


@dataclass(frozen=True)
class Diagnostics:
    residual: float
    symmetry_defect: float


def _derivative(samples, h):
    out = np.full_like(samples, np.nan)
    half = len(FD_STENCIL) // 2
    body = np.zeros_like(samples[half:-half])
    for i, c in enumerate(FD_STENCIL):
        shift = i - half
        body += c * samples[half + shift:len(samples) - half + shift]
    out[half:-half] = body / h
    return out


def diagnostics(spec, entry, lam=None):
    """Relative residual of (A - lambda) u on the interior grid and the |f(t)| = |g(pi - t)| defect."""
    u = entry.samples
    lam = entry.lam if lam is None else lam
    h = THETA_GRID[1] - THETA_GRID[0]
    du = _derivative(u, h)
    mask = (THETA_GRID >= INTERIOR[0]) & (THETA_GRID <= INTERIOR[1]) & np.all(np.isfinite(du), axis=1)
    res = spec.apply(THETA_GRID[mask], u[mask], du[mask], lam)
    scale = np.abs(u).max()
    residual = float(np.abs(res).max() / scale)
    symmetry = float(np.abs(np.abs(u[:, 0]) - np.abs(u[::-1, 1])).max())
    return Diagnostics(residual=residual, symmetry_defect=symmetry)


def annotate(spec, spectrum):
    for entry in spectrum.entries:
        if entry.samples is not None:
            diag = diagnostics(spec, entry)
            entry.residual, entry.symmetry_defect = diag.residual, diag.symmetry_defect
    return spectrum


def index_window(p, n_values, margin=0.5):
    """Scan window holding lambda_n for every n in n_values and [-|am| - 1, |am| + 1]."""
    centres = [exact_spectrum_a0(p.k, n) for n in n_values]
    am = abs(p.am)
    lo = min(min(centres) - p.delta, -am - 1.0) - margin
    hi = max(max(centres) + p.delta, am + 1.0) + margin
    return lo, hi


def compute_spectrum(p, n_values, method="shooting", shooting_cfg=None, basis_size=None):
    """Enumerated, diagnosed spectrum of the angular operator covering the requested indices."""
    spec = AngularOperatorSpec(p)
    window = index_window(p, n_values)
    if method == "shooting":
        raw = SHOOTING(shooting_cfg).solve(spec, window)
    elif method == "galerkin":
        radius = max(abs(window[0]), abs(window[1]))
        N = basis_size or max(32, int(math.ceil(4.0 * (radius + 2.0))))
        raw = GALERKIN(GalerkinConfig(N=N)).solve(spec, window)
    else:
        raise NotImplementedError(f"method {method!r} not implemented")
    spectrum = annotate(spec, enumerate_indices(spec, raw))
    logger.info("%s spectrum at k=%d: %d eigenvalues in [%.3f, %.3f]", method, p.k,
                len(spectrum.entries), *window)
    return spectrum
