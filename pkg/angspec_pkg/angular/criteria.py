import math
import logging
import warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from .bounds import nu_enclosure, variational_bounds


logger = logging.getLogger(__name__)

JZERO_SCAN = range(2, 13)


class Tristate(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


@dataclass
class ShiftCriteria:
    n0_zero: Tristate = Tristate.UNKNOWN
    n0_equals_mplus: Tristate = Tristate.UNKNOWN
    n0_ge_one: Tristate = Tristate.UNKNOWN
    reasons: List[str] = field(default_factory=list)
    m_plus: Optional[int] = None

    @property
    def certified_n0(self):
        if self.n0_zero is Tristate.YES:
            return 0
        if self.n0_equals_mplus is Tristate.YES and self.m_plus is not None:
            return self.m_plus
        return None


def _gap_index(p, n0):
    for j0 in JZERO_SCAN:
        check_j, _ = variational_bounds(p, j0, n0)
        _, hat_prev = variational_bounds(p, j0 - 1, n0)
        check_next, hat_j = variational_bounds(p, j0 + 1, n0)
        if check_j - hat_prev > 0.0 and check_next - hat_j > 0.0:
            return j0
    return None


def index_shift_criteria(p, spectrum_hint=None):
    """Evaluates every sufficient condition on the index shift n0.

    `spectrum_hint` is an enumerated Spectrum; it enables the tests that need
    actual eigenvalues (lambda_{m+ + 1} and a second eigenvalue mu).
    """
    crit = ShiftCriteria()
    am = abs(p.am)
    root = math.sqrt(nu_enclosure(p, 1)[0])
    check_1, _ = variational_bounds(p, 1, 0)

    if root > 2.0 * am:
        crit.n0_zero = Tristate.YES
        crit.reasons.append(f"sqrt(nu_1 lower) = {root:.6g} > 2|am| = {2 * am:.6g}")
    if check_1 > am:
        crit.n0_zero = Tristate.YES
        crit.reasons.append(f"lambda_check_1 = {check_1:.6g} > |am| = {am:.6g}")

    if am < 0.5:
        crit.n0_equals_mplus = Tristate.YES
        crit.reasons.append(f"|am| = {am:.6g} < 1/2 gives n0 = m+")
    elif crit.n0_zero is Tristate.YES:
        j0 = _gap_index(p, 0)
        if j0 is not None:
            crit.n0_equals_mplus = Tristate.YES
            crit.reasons.append(f"gap conditions hold at j0 = {j0}")

    if crit.n0_zero is Tristate.YES and crit.n0_equals_mplus is Tristate.YES:
        crit.m_plus = 0
        crit.reasons.append("n0 = 0 and n0 = m+ give m+ = 0")

    if spectrum_hint is not None:
        _apply_hint(crit, spectrum_hint, am)

    if crit.n0_zero is Tristate.YES:
        if crit.n0_ge_one is Tristate.YES:
            _conflict(crit, "spectrum hint gives n0 >= 1 against the certified n0 = 0")
        crit.n0_ge_one = Tristate.NO
    elif crit.n0_ge_one is Tristate.YES:
        crit.n0_zero = Tristate.NO
    return crit


def _conflict(crit, message):
    logger.warning("index shift conflict: %s", message)
    crit.reasons.append(f"conflict: {message}")


def _apply_hint(crit, spectrum, am):
    if spectrum.m_plus is not None:
        if crit.m_plus is None:
            crit.m_plus = spectrum.m_plus
        elif crit.m_plus != spectrum.m_plus:
            _conflict(crit, f"spectrum hint has m+ = {spectrum.m_plus}, criteria give m+ = {crit.m_plus}")
    lams = [entry.lam for entry in spectrum.entries]
    above = [lam for lam in lams if lam > am]
    if above:
        first = min(above)
        mus = [mu for mu in lams if 2.0 * am - first < mu < first]
        if mus:
            crit.n0_ge_one = Tristate.YES
            crit.reasons.append(f"mu = {mus[0]:.6g} in ({2 * am - first:.6g}, {first:.6g}) gives n0 >= 1")
        if first <= 3.0 * am:
            crit.reasons.append(f"lambda_(m+ + 1) = {first:.6g} <= 3|am|: an eigenvalue lies in [-|am|, |am|]")
    if crit.n0_equals_mplus is Tristate.YES and crit.m_plus is not None and crit.n0_zero is not Tristate.YES:
        crit.n0_zero = Tristate.YES if crit.m_plus == 0 else Tristate.NO
        if crit.m_plus >= 1:
            crit.n0_ge_one = Tristate.YES


@dataclass(frozen=True)
class RefinedEndpoint:
    """Sharpened bound on lambda_1 (k <= -1) or lambda_-1 (k >= 0)."""
    index: int
    lower: Optional[float]
    upper: Optional[float]
    tag: str = "UNVERIFIED"

    @property
    def interval(self):
        return self.lower, self.upper


def refined_endpoint_bounds(p, enabled=False):
    if not enabled:
        return None
    root = math.sqrt(nu_enclosure(p, 1)[0])
    am = abs(p.am)
    # needs [-|am|, |am|] free of spectrum and ||B^-1||^-1 > |am|
    if not root > 2.0 * am:
        return None
    _, hat = variational_bounds(p, 1, 0)
    warnings.warn("refined endpoint bounds rest on an unverified external lemma", stacklevel=2)
    if p.k <= -1:
        return RefinedEndpoint(index=1, lower=root, upper=hat)
    return RefinedEndpoint(index=-1, lower=-hat, upper=-root)
