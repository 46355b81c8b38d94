import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..errors import RadicandNegativeUpper, EmptyIntersection
from ..num_utils.misc_utils import re_sqrt


def omega_pm(p):
    kappa, aw = p.kappa, p.aomega
    lower = 2.0 * kappa * aw - abs(aw)
    if abs(2.0 * aw) > 1.0:
        upper = aw * aw + 0.25 + 2.0 * kappa * aw
    else:
        upper = 2.0 * kappa * aw + abs(aw)
    return lower, upper


def _base(p, index):
    return (abs(p.kappa) - 0.5 + index) ** 2


def nu_enclosure(p, n):
    """Sturm comparison interval for the n-th eigenvalue of B B*."""
    if n < 1:
        raise ValueError(f"nu index must be positive, got {n}")
    om_lo, om_hi = omega_pm(p)
    base = _base(p, n)
    return max(0.0, base + om_lo), base + om_hi


def _upper_sqrt(radicand):
    if radicand < 0.0:
        raise RadicandNegativeUpper(f"upper bound radicand {radicand!r} < 0")
    return math.sqrt(radicand)


def _lower_radicand(p, index):
    return _base(p, index) + omega_pm(p)[0]


def variational_bounds(p, n, n0=0):
    if n < 1 or n0 < 0:
        raise ValueError(f"need n >= 1 and n0 >= 0, got n={n}, n0={n0}")
    om_lo, om_hi = omega_pm(p)
    base = _base(p, n0 + n)
    am = abs(p.am)
    check = max(am, re_sqrt(base + om_lo) - am)
    hat = _upper_sqrt(base + om_hi) + am
    return check, hat


def spt_bounds(p, n):
    if n < 1:
        raise ValueError(f"SPT index must be positive, got {n}")
    om_lo, om_hi = omega_pm(p)
    base = _base(p, n)
    am = abs(p.am)
    return re_sqrt(base + om_lo) - am, _upper_sqrt(base + om_hi) + am


def exact_spectrum_a0(k, n):
    if n == 0:
        raise ValueError("eigenvalue indices are nonzero")
    return math.copysign(abs(k + 0.5) - 0.5 + abs(n), n)


def a_perturbation_bounds(p, n):
    centre = exact_spectrum_a0(p.k, n)
    return centre - p.delta, centre + p.delta


@dataclass(frozen=True)
class LambdaQ:
    value: Optional[float] = None

    @property
    def defined(self):
        return self.value is not None

    def __str__(self):
        return f"{self.value:.5f}" if self.defined else "undefined"


def lambda_q(p):
    kappa, aw = p.kappa, p.aomega
    if -abs(kappa) <= aw <= abs(kappa):
        return LambdaQ(abs(aw + kappa))
    if math.copysign(1.0, kappa) * aw >= abs(kappa):
        return LambdaQ(2.0 * math.sqrt(aw * kappa))
    return LambdaQ(None)


@dataclass(frozen=True)
class BoundSet:
    """All analytic enclosures of the eigenvalue with continuation index m_plus + n."""
    k: int
    am: float
    aomega: float
    n: int
    n0: int
    nu_lower: float
    nu_upper: float
    lambda_check: float
    lambda_hat: float
    spt_lower: float
    spt_upper: float
    apert_lower: float
    apert_upper: float
    lam_q: LambdaQ
    combined: Tuple[float, float]
    active_lo: str
    active_hi: str
    clamped: bool = False
    refined: Optional["RefinedEndpoint"] = field(default=None, compare=False)
    m_plus: Optional[int] = 0

    def contains(self, lam, tol=1e-9):
        lo, hi = self.combined
        return lo - tol <= lam <= hi + tol

    def to_row(self):
        return {
            "k": self.k, "am": self.am, "aomega": self.aomega, "n": self.n, "n0": self.n0,
            "nu_lo": self.nu_lower, "nu_hi": self.nu_upper,
            "lam_check": self.lambda_check, "lam_hat": self.lambda_hat,
            "spt_lo": self.spt_lower, "spt_hi": self.spt_upper,
            "apert_lo": self.apert_lower, "apert_hi": self.apert_upper,
            "lamQ": self.lam_q.value if self.lam_q.defined else float("nan"),
            "comb_lo": self.combined[0], "comb_hi": self.combined[1],
            "active_lo": self.active_lo, "active_hi": self.active_hi,
        }


def best_enclosure(p, n, n0=0, refined=None, m_plus=0):
    """Intersects every analytic enclosure of the eigenvalue lambda_{m+ + n}.

    The variational pair uses index n0 + n; the SPT and a-perturbation
    intervals use the continuation index m_plus + n and are left out when
    m_plus is None. The a-perturbation interval only enters when the
    Re(sqrt) clamp of the variational lower bound is active; `refined` is an
    optional RefinedEndpoint for lambda_1.
    """
    index = n0 + n
    nu_lo, nu_hi = nu_enclosure(p, index)
    check, hat = variational_bounds(p, n, n0)
    lq = lambda_q(p)
    clamped = _lower_radicand(p, index) < 0.0
    if clamped:
        warnings.warn(f"lower radicand clamped at k={p.k}, index={index}", stacklevel=2)

    lowers = [("variational", check)]
    uppers = [("variational", hat)]
    spt_lo = spt_hi = ap_lo = ap_hi = math.nan
    if m_plus is not None:
        spt_lo, spt_hi = spt_bounds(p, m_plus + n)
        ap_lo, ap_hi = a_perturbation_bounds(p, m_plus + n)
        lowers.append(("spt", spt_lo))
        uppers.append(("spt", spt_hi))
    if lq.defined:
        lowers.append(("lambda_q", lq.value))
    if clamped and m_plus is not None:
        lowers.append(("a_perturbation", ap_lo))
        uppers.append(("a_perturbation", ap_hi))
    if refined is not None and refined.index == index and refined.lower is not None:
        lowers.append(("refined", refined.lower))

    # first listed wins ties
    active_lo, lo = max(lowers, key=lambda item: item[1])
    active_hi, hi = min(uppers, key=lambda item: item[1])
    if lo > hi + 1e-12:
        raise EmptyIntersection(f"k={p.k}, n={n}, n0={n0}: lower {lo} ({active_lo}) > upper {hi} ({active_hi})")
    return BoundSet(k=p.k, am=p.am, aomega=p.aomega, n=n, n0=n0, nu_lower=nu_lo, nu_upper=nu_hi,
                    lambda_check=check, lambda_hat=hat, spt_lower=spt_lo, spt_upper=spt_hi,
                    apert_lower=ap_lo, apert_upper=ap_hi, lam_q=lq, combined=(lo, hi),
                    active_lo=active_lo, active_hi=active_hi, clamped=clamped, refined=refined,
                    m_plus=m_plus)
