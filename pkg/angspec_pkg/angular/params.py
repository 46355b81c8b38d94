import math
import numbers
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class AngularParams:
    """Physical parameters of the angular operator; only am, a*omega and k enter it."""
    a: float
    m: float
    omega: float
    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, numbers.Integral):
            if isinstance(self.k, float) and self.k.is_integer():
                object.__setattr__(self, "k", int(self.k))
            else:
                raise ValueError(f"wave number k must be an integer, got {self.k!r}")
        object.__setattr__(self, "k", int(self.k))
        for name in ("a", "m", "omega"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_products(cls, am, aomega, k):
        return cls(a=1.0, m=float(am), omega=float(aomega), k=k)

    @property
    def am(self):
        return self.a * self.m

    @property
    def aomega(self):
        return self.a * self.omega

    @property
    def kappa(self):
        return self.k + 0.5

    @property
    def delta(self):
        # sup over theta of the norm of the a-dependent coefficient matrix
        return max(abs(self.am), abs(self.aomega))

    def with_k(self, k):
        return replace(self, k=k)

    def scaled(self, t):
        """Same mass and frequency at rotation t*a."""
        return replace(self, a=self.a * t)

    def reflect(self):
        # theta -> pi - theta with component swap
        return replace(self, m=-self.m, omega=-self.omega, k=-self.k - 1)

    def massless(self):
        return replace(self, m=0.0)
