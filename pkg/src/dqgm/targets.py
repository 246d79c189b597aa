"""Target probability densities for generative training."""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.stats import lognorm

from chebmath.polynomials import ArrayLike


class TargetDistribution(BaseModel):
    """A target density and its parameters.

    ``lognormal`` is the terminal price density of geometric Brownian motion,
    evaluated at ``S_t = x``::

        p(S) = exp(-(ln(S / s0) + (mu - sigma^2/2) t)^2 / (2 sigma^2 t)) / (S sigma sqrt(2 pi t))

    ``linear`` is ``P(x) = x`` on ``[0, 1]``. Both vanish outside their support.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["lognormal", "linear"]
    mu: float = 0.0
    sigma: float = 0.25
    s0: float = 0.5
    t: float = 1.0

    @model_validator(mode="after")
    def _check_lognormal(self):
        if self.kind == "lognormal" and min(self.sigma, self.s0, self.t) <= 0:
            raise ValueError("lognormal target needs sigma > 0, s0 > 0 and t > 0")
        return self

    def _lognormal(self):
        # scipy's scale absorbs s0 and the drift term of the exponent
        return lognorm(
            s=self.sigma * np.sqrt(self.t),
            scale=self.s0 * np.exp(-(self.mu - self.sigma ** 2 / 2) * self.t),
        )


def _as_output(values: np.ndarray) -> ArrayLike:
    return float(values) if np.ndim(values) == 0 else values


def target_density(target: TargetDistribution, x: ArrayLike) -> ArrayLike:
    """Unnormalized target density at ``x``; zero outside the support."""
    x = np.asarray(x, dtype=float)
    if target.kind == "lognormal":
        return _as_output(np.where(x > 0, target._lognormal().pdf(x), 0.0))
    return _as_output(np.where((x >= 0) & (x <= 1), x, 0.0))


def target_density_dx(target: TargetDistribution, x: ArrayLike) -> ArrayLike:
    """``d/dx`` of :func:`target_density`; zero outside the support."""
    x = np.asarray(x, dtype=float)
    if target.kind == "linear":
        return _as_output(np.where((x >= 0) & (x <= 1), 1.0, 0.0))
    dist = target._lognormal()
    s2 = dist.kwds["s"] ** 2
    scale = dist.kwds["scale"]
    safe = np.where(x > 0, x, 1.0)
    slope = -dist.pdf(safe) / safe * (1.0 + np.log(safe / scale) / s2)
    return _as_output(np.where(x > 0, slope, 0.0))
