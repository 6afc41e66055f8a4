"""Closed-form Green's functions on curves.

In dimension one the Green's function of ``{t_i * ord_{p_i}}`` for a
polarization of degree ``deg`` is

    A * max { 1 - sum_i (1/t_i) * (vanishing at p_i), 0 },

where ``A > 0`` is fixed by ``A * sum_i 1/t_i = deg``.  Points are opaque
labels; when one label carries several scales, only the smallest scale
matters and the others are dropped at construction.
"""

from __future__ import annotations

from .errors import InvalidValuation
from .scalars import ONE, ZERO, Scalar


class CurveSigma:
    """Degree of the polarization plus scaled point valuations."""

    def __init__(self, degree, points):
        self.degree = Scalar.of(degree)
        if self.degree.sign() <= 0:
            raise InvalidValuation("polarization degree must be positive")
        reduced: dict[str, Scalar] = {}
        for label, t in points:
            t = Scalar.of(t)
            if t.sign() <= 0:
                raise InvalidValuation(f"scale at {label} must be positive")
            if label not in reduced or t < reduced[label]:
                reduced[label] = t  # dominated duplicates never contribute
        if not reduced:
            raise InvalidValuation("at least one point is required")
        self.points = tuple(reduced.items())
        self.inverse_sum = sum((ONE / t for _, t in self.points), ZERO)
        self.normalization = self.degree / self.inverse_sum

    def scale_of(self, label: str) -> Scalar | None:
        return dict(self.points).get(label)


class CurveGreenFunction:
    def __init__(self, sigma: CurveSigma):
        self.sigma = sigma

    def tau(self) -> Scalar:
        return self.sigma.normalization

    def is_rational_PL(self) -> bool:
        return (self.sigma.degree.is_rational()
                and all(t.is_rational() for _, t in self.sigma.points))

    def evaluate(self, label: str, t) -> Scalar:
        t = Scalar.of(t)
        if t.sign() < 0:
            raise InvalidValuation("evaluation scale must be nonnegative")
        A = self.sigma.normalization
        tj = self.sigma.scale_of(label)
        if tj is None:
            return A  # fresh point: every log term vanishes
        return A * max(ONE - t / tj, ZERO)


def green_curve(sigma: CurveSigma) -> CurveGreenFunction:
    return CurveGreenFunction(sigma)


def evaluate_curve(sigma: CurveSigma, label: str, t) -> Scalar:
    return CurveGreenFunction(sigma).evaluate(label, t)
