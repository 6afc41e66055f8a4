"""The two computable 3-fold configurations: 2-plane cones and Cutkosky flags.

For a flag of smooth subvarieties Z in S in X (S a hypersurface numerically
equal to the polarization, Z a curve on S) with Nef(S) = Psef(S) and
``omega|_S - Z`` not nef, the ambient 3-fold never needs to be represented:
everything is decided by the restricted lattice N1(S), the classes
``omega|_S`` and ``[Z]``, and the nef threshold

    lambda_S = sup { lam >= 0 : (omega|_S - lam*Z) in Nef(S) } < 1.

On the 2-plane spanned by the nef boundary class and [S], the negative part
is 0 on the nef subcone and ``b*S`` at ``a*theta_nef + b*[S]``.  The Green's
function of ord_Z evaluates against the vanishing orders (w(b_Z), w(b_S)) as

    max { 0, lambda_S * (1 - w(b_Z)), 1 - w(b_S) },

with sup exactly 1.  The ideal containment b_S in b_Z forces
``w(b_Z) <= w(b_S)`` for every valuation, which is validated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (HypothesisViolated, InconsistentVanishing,
                     NegativeCoefficients, NotAmple, NotPseudoeffective)
from .lattice import QUADRIC, DivisorClass, SurfaceLattice
from .scalars import ONE, ZERO, Scalar
from .zariski import _quadric_threshold


class FlagConfiguration:
    """Restricted data of a flag Z in S in X; S-lattice must be QUADRIC."""

    def __init__(self, s_lattice: SurfaceLattice, omega_restr: DivisorClass,
                 z_restr: DivisorClass, s_restr: DivisorClass | None = None,
                 s_label: str = "S", z_label: str = "Z"):
        if s_lattice.cone.mode != QUADRIC:
            raise HypothesisViolated("the flag surface needs Nef(S) = Psef(S), "
                                     "declared via a QUADRIC cone oracle")
        if not s_lattice.is_ample(omega_restr):
            raise NotAmple("omega restricted to S must be ample")
        if z_restr.is_zero() or not s_lattice.is_psef(z_restr):
            raise NotPseudoeffective("the curve class [Z] must be nonzero and psef")
        self.s_lattice = s_lattice
        self.omega_restr = omega_restr
        self.z_restr = z_restr
        # S|_S is numerically omega|_S - [Z] on the blown-up 2-plane
        self.s_restr = s_restr if s_restr is not None else omega_restr - z_restr
        self.s_label = s_label
        self.z_label = z_label
        self.tau_declared = ONE


def lambda_nef_on_S(cfg: FlagConfiguration) -> Scalar:
    """Exit of ``omega|_S - lam*Z`` from Nef(S); must land strictly below 1."""
    lam = _quadric_threshold(cfg.s_lattice, cfg.omega_restr, cfg.z_restr)
    if lam >= ONE:
        raise HypothesisViolated(
            f"lambda_S = {lam} >= 1: omega|_S - Z is nef, so the flag "
            "hypotheses fail")
    if lam.sign() <= 0:
        raise HypothesisViolated("omega|_S - lam*Z leaves Nef(S) immediately")
    return lam


@dataclass(frozen=True)
class FlagDecomposition:
    """Zariski data of a*theta_nef + b*[S] on the 2-plane cone."""

    a: Scalar
    b: Scalar
    support: tuple[tuple[str, Scalar], ...]

    def negative_coefficient(self) -> Scalar:
        return self.support[0][1] if self.support else ZERO


def flag_zariski(cfg: FlagConfiguration, a, b) -> FlagDecomposition:
    """N = b*S on the upper subcone, 0 on the nef subcone."""
    a, b = Scalar.of(a), Scalar.of(b)
    if a.sign() < 0 or b.sign() < 0:
        raise NegativeCoefficients("the 2-plane cone needs a, b >= 0")
    support = ((cfg.s_label, b),) if b.sign() > 0 else ()
    return FlagDecomposition(a, b, support)


@dataclass(frozen=True)
class FlagGreenFunction:
    lambda_S_nef: Scalar

    def __post_init__(self):
        lam = Scalar.of(self.lambda_S_nef)
        if not (ZERO < lam < ONE):
            raise HypothesisViolated("lambda_S must lie strictly between 0 and 1")
        object.__setattr__(self, "lambda_S_nef", lam)

    def tau(self) -> Scalar:
        return ONE

    def is_rational_PL(self) -> bool:
        return self.lambda_S_nef.is_rational()


def flag_green(cfg: FlagConfiguration) -> FlagGreenFunction:
    return FlagGreenFunction(lambda_nef_on_S(cfg))


def evaluate_flag(g: FlagGreenFunction, vbZ, vbS) -> Scalar:
    """Value at a valuation with w(b_Z) = vbZ, w(b_S) = vbS.

    Since b_S is contained in b_Z, any honest valuation has vbZ <= vbS.
    """
    vbZ, vbS = Scalar.of(vbZ), Scalar.of(vbS)
    if vbZ.sign() < 0 or vbS.sign() < 0:
        raise InconsistentVanishing("vanishing orders must be nonnegative")
    if vbZ > vbS:
        raise InconsistentVanishing(
            f"w(b_Z) = {vbZ} exceeds w(b_S) = {vbS}, impossible for b_S in b_Z")
    lam = g.lambda_S_nef
    return max(ZERO, lam * (ONE - vbZ), ONE - vbS)
