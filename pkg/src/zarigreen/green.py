"""Green's functions of finite sets of real divisorial valuations.

For a valuation set Sigma = {t_a * ord_{E_a}} with Rees divisor
``D = sum 1/t_a * E_a``, the Green's function is assembled from the
parametric negative parts along the ray ``omega - lam*D``: at each
breakpoint ``lam_i`` the antieffective divisor
``B_i = -(N(omega - lam_i D) + lam_i D)`` contributes the affine piece
``psi_{B_i} + lam_i``, and the function is the maximum of these pieces.
Evaluation at ``v = t*ord_E`` reads off ``t * mult_E(B_i) + lam_i``,
where the multiplicity is taken in the formal divisor supported on the
declared labels (not in basis coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (ClassificationUnavailable, InvalidValuation, NotAmple,
                     UnknownDivisor)
from .lattice import DivisorClass, SurfaceLattice
from .scalars import ONE, ZERO, Scalar
from .zariski import PLFamily, pl_family, zariski_decompose


@dataclass(frozen=True)
class RealDivisorialValuation:
    """v = scale * ord_divisor with a strictly positive real scale."""

    divisor: str
    scale: Scalar = ONE

    def __post_init__(self):
        object.__setattr__(self, "scale", Scalar.of(self.scale))
        if self.scale.sign() <= 0:
            raise InvalidValuation(f"scale of ord_{self.divisor} must be positive")


class SigmaSet:
    """A nonempty finite set of valuations on pairwise distinct divisors."""

    def __init__(self, valuations):
        vals = tuple(valuations)
        if not vals:
            raise InvalidValuation("empty valuation set")
        labels = [v.divisor for v in vals]
        if len(set(labels)) != len(labels):
            raise InvalidValuation("duplicate divisors in the valuation set")
        self.valuations = vals

    def __iter__(self):
        return iter(self.valuations)

    def __len__(self):
        return len(self.valuations)

    def divisor_formal(self) -> dict[str, Scalar]:
        """The Rees divisor D = sum 1/t_a * E_a as label multiplicities.

        Each member valuation evaluates D to exactly 1.
        """
        return {v.divisor: ONE / v.scale for v in self.valuations}

    def divisor_class(self, lat: SurfaceLattice) -> DivisorClass:
        total = lat.zero_class()
        for lab, c in self.divisor_formal().items():
            total = total + c * lat.class_of(lab)
        return total


class GreenFunction:
    """max_i { psi_{B_i} + lam_i } over the family breakpoints."""

    def __init__(self, lattice: SurfaceLattice, omega: DivisorClass,
                 sigma: SigmaSet, family: PLFamily,
                 breakpoints, b_divisors):
        self.lattice = lattice
        self.omega = omega
        self.sigma = sigma
        self.family = family
        self.breakpoints = tuple(breakpoints)
        self.b_divisors = tuple(dict(b) for b in b_divisors)

    def b_formal(self, i: int) -> dict[str, Scalar]:
        return dict(self.b_divisors[i])

    def b_class(self, i: int) -> DivisorClass:
        total = self.lattice.zero_class()
        for lab, c in self.b_divisors[i].items():
            total = total + c * self.lattice.class_of(lab)
        return total

    def evaluate(self, v: RealDivisorialValuation) -> Scalar:
        self.lattice.class_of(v.divisor)  # raises UnknownDivisor
        best = None
        for lam, b in zip(self.breakpoints, self.b_divisors):
            piece = v.scale * b.get(v.divisor, ZERO) + lam
            if best is None or piece > best:
                best = piece
        return best

    def tau(self) -> Scalar:
        """sup of the Green's function; equals the psef threshold."""
        return self.breakpoints[-1]

    def is_rational_PL(self) -> bool:
        """Decide Q-PL versus strictly R-PL via rationality of tau.

        Only meaningful when the polarization and all scales are rational;
        otherwise the dichotomy does not apply and this raises.
        """
        if not self.omega.is_rational():
            raise ClassificationUnavailable("polarization has irrational coefficients")
        for v in self.sigma:
            if not v.scale.is_rational():
                raise ClassificationUnavailable(
                    f"valuation on {v.divisor} has an irrational scale")
        return self.tau().is_rational()

    def center_divisorial(self) -> tuple[str, ...]:
        """Divisor labels of the center: Supp N at the threshold plus Sigma."""
        d_class = self.sigma.divisor_class(self.lattice)
        zd = zariski_decompose(self.lattice, self.omega - self.tau() * d_class)
        wanted = {lab for lab, _ in zd.support}
        wanted.update(v.divisor for v in self.sigma)
        return tuple(lab for lab in self.lattice.labels() if lab in wanted)


def green_from_sigma(lat: SurfaceLattice, omega: DivisorClass,
                     sigma: SigmaSet) -> GreenFunction:
    """Assemble the Green's function of Sigma for an ample class omega."""
    if not lat.is_ample(omega):
        raise NotAmple("the Green's function needs an ample polarization")
    for v in sigma:
        if v.divisor not in lat.labels():
            raise UnknownDivisor(f"no divisor labelled {v.divisor!r}")
    d_formal = sigma.divisor_formal()
    d_class = sigma.divisor_class(lat)
    family = pl_family(lat, omega, d_class)
    breakpoints = family.breakpoints
    b_divisors = []
    for lam in breakpoints:
        b = {lab: -c for lab, c in family.negative_at(lam).items()}
        for lab, c in d_formal.items():
            val = b.get(lab, ZERO) - lam * c
            b[lab] = val
        b_divisors.append({lab: c for lab, c in b.items() if not c.is_zero()})
    return GreenFunction(lat, omega, sigma, family, breakpoints, b_divisors)
