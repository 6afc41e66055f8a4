"""Zariski decompositions, psef thresholds, and parametric negative parts.

The decomposition algorithm is the classical Fujita-Zariski iteration:
starting from the curves met negatively, solve the negative-definite Gram
system for the candidate negative part, enlarge the support while the
positive part still meets a tracked curve negatively, and stop once it is
nef.  Each step is an exact linear solve, and the iteration terminates in
at most one round per tracked curve.

The parametric family ``lam -> N(omega - lam*D)`` is computed by walking
Zariski chambers along the ray.  Inside a chamber the negative part is an
affine function of ``lam``; the walk runs the same Fujita iteration over
first-order jets ``value + slope*mu`` at ``lam+`` (ordered
lexicographically), which handles coinciding wall events uniformly, and
then steps to the nearest wall, where either a support multiplicity
reaches zero or an off-support curve starts meeting the positive part
negatively.  Every breakpoint is cross-checked against a fresh
decomposition; failures raise instead of producing uncertified output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from . import exactlinalg as ela
from .errors import (CertificateError, GramNotNegativeDefinite, NonTermination,
                     NotAmple, NotEffective, NotPseudoeffective, ZeroDirection)
from .lattice import CURVES, QUADRIC, DivisorClass, SurfaceLattice
from .scalars import ONE, ZERO, Scalar, solve_quadratic

if TYPE_CHECKING:  # pragma: no cover
    from .green import RealDivisorialValuation


# -- first-order jets ----------------------------------------------------------

class _Jet:
    """Germ ``val + slo*mu`` as ``mu -> 0+``; signs decided lexicographically."""

    __slots__ = ("val", "slo")

    def __init__(self, val, slo=ZERO):
        self.val = Scalar.of(val)
        self.slo = Scalar.of(slo)

    def sign(self) -> int:
        return self.val.sign() or self.slo.sign()

    def is_zero(self) -> bool:
        return self.val.is_zero() and self.slo.is_zero()

    def _lift(self, other) -> "_Jet":
        if isinstance(other, _Jet):
            return other
        return _Jet(Scalar.of(other))

    def __add__(self, other):
        o = self._lift(other)
        return _Jet(self.val + o.val, self.slo + o.slo)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return _Jet(self.val - o.val, self.slo - o.slo)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return _Jet(-self.val, -self.slo)

    def __mul__(self, other):
        s = Scalar.of(other)  # first-order truncation: only scalar factors occur
        return _Jet(self.val * s, self.slo * s)

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = Scalar.of(other)
        return _Jet(self.val / s, self.slo / s)

    def __repr__(self):
        return f"_Jet({self.val}, {self.slo})"


# -- decompositions --------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Re-verified validity conditions of a decomposition."""

    gram_negative_definite: bool
    orthogonality: bool
    positive_nef: bool
    reassembly: bool

    @property
    def all_ok(self) -> bool:
        return (self.gram_negative_definite and self.orthogonality
                and self.positive_nef and self.reassembly)


@dataclass(frozen=True)
class ZariskiDecomposition:
    input: DivisorClass
    positive: DivisorClass
    negative: DivisorClass
    support: tuple[tuple[str, Scalar], ...]
    certificate: Certificate

    def support_dict(self) -> dict[str, Scalar]:
        return dict(self.support)


def certify(lat: SurfaceLattice, theta: DivisorClass, positive: DivisorClass,
            support) -> Certificate:
    """Recheck a claimed decomposition from scratch (solver-independent)."""
    support = list(support)
    classes = [lat.class_of(lab) for lab, _ in support]
    gram_nd = ela.is_negative_definite(lat.gram_of(classes))
    orth = all(lat.intersect(positive, c).sign() == 0 for c in classes)
    nef = lat.is_nef(positive)
    negative = lat.zero_class()
    for (lab, coeff), cls in zip(support, classes):
        negative = negative + coeff * cls
    reassembly = positive + negative == theta
    return Certificate(gram_nd, orth, nef, reassembly)


def _fujita(lat: SurfaceLattice, pairing: Callable):
    """Run the support iteration for the pairing x -> theta.x.

    ``pairing`` may produce Scalars (decomposition at a point) or jets
    (germ along a ray); both carry exact sign tests.  Returns the solved
    ``(curve, multiplicity)`` list together with the induced pairing
    ``x -> P.x`` of the positive part.
    """
    curves = lat.tracked_curves
    theta_dot = [pairing(c) for c in curves]
    members = sorted(i for i in range(len(curves)) if theta_dot[i].sign() < 0)
    for _ in range(len(curves) + 2):
        sub = [curves[i] for i in members]
        if sub:
            gram = lat.gram_of(sub)
            if not ela.is_negative_definite(gram):
                labels = ", ".join(c.label for c in sub)
                raise GramNotNegativeDefinite(
                    f"curves {{{labels}}} have a non-negative-definite Gram matrix; "
                    "the declared curves cannot all be irreducible negative curves")
            coeffs = ela.solve_square(gram, [theta_dot[i] for i in members])
            for c, cls in zip(coeffs, sub):
                if c.sign() < 0:
                    raise GramNotNegativeDefinite(
                        f"negative multiplicity on {cls.label}; curve declarations "
                        "are inconsistent")
        else:
            coeffs = []

        def positive_dot(x, _sub=sub, _coeffs=coeffs):
            acc = pairing(x)
            for a, c in zip(_coeffs, _sub):
                acc = acc - a * lat.intersect(c, x)
            return acc

        entering = [i for i in range(len(curves))
                    if i not in members and positive_dot(curves[i]).sign() < 0]
        if not entering:
            for g in lat.cone.generators:
                if positive_dot(g).sign() < 0:
                    raise CertificateError(
                        "positive part is not nef against a psef generator; the "
                        "tracked curve list is incomplete for this class")
            return list(zip(sub, coeffs)), positive_dot
        members = sorted(members + entering)
    raise NonTermination("support iteration exceeded the tracked curve count")


def zariski_decompose(lat: SurfaceLattice, theta: DivisorClass) -> ZariskiDecomposition:
    """Exact Zariski decomposition ``theta = P + N`` with a full certificate."""
    if not lat.is_psef(theta):
        raise NotPseudoeffective(f"class {theta!r} is not pseudoeffective")
    if lat.cone.mode == QUADRIC:
        solved = []
    else:
        solved, _ = _fujita(lat, lambda x: lat.intersect(theta, x))
    support = tuple((c.label, a) for c, a in solved if a.sign() > 0)
    negative = lat.zero_class()
    for lab, a in support:
        negative = negative + a * lat.class_of(lab)
    positive = theta - negative
    cert = certify(lat, theta, positive, support)
    if not cert.all_ok:
        raise CertificateError(f"decomposition certificate failed: {cert}")
    return ZariskiDecomposition(theta, positive, negative, support, cert)


# -- thresholds -------------------------------------------------------------------

def _declared_effective(lat: SurfaceLattice, D: DivisorClass) -> bool:
    """Effectivity relative to the declared data.

    CURVES mode certifies D as a nonnegative combination of declared curve
    and basis classes; QUADRIC mode uses psef membership (the two cones
    agree there).
    """
    if lat.cone.mode == QUADRIC:
        return lat.is_psef(D)
    cols = [list(lat.class_of(lab).coeffs) for lab in lat.labels()]
    return ela.cone_contains(cols, list(D.coeffs))


def _check_ray(lat: SurfaceLattice, omega: DivisorClass, D: DivisorClass):
    if not lat.is_ample(omega):
        raise NotAmple("ray origin must be ample")
    if D.is_zero():
        raise ZeroDirection("ray direction is zero")
    if not _declared_effective(lat, D):
        raise NotEffective("direction is not effective over the declared classes")


def _quadric_threshold(lat: SurfaceLattice, omega: DivisorClass,
                       D: DivisorClass) -> Scalar:
    h = lat.cone.polarization
    c2, c1, c0 = lat.selfint(D), -2 * lat.intersect(omega, D), lat.selfint(omega)
    candidates = []
    if not (c2.is_zero() and c1.is_zero()):
        for root in solve_quadratic(c2, c1, c0):
            if root.sign() > 0 and (2 * c2 * root + c1).sign() < 0:
                candidates.append(root)  # downward crossing of (omega - lam D)^2
    dh = lat.intersect(D, h)
    if dh.sign() > 0:
        candidates.append(lat.intersect(omega, h) / dh)
    if not candidates:
        raise ela.UnboundedRay("ray never leaves the quadric cone")
    return min(candidates)


def threshold_psef(lat: SurfaceLattice, omega: DivisorClass,
                   D: DivisorClass) -> Scalar:
    """Largest lam >= 0 with ``omega - lam*D`` pseudoeffective (exact)."""
    _check_ray(lat, omega, D)
    if lat.cone.mode == QUADRIC:
        return _quadric_threshold(lat, omega, D)
    cols = [list(g.coeffs) for g in lat.cone.generators]
    return ela.ray_exit(cols, list(omega.coeffs), list(D.coeffs))


# -- the piecewise linear family ----------------------------------------------------

@dataclass(frozen=True)
class FamilySegment:
    """One chamber: N is affine on [start, end] with the stated support."""

    start: Scalar
    end: Scalar
    support: tuple[str, ...]
    value: tuple[tuple[str, Scalar], ...]
    slope: tuple[tuple[str, Scalar], ...]

    def coefficients_at(self, lam: Scalar) -> dict[str, Scalar]:
        mu = lam - self.start
        vals = dict(self.value)
        for lab, s in self.slope:
            vals[lab] = vals.get(lab, ZERO) + mu * s
        return {lab: v for lab, v in vals.items() if not v.is_zero()}


class PLFamily:
    """The map ``lam -> N(omega - lam*D)`` on ``[0, lam_psef]``.

    The family is identically zero for ``lam <= 0`` (the origin is ample);
    only the nontrivial range is stored.
    """

    def __init__(self, lattice, omega, direction, segments):
        self.lattice = lattice
        self.omega = omega
        self.direction = direction
        self.segments = tuple(segments)
        if not self.segments:
            raise ValueError("a family needs at least one segment")

    @property
    def breakpoints(self) -> tuple[Scalar, ...]:
        return tuple(s.start for s in self.segments) + (self.segments[-1].end,)

    @property
    def psef_threshold(self) -> Scalar:
        return self.segments[-1].end

    def segment_for(self, lam: Scalar) -> FamilySegment:
        lam = Scalar.of(lam)
        if lam.sign() < 0 or lam > self.psef_threshold:
            raise ValueError("parameter outside [0, psef threshold]")
        for seg in self.segments:
            if lam <= seg.end:
                return seg
        return self.segments[-1]

    def negative_at(self, lam) -> dict[str, Scalar]:
        lam = Scalar.of(lam)
        return self.segment_for(lam).coefficients_at(lam)

    def negative_class_at(self, lam) -> DivisorClass:
        total = self.lattice.zero_class()
        for lab, c in self.negative_at(lam).items():
            total = total + c * self.lattice.class_of(lab)
        return total


def _family_walk(lat: SurfaceLattice, omega: DivisorClass, D: DivisorClass,
                 lam_max: Scalar) -> list[FamilySegment]:
    curves = lat.tracked_curves
    segments: list[dict] = []
    lam = ZERO
    guard = 2 ** len(curves) + 2
    while True:
        guard -= 1
        if guard < 0:
            raise NonTermination("chamber walk did not reach the psef threshold")
        theta = omega - lam * D

        def jet_pairing(x, _theta=theta):
            return _Jet(lat.intersect(_theta, x), -lat.intersect(D, x))

        solved, positive_dot = _fujita(lat, jet_pairing)
        jets = {c.label: jet for c, jet in solved if not jet.is_zero()}
        values = {lab: j.val for lab, j in jets.items() if not j.val.is_zero()}
        slopes = {lab: j.slo for lab, j in jets.items()}

        # cross-check the walk against a fresh decomposition at this point
        exact = zariski_decompose(lat, theta)
        if exact.support_dict() != values:
            raise CertificateError(
                f"family value at lam = {lam} disagrees with the pointwise "
                "Zariski decomposition")

        merged = False
        if segments:
            prev = segments[-1]
            prev_at = {lab: v for lab, v in prev["at_end"].items() if not v.is_zero()}
            if prev["slope"] == slopes and prev_at == values:
                merged = True  # same affine formula continues; not a breakpoint
        if not merged:
            if segments and {lab: v for lab, v in segments[-1]["at_end"].items()
                             if not v.is_zero()} != values:
                raise CertificateError(
                    f"family is discontinuous at lam = {lam}")
            segments.append({"start": lam, "value": dict(values),
                             "slope": dict(slopes),
                             "support": tuple(lab for lab in
                                              (c.label for c in curves)
                                              if lab in jets)})

        # next wall: a support multiplicity reaches zero, or an off-support
        # curve starts meeting P negatively; both are affine events in lam
        events = []
        for lab, j in jets.items():
            if j.slo.sign() < 0:
                events.append(lam - j.val / j.slo)
        in_support = set(jets)
        for c in curves:
            if c.label in in_support:
                continue
            pj = positive_dot(c)
            if pj.slo.sign() < 0 and pj.val.sign() > 0:
                events.append(lam - pj.val / pj.slo)
        wall = min([e for e in events if e < lam_max] + [lam_max])
        if wall <= lam:
            raise CertificateError("chamber walk failed to advance")
        seg = segments[-1]
        mu = wall - seg["start"]
        seg["end"] = wall
        seg["at_end"] = {lab: seg["value"].get(lab, ZERO) + mu * seg["slope"].get(lab, ZERO)
                         for lab in set(seg["value"]) | set(seg["slope"])}
        if wall == lam_max:
            break
        lam = wall

    # cross-check the endpoint as well
    exact = zariski_decompose(lat, omega - lam_max * D)
    last = segments[-1]
    end_vals = {lab: v for lab, v in last["at_end"].items() if not v.is_zero()}
    if exact.support_dict() != end_vals:
        raise CertificateError("family value at the psef threshold disagrees "
                               "with the pointwise Zariski decomposition")

    out = []
    for seg in segments:
        out.append(FamilySegment(
            start=seg["start"], end=seg["end"], support=seg["support"],
            value=tuple(sorted(seg["value"].items())),
            slope=tuple(sorted((k, v) for k, v in seg["slope"].items()
                               if not v.is_zero()))))
    return out


def pl_family(lat: SurfaceLattice, omega: DivisorClass, D: DivisorClass) -> PLFamily:
    """Chamber-walk the ray ``omega - lam*D`` from 0 to the psef threshold."""
    _check_ray(lat, omega, D)
    lam_max = (_quadric_threshold(lat, omega, D) if lat.cone.mode == QUADRIC
               else threshold_psef(lat, omega, D))
    if lat.cone.mode == QUADRIC:
        seg = FamilySegment(ZERO, lam_max, (), (), ())
        return PLFamily(lat, omega, D, [seg])
    return PLFamily(lat, omega, D, _family_walk(lat, omega, D, lam_max))


def pl_family_csv(fam: PLFamily) -> str:
    """One row per breakpoint: lam, then N(lam) per basis label."""
    header = ["lambda"] + list(fam.lattice.basis_labels)
    lines = [",".join(header)]
    for b in fam.breakpoints:
        cls = fam.negative_class_at(b)
        lines.append(",".join([str(b)] + [str(c) for c in cls.coeffs]))
    return "\n".join(lines) + "\n"


# -- valuation-facing helpers ----------------------------------------------------

def minimal_vanishing_order(lat: SurfaceLattice, v: "RealDivisorialValuation",
                            theta: DivisorClass) -> Scalar:
    """Minimal vanishing order of theta along v = t*ord_E, via N's multiplicity."""
    cls = lat.class_of(v.divisor)  # raises UnknownDivisor for foreign labels
    del cls
    zd = zariski_decompose(lat, theta)
    return Scalar.of(v.scale) * zd.support_dict().get(v.divisor, ZERO)


def negative_support(lat: SurfaceLattice, theta: DivisorClass) -> tuple[str, ...]:
    """Divisorial part of the diminished base locus: the support of N."""
    zd = zariski_decompose(lat, theta)
    return tuple(lab for lab, _ in zd.support)
