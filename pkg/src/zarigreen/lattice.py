"""Finite-rank intersection lattices of surfaces with cone oracles.

A :class:`SurfaceLattice` fixes a basis of numerical classes, the Gram
matrix of the intersection form, a designated ample class and a cone
oracle.  Two oracle modes exist:

* CURVES: the pseudoeffective cone is spanned by finitely many declared
  generators, and the irreducible curve classes relevant to Zariski
  supports are declared explicitly (every negative curve must be listed).
  Nefness is tested by surface duality against the generators.
* QUADRIC: nef and pseudoeffective cones coincide and equal
  ``{x : x.x >= 0, x.h >= 0}`` for a polarization h with ``h.h > 0``
  (abelian surfaces, quartics without (-2)-curves).

Correctness of every downstream computation is relative to the declared
finite data; :meth:`SurfaceLattice.validate` documents that trust
boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import exactlinalg as ela
from .errors import DimensionMismatch, InvalidLattice, UnknownDivisor
from .scalars import ONE, ZERO, Scalar

CURVES = "curves"
QUADRIC = "quadric"


class DivisorClass:
    """A coefficient vector over the lattice basis, optionally labelled.

    Equality and hashing ignore the label: two classes are equal iff their
    coordinates agree exactly.
    """

    __slots__ = ("coeffs", "label")

    def __init__(self, coeffs, label: str | None = None):
        self.coeffs = tuple(Scalar.of(c) for c in coeffs)
        self.label = label

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch("class dimensions differ")
        return DivisorClass(x + y for x, y in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch("class dimensions differ")
        return DivisorClass(x - y for x, y in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return DivisorClass(-x for x in self.coeffs)

    def __mul__(self, other):
        try:
            s = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return DivisorClass(s * x for x in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        tag = f", label={self.label!r}" if self.label else ""
        return f"DivisorClass([{body}]{tag})"


@dataclass(frozen=True)
class CurveCone:
    """Finitely generated psef cone plus the declared irreducible curves."""

    generators: tuple[DivisorClass, ...]
    curves: tuple[DivisorClass, ...]

    mode = CURVES

    def __post_init__(self):
        if not self.generators:
            raise InvalidLattice("CURVES mode needs at least one psef generator")
        for c in self.curves:
            if not c.label:
                raise InvalidLattice("every tracked curve needs a label")
        labels = [c.label for c in self.curves]
        if len(set(labels)) != len(labels):
            raise InvalidLattice("duplicate tracked curve labels")


@dataclass(frozen=True)
class QuadricCone:
    """Psef = Nef = {x : x.x >= 0, x.h >= 0} for a polarization h."""

    polarization: DivisorClass

    mode = QUADRIC

    curves: tuple[DivisorClass, ...] = field(default=(), init=False)


@dataclass
class ValidationReport:
    violations: list[str]
    signature: tuple[int, int, int]
    curve_self_intersections: dict[str, Scalar]
    negdef_subsets: dict[tuple[str, ...], bool]

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = [f"lattice: {'valid' if self.is_valid else 'invalid'}",
               f"signature: {self.signature}"]
        for v in self.violations:
            out.append(f"violation: {v}")
        for label, s in self.curve_self_intersections.items():
            out.append(f"curve {label}: self-intersection {s}")
        for subset, nd in self.negdef_subsets.items():
            out.append(f"negdef {{{', '.join(subset)}}}: {'yes' if nd else 'no'}")
        return out


class SurfaceLattice:
    """Intersection lattice of a surface with its cone oracle."""

    def __init__(self, basis_labels, gram, cone, ample: DivisorClass):
        self.basis_labels = tuple(basis_labels)
        if len(set(self.basis_labels)) != len(self.basis_labels):
            raise InvalidLattice("duplicate basis labels")
        n = len(self.basis_labels)
        self.gram = tuple(tuple(Scalar.of(x) for x in row) for row in gram)
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise InvalidLattice("Gram matrix shape does not match the basis")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise InvalidLattice("Gram matrix is not symmetric")
        self.cone = cone
        if ample.dim != n:
            raise DimensionMismatch("ample class has wrong dimension")
        self.ample = ample
        # label -> class: basis units first, then tracked curves
        self._classes: dict[str, DivisorClass] = {}
        for i, lab in enumerate(self.basis_labels):
            unit = DivisorClass((ONE if j == i else ZERO for j in range(n)), label=lab)
            self._classes[lab] = unit
        for c in cone.curves:
            if c.dim != n:
                raise DimensionMismatch(f"curve {c.label} has wrong dimension")
            if c.label in self.basis_labels:
                if c != self._classes[c.label]:
                    raise InvalidLattice(
                        f"curve {c.label} reuses a basis label with a different class")
            self._classes[c.label] = c

    # -- basic structure -------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    @property
    def tracked_curves(self) -> tuple[DivisorClass, ...]:
        return self.cone.curves

    def labels(self) -> tuple[str, ...]:
        """All divisor labels, basis first, in declaration order."""
        extra = tuple(c.label for c in self.cone.curves
                      if c.label not in self.basis_labels)
        return self.basis_labels + extra

    def class_of(self, label: str) -> DivisorClass:
        try:
            return self._classes[label]
        except KeyError:
            raise UnknownDivisor(f"no divisor labelled {label!r}") from None

    def make_class(self, coeffs, label: str | None = None) -> DivisorClass:
        c = DivisorClass(coeffs, label)
        if c.dim != self.rank:
            raise DimensionMismatch("coefficient vector has wrong length")
        return c

    def zero_class(self) -> DivisorClass:
        return DivisorClass([ZERO] * self.rank)

    # -- intersection form ------------------------------------------------------

    def intersect(self, x: DivisorClass, y: DivisorClass) -> Scalar:
        if x.dim != self.rank or y.dim != self.rank:
            raise DimensionMismatch("class dimension does not match the lattice")
        total = ZERO
        for i, xi in enumerate(x.coeffs):
            if xi.is_zero():
                continue
            row = self.gram[i]
            for j, yj in enumerate(y.coeffs):
                if not yj.is_zero():
                    total = total + xi * row[j] * yj
        return total

    def selfint(self, x: DivisorClass) -> Scalar:
        return self.intersect(x, x)

    def gram_of(self, classes) -> list[list[Scalar]]:
        classes = list(classes)
        return [[self.intersect(a, b) for b in classes] for a in classes]

    # -- cone oracles -------------------------------------------------------------

    def is_psef(self, x: DivisorClass) -> bool:
        if x.dim != self.rank:
            raise DimensionMismatch("class dimension does not match the lattice")
        if self.cone.mode == QUADRIC:
            h = self.cone.polarization
            return self.selfint(x).sign() >= 0 and self.intersect(x, h).sign() >= 0
        cols = [list(g.coeffs) for g in self.cone.generators]
        return ela.cone_contains(cols, list(x.coeffs))

    def is_nef(self, x: DivisorClass) -> bool:
        if x.dim != self.rank:
            raise DimensionMismatch("class dimension does not match the lattice")
        if self.cone.mode == QUADRIC:
            return self.is_psef(x)
        return all(self.intersect(x, g).sign() >= 0 for g in self.cone.generators)

    def is_ample(self, x: DivisorClass) -> bool:
        if x.dim != self.rank:
            raise DimensionMismatch("class dimension does not match the lattice")
        if self.cone.mode == QUADRIC:
            h = self.cone.polarization
            return self.selfint(x).sign() > 0 and self.intersect(x, h).sign() > 0
        return all(self.intersect(x, g).sign() > 0 for g in self.cone.generators)

    def is_big(self, x: DivisorClass) -> bool:
        if x.dim != self.rank:
            raise DimensionMismatch("class dimension does not match the lattice")
        if self.cone.mode == QUADRIC:
            return self.is_ample(x)
        gens = self.cone.generators
        if ela.rank([list(g.coeffs) for g in gens]) < self.rank:
            return False  # psef cone has empty interior
        barycenter = [sum(g.coeffs[i] for g in gens) for i in range(self.rank)]
        cols = [list(g.coeffs) for g in gens] + [barycenter]
        obj = [ZERO] * len(gens) + [ONE]
        res = ela.lp_maximize(cols, list(x.coeffs), obj)
        if res.status == ela.UNBOUNDED:
            raise ela.UnboundedRay("psef cone contains a line")
        return res.status == ela.OPTIMAL and res.objective.sign() > 0

    # -- structural validation ------------------------------------------------------

    def validate(self, max_subset_size: int = 4) -> ValidationReport:
        """Structural report: Hodge signature, oracle data, exceptional subsets.

        An empty violation list means the declarations are consistent; the
        negative-definiteness table records which tracked-curve subsets can
        appear as Zariski supports.
        """
        violations: list[str] = []
        sig = ela.signature([list(row) for row in self.gram])
        if sig != (1, self.rank - 1, 0):
            violations.append(
                f"signature {sig} violates the Hodge index constraint "
                f"(expected (1, {self.rank - 1}, 0))")
        selfints: dict[str, Scalar] = {}
        for c in self.cone.curves:
            selfints[c.label] = self.selfint(c)
        if self.cone.mode == QUADRIC:
            if self.selfint(self.cone.polarization).sign() <= 0:
                violations.append("polarization has nonpositive self-intersection")
        else:
            for c in self.cone.curves:
                if not self.is_psef(c):
                    violations.append(
                        f"tracked curve {c.label} is not generated by the psef generators")
            for g in self.cone.generators:
                if g.is_zero():
                    violations.append("zero class among psef generators")
        if not violations and not self.is_ample(self.ample):
            violations.append("designated ample class fails the ample test")
        negdef: dict[tuple[str, ...], bool] = {}
        curves = self.cone.curves
        for size in range(1, min(max_subset_size, len(curves)) + 1):
            for subset in itertools.combinations(curves, size):
                key = tuple(c.label for c in subset)
                negdef[key] = ela.is_negative_definite(self.gram_of(subset))
        return ValidationReport(violations, sig, selfints, negdef)
