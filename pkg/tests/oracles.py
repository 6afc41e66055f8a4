"""Independent oracles and randomized instance generators for the tests.

The subset-enumeration oracle re-derives Zariski decompositions without
the solver: it tries every subset of tracked curves, solves the Gram
system, and keeps the subsets satisfying all decomposition conditions
with strictly positive multiplicities.  Uniqueness of that subset is part
of what the tests assert.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from zarigreen import exactlinalg as ela
from zarigreen.lattice import CurveCone, DivisorClass, QuadricCone, SurfaceLattice
from zarigreen.scalars import Scalar


def enumerate_zariski(lat, theta):
    """All curve subsets passing every certificate condition strictly."""
    valid = []
    curves = lat.tracked_curves
    for size in range(len(curves) + 1):
        for subset in itertools.combinations(range(len(curves)), size):
            classes = [curves[i] for i in subset]
            gram = lat.gram_of(classes)
            if not ela.is_negative_definite(gram):
                continue
            coeffs = (ela.solve_square(gram, [lat.intersect(theta, c) for c in classes])
                      if classes else [])
            if any(c.sign() <= 0 for c in coeffs):
                continue
            negative = lat.zero_class()
            for c, cls in zip(coeffs, classes):
                negative = negative + c * cls
            positive = theta - negative
            if not lat.is_nef(positive):
                continue
            if any(lat.intersect(positive, cls).sign() != 0 for cls in classes):
                continue
            valid.append((tuple((cls.label, c) for cls, c in zip(classes, coeffs)),
                          positive, negative))
    return valid


def del_pezzo_lattice(points: int) -> SurfaceLattice:
    """Blowup of the plane in 1..3 general points, full negative-curve data."""
    assert 1 <= points <= 3
    rank = points + 1
    gram = [[0] * rank for _ in range(rank)]
    gram[0][0] = 1
    for i in range(1, rank):
        gram[i][i] = -1

    def cls(h, es, label=None):
        return DivisorClass([h] + es, label=label)

    curves = []
    for i in range(points):
        es = [0] * points
        es[i] = 1
        curves.append(cls(0, es, label=f"E{i + 1}"))
    if points == 1:
        curves.append(cls(1, [-1], label="L1"))
    else:
        for i, j in itertools.combinations(range(points), 2):
            es = [0] * points
            es[i] = es[j] = -1
            curves.append(cls(1, es, label=f"L{i + 1}{j + 1}"))
    ample = cls(3, [-1] * points)
    return SurfaceLattice(["H"] + [f"E{i + 1}" for i in range(points)],
                          gram, CurveCone(tuple(curves), tuple(curves)), ample)


def hirzebruch_lattice(n: int) -> SurfaceLattice:
    """Ruled surface with a section of self-intersection -n and a fiber."""
    fiber = DivisorClass([1, 0], label="F")
    section = DivisorClass([0, 1], label="C0")
    cone = CurveCone((fiber, section), (fiber, section))
    ample = DivisorClass([n + 1, 1])
    return SurfaceLattice(["F", "C0"], [[0, 1], [1, -n]], cone, ample)


def abelian_quadric_lattice() -> SurfaceLattice:
    return SurfaceLattice(["L", "E"], [[4, 6], [6, 2]],
                          QuadricCone(DivisorClass([1, 0])), DivisorClass([1, 0]))


def random_curves_lattice(rng) -> SurfaceLattice:
    kind = rng.randrange(6)
    if kind < 3:
        return del_pezzo_lattice(kind + 1)
    return hirzebruch_lattice(kind - 3)


def random_fraction(rng, lo=0, hi=5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def random_psef_class(rng, lat) -> DivisorClass:
    """Random nonzero nonnegative combination of the psef generators."""
    while True:
        total = lat.zero_class()
        for g in lat.cone.generators:
            if rng.random() < 0.7:
                total = total + Scalar(random_fraction(rng)) * g
        if rng.random() < 0.3:
            total = total + Scalar(random_fraction(rng)) * lat.ample
        if not total.is_zero():
            return total


def random_ample_class(rng, lat) -> DivisorClass:
    """Ample plus a random psef perturbation stays ample."""
    omega = 1 * lat.ample
    for g in lat.cone.generators:
        if rng.random() < 0.5:
            omega = omega + Scalar(random_fraction(rng, 0, 3)) * g
    return omega
