"""Built-in golden instances and the selftest battery behind `selftest`.

Four configurations cover every engine: the blowup lattice with its
chamber crossing, the abelian-surface quadric lattice with an irrational
threshold, the Cutkosky flag, and the curve case.
"""

from __future__ import annotations

from fractions import Fraction

from .curvecase import CurveSigma, green_curve
from .flagcone import FlagConfiguration, evaluate_flag, flag_green, flag_zariski, lambda_nef_on_S
from .green import RealDivisorialValuation, SigmaSet, green_from_sigma
from .lattice import CurveCone, DivisorClass, QuadricCone, SurfaceLattice
from .scalars import Scalar
from .zariski import pl_family, threshold_psef, zariski_decompose


def blowup_lattice() -> SurfaceLattice:
    """Plane blown up in a point: basis (H, E), curves E and C = H - E."""
    e = DivisorClass([0, 1], label="E")
    c = DivisorClass([1, -1], label="C")
    return SurfaceLattice(["H", "E"], [[1, 0], [0, -1]],
                          CurveCone((e, c), (e, c)), DivisorClass([2, -1]))


def abelian_lattice() -> SurfaceLattice:
    """Abelian surface with Picard rank 2: Nef = Psef = quadric cone."""
    return SurfaceLattice(["L", "E"], [[4, 6], [6, 2]],
                          QuadricCone(DivisorClass([1, 0])), DivisorClass([1, 0]))


def cutkosky_flag() -> FlagConfiguration:
    """Quartic-surface flag with the irrational nef threshold 3 - sqrt(7)."""
    s_lat = SurfaceLattice(["h", "Z"], [[4, 6], [6, 2]],
                           QuadricCone(DivisorClass([1, 0])), DivisorClass([1, 0]))
    return FlagConfiguration(s_lat, DivisorClass([1, 0]), DivisorClass([0, 1]))


def curve_instances() -> list[CurveSigma]:
    return [CurveSigma(1, [("p", 1)]),
            CurveSigma(3, [("p", 1), ("q", Fraction(1, 2))])]


def _check_bl_decompose():
    lat = blowup_lattice()
    zd = zariski_decompose(lat, DivisorClass([1, 1]))
    assert zd.positive == DivisorClass([1, 0]), "P(H+E) should be H"
    assert zd.support == (("E", Scalar(1)),), "N(H+E) should be 1*E"
    assert zariski_decompose(lat, DivisorClass([1, 0])).support == ()
    assert zariski_decompose(lat, DivisorClass([1, 2])).support == (("E", Scalar(2)),)


def _check_bl_family():
    lat = blowup_lattice()
    omega, d = DivisorClass([2, -1]), DivisorClass([1, -1])
    assert threshold_psef(lat, omega, DivisorClass([0, 1])) == Scalar(1)
    fam = pl_family(lat, omega, d)
    assert fam.breakpoints == (Scalar(0), Scalar(1), Scalar(2)), "breakpoints 0,1,2"
    assert fam.negative_at(Fraction(3, 2)) == {"E": Scalar(Fraction(1, 2))}


def _check_bl_green():
    lat = blowup_lattice()
    sigma = SigmaSet([RealDivisorialValuation("C")])
    g = green_from_sigma(lat, DivisorClass([2, -1]), sigma)
    assert g.tau() == Scalar(2)
    assert g.is_rational_PL() is True
    assert g.evaluate(RealDivisorialValuation("C")) == Scalar(0)
    assert g.evaluate(RealDivisorialValuation("C", Fraction(1, 2))) == Scalar(1)
    assert g.evaluate(RealDivisorialValuation("E")) == Scalar(1)
    assert g.center_divisorial() == ("E", "C")


def _check_abelian_green():
    lat = abelian_lattice()
    tau = Scalar(3, -1, 7)
    g = green_from_sigma(lat, DivisorClass([1, 0]),
                         SigmaSet([RealDivisorialValuation("E")]))
    assert g.tau() == tau, "tau should be 3 - sqrt(7)"
    assert g.is_rational_PL() is False
    assert len(g.breakpoints) == 2
    assert g.b_formal(1) == {"E": -tau}
    for k in range(11):
        t = Scalar(Fraction(k, 5))
        got = g.evaluate(RealDivisorialValuation("E", t)) if k else g.tau()
        want = max(Scalar(0), tau * (Scalar(1) - t))
        assert got == want, f"closed form fails at t = {t}"


def _check_flag():
    cfg = cutkosky_flag()
    lam = lambda_nef_on_S(cfg)
    assert lam == Scalar(3, -1, 7) and lam < Scalar(1)
    g = flag_green(cfg)
    assert g.tau() == Scalar(1)
    assert g.is_rational_PL() is False
    assert evaluate_flag(g, 1, 1) == Scalar(0)
    assert evaluate_flag(g, 0, 0) == Scalar(1)
    assert evaluate_flag(g, 0, 1) == lam


def _check_zar2d():
    cfg = cutkosky_flag()
    assert flag_zariski(cfg, 1, 0).support == ()
    assert flag_zariski(cfg, 0, 1).support == (("S", Scalar(1)),)
    assert flag_zariski(cfg, 2, 3).support == (("S", Scalar(3)),)


def _check_curve():
    one, three = curve_instances()
    g1 = green_curve(one)
    assert g1.tau() == Scalar(1) and g1.evaluate("p", 1) == Scalar(0)
    assert g1.evaluate("p", Fraction(1, 2)) == Scalar(Fraction(1, 2))
    g3 = green_curve(three)
    assert g3.tau() == Scalar(1)
    assert g3.evaluate("q", 1) == Scalar(0)
    assert g3.evaluate("q", Fraction(1, 2)) == Scalar(0)
    assert g3.evaluate("q", Fraction(1, 4)) == Scalar(Fraction(1, 2))
    assert three.normalization * three.inverse_sum == three.degree


_CHECKS = [
    ("bl-decompose", _check_bl_decompose),
    ("bl-family", _check_bl_family),
    ("bl-green", _check_bl_green),
    ("abelian-green", _check_abelian_green),
    ("cutkosky-flag", _check_flag),
    ("zar2d-formula", _check_zar2d),
    ("curve-case", _check_curve),
]


def selftest() -> list[tuple[str, bool, str]]:
    results = []
    for name, check in _CHECKS:
        try:
            check()
            results.append((name, True, ""))
        except Exception as exc:  # report, never crash the battery
            results.append((name, False, f"{type(exc).__name__}: {exc}"))
    return results
