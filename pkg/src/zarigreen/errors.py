"""Exception hierarchy shared by all engine modules.

Every error carries a small numeric code; the CLI renders failures as a
single structured line ``E<code>: <message>`` and maps engine errors to
exit status 1, parse errors to exit status 2.
"""

from __future__ import annotations


class ZariGreenError(Exception):
    """Base class for all errors raised by this package."""

    code = 100


class MixedFields(ZariGreenError):
    """Arithmetic between elements of two different quadratic fields."""

    code = 101


class DivisionByZero(ZariGreenError, ZeroDivisionError):
    code = 102


class NestedExtension(ZariGreenError):
    """A computation would require a second, incompatible square root."""

    code = 103


class DimensionMismatch(ZariGreenError):
    code = 104


class NotPseudoeffective(ZariGreenError):
    code = 105


class GramNotNegativeDefinite(ZariGreenError):
    """The declared curve data cannot support a Zariski decomposition."""

    code = 106


class NonTermination(ZariGreenError):
    """Iteration guard tripped; impossible with consistent declarations."""

    code = 107


class NotAmple(ZariGreenError):
    code = 108


class ZeroDirection(ZariGreenError):
    code = 109


class UnknownDivisor(ZariGreenError):
    """A valuation refers to a divisor the lattice does not declare."""

    code = 110


class ClassificationUnavailable(ZariGreenError):
    """Rational-PL dichotomy needs rational input data."""

    code = 111


class HypothesisViolated(ZariGreenError):
    """A flag configuration fails one of its geometric hypotheses."""

    code = 112


class NegativeCoefficients(ZariGreenError):
    code = 113


class InconsistentVanishing(ZariGreenError):
    """Vanishing orders incompatible with the ideal containment b_S in b_Z."""

    code = 114


class InvalidValuation(ZariGreenError):
    """Bad valuation set: duplicate divisors or nonpositive scales."""

    code = 115


class CertificateError(ZariGreenError):
    """An output failed its own re-verified certificate."""

    code = 116


class UnboundedRay(ZariGreenError):
    """A ray never leaves the declared cone; the cone data is degenerate."""

    code = 117


class NotEffective(ZariGreenError):
    """Direction class is not effective relative to the declared data."""

    code = 118


class InvalidLattice(ZariGreenError):
    code = 119


class ParseError(ZariGreenError):
    code = 201
