"""Exception taxonomy for the umbilics package.

Two broad families:

* :class:`SpecError` — the input itself is malformed (surface files, model
  names, out-of-range coefficients).  The command line maps these to exit
  code 2.
* :class:`AnalysisError` — the input parsed fine but the requested analysis
  is not defined or cannot be certified for it.  Exit code 3.
"""

from __future__ import annotations


class UmbilicsError(Exception):
    """Base class for every error raised by this package."""


class SpecError(UmbilicsError):
    """A surface description or request is malformed."""


class AnalysisError(UmbilicsError):
    """A well-formed input falls outside the domain of an operation."""


# --- input / construction errors -------------------------------------------

class NonOriginPreserving(AnalysisError):
    """A substitution into a jet does not map the origin to the origin."""


class NotAtOrigin(AnalysisError):
    """A germ-level operation was given data not vanishing at the origin."""


class UnknownModel(SpecError):
    """A requested bundled model name does not exist."""


class SeedOutsideDomain(SpecError):
    """An integration seed lies outside the requested plot window."""


# --- certification / degeneration errors ------------------------------------

class TruncationInsufficient(AnalysisError):
    """No working jet order up to the configured maximum certifies the value."""


class OddDimension(AnalysisError):
    """A quotient dimension that must be even came out odd."""


class ZeroOneJet(AnalysisError):
    """The linear part of the equation triple vanishes identically."""


class DegenerateConfig(AnalysisError):
    """The root pattern is degenerate (repeated or shared roots)."""


class NoNonzeroMetricCoefficient(AnalysisError):
    """None of the three metric coefficients is a unit at the point."""


class ZeroCubic(AnalysisError):
    """The cubic form to be reduced is identically zero."""


class NotUmbilic(AnalysisError):
    """The origin of the given patch is not an umbilic point."""


class UnsupportedCausalType(AnalysisError):
    """The operation is not defined for the causal type at hand."""


class BranchInvalid(AnalysisError):
    """No branch condition held on the requested neighbourhood."""


class IllConditioned(AnalysisError):
    """A counting scheme could not certify its result at this radius."""
