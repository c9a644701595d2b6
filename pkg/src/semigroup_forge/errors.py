"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`SemigroupForgeError`, which the CLI maps to exit code 1.
"""


class SemigroupForgeError(Exception):
    """Base class for computational errors."""


class EmptyInput(SemigroupForgeError, ValueError):
    pass


class GcdNotOne(SemigroupForgeError, ValueError):
    pass


class BaseNotInSemigroup(SemigroupForgeError, ValueError):
    pass


class InSemigroup(SemigroupForgeError, ValueError):
    pass


class NotInSemigroup(SemigroupForgeError, ValueError):
    pass


class DimensionMismatch(SemigroupForgeError, ValueError):
    pass


class ShapeMismatch(SemigroupForgeError, ValueError):
    pass


class CapExceeded(SemigroupForgeError, RuntimeError):
    """A Groebner computation hit its configured size or degree ceiling."""


class SweepCapExceeded(SemigroupForgeError, RuntimeError):
    """The degree sweep for toric generators ran past its ceiling uncertified."""


class HypothesisViolated(SemigroupForgeError):
    """Input does not satisfy the hypotheses of a structure theorem.

    ``hypothesis`` names the failing condition.
    """

    def __init__(self, hypothesis, message=None):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis violated: {hypothesis}")


class FalsifyingInstance(SemigroupForgeError):
    """Base for outcomes that would contradict a proved statement."""


class InternalContradiction(FalsifyingInstance):
    pass


class NonIntegralParameter(FalsifyingInstance):
    pass


class CertificationFailed(FalsifyingInstance):
    pass


class Uncertified(SemigroupForgeError, ValueError):
    pass


class PreconditionFailed(SemigroupForgeError, ValueError):
    pass


class ValidationFailed(SemigroupForgeError):
    """A generated family member broke one or more expected properties."""

    def __init__(self, failures, generators=None):
        self.failures = list(failures)
        self.generators = generators
        super().__init__("validation failed: " + "; ".join(self.failures))
