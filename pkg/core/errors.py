from typing import Dict, List, Optional


class FanoPoissonError(Exception):
    """Base class for every error raised by the toolkit."""


# Input errors (CLI exit code 2)

class InputError(FanoPoissonError, ValueError):
    """Malformed or invalid user input."""


class ParseError(InputError):
    """Input text or JSON could not be parsed."""


class NotHomogeneous(InputError):
    """A polynomial expected to be homogeneous of a fixed degree is not."""

    def __init__(self, message: str, degrees: Optional[List[int]] = None):
        super().__init__(message)
        self.degrees = sorted(set(degrees or []))


# Algebra errors

class DivisionByZero(FanoPoissonError, ZeroDivisionError):
    """Division by the zero polynomial."""


class NotDivisible(FanoPoissonError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DegreeOverflow(FanoPoissonError, ValueError):
    """A wedge product would exceed the top degree of the chart."""


class DegreeMismatch(FanoPoissonError, ValueError):
    """Degrees of the operands do not fit the requested operation."""


class ContextMismatch(FanoPoissonError, ValueError):
    """Operands live on different charts."""


class NotInSpan(FanoPoissonError, ArithmeticError):
    """Target vector is not a linear combination of the basis."""


class DependentBasis(FanoPoissonError, ValueError):
    """Supplied basis vectors are linearly dependent."""


# Mathematical failures (CLI exit code 1)

class MathematicalFailure(FanoPoissonError):
    """A verification or a mathematical precondition failed."""


class ChartDegenerate(MathematicalFailure):
    """No dehomogenization variable gives a usable hypersurface chart."""


class InconsistentCheck(MathematicalFailure):
    """Two independent tests of the same property disagree."""


class NotPoisson(MathematicalFailure):
    """The bivector does not satisfy [w, w] = 0."""

    def __init__(self, message: str, residuals: Optional[Dict[str, str]] = None):
        super().__init__(message)
        self.residuals = dict(residuals or {})


class TangencyFailure(MathematicalFailure):
    """A vector field is not tangent to the threefold."""

    def __init__(self, message: str, relation: str = ""):
        super().__init__(message)
        self.relation = relation


class IndependenceFailure(MathematicalFailure):
    """A basis that must be linearly independent is not."""


class NotOnConic(MathematicalFailure):
    """Point does not satisfy 9*a23^2 = 8*a28*a35."""


class DisjointnessFailure(MathematicalFailure):
    """All three separating Pluecker values vanish on a conic point."""


class ComplexFailure(MathematicalFailure):
    """Consecutive differentials do not compose to zero."""
