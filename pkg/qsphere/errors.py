"""Errors and Warnings."""

from click import FileError


class QSphereError(Exception):
    """Root exception class"""


class DivisionByZero(QSphereError, ZeroDivisionError):
    """Raised when dividing by the zero element of a coefficient field."""


class PoleAtPoint(QSphereError, ValueError):
    """Raised when a rational function is evaluated at a root of its
    denominator."""


class ArityMismatch(QSphereError, ValueError):
    """Raised when elements of sphere algebras with different numbers
    of generators are combined."""


class QModeMismatch(QSphereError, ValueError):
    """Raised when values computed under incompatible deformation
    parameters are combined."""


class InvalidQ(QSphereError, ValueError):
    """Raised when a fixed deformation parameter lies outside [0, 1)."""


class InvalidRange(QSphereError, ValueError):
    """Raised when a pair of deformation parameters is outside the
    range in which the power test is defined."""


class PolySyntaxError(QSphereError, ValueError):
    """Raised when an expression can't be parsed.

    Attributes
    ----------
    text : str
        The expression being parsed.
    offset : int
        0-based character position of the error.
    """

    def __init__(self, message, text='', offset=0):
        super(PolySyntaxError, self).__init__(message)
        self.text = text
        self.offset = offset

    def __str__(self):
        return "{} (at position {})".format(self.args[0], self.offset)


class UnknownGenerator(PolySyntaxError):
    """Raised when an expression names a generator the algebra lacks."""


class NegativeWordPower(PolySyntaxError):
    """Raised when a non-invertible word is raised to a negative power."""


class TerminationError(QSphereError):
    """Raised when a rewrite rule fails to decrease the termination
    measure."""


class QZeroUnsupported(QSphereError, ValueError):
    """Raised when the PBW basis of SU_q(2) is requested at q = 0, where
    its elements are linearly dependent."""


class NotCertifiable(QSphereError):
    """Raised when an element can't be written as a member of the
    commutator ideal by the generator recipe."""


class NotUnit(QSphereError, ValueError):
    """Raised when a scalar expected to have modulus 1 doesn't."""


class FiltrationViolation(QSphereError, ValueError):
    """Raised when an element is not in the required filtration level."""


class ConfigError(QSphereError, ValueError):
    """Raised when a run configuration is invalid."""


class ConfigFileError(FileError):
    """Raised when the CLI can't read a configuration file."""

    exit_code = 2

    def __init__(self, filename, message):
        """Raise ConfigFileError with message as hint."""
        super(ConfigFileError, self).__init__(filename, hint=message)


class NonCanonicalWarning(UserWarning):
    """Warn that a rule set's normal forms are not certified canonical."""
