"""Exception hierarchy shared by the whole package."""


class PpcalcError(Exception):
    """Base class for all structured errors raised by this package."""


class DimensionError(PpcalcError):
    """Matrix or formula dimensions do not match."""


class SideError(PpcalcError):
    """Left/right sides of formulas, modules or rings do not match."""


class ArityError(PpcalcError):
    """An operation requiring a specific free arity received another one."""


class RingFormatError(PpcalcError):
    """A ring description violates the ring axioms or the file format."""


class ModuleFormatError(PpcalcError):
    """A module description violates the module axioms or the file format."""


class UnsupportedRingError(PpcalcError):
    """The operation is not defined for this ring class."""


class CapExceeded(PpcalcError):
    """A configured enumeration or coset-enumeration cap was exceeded."""


class ForestFormatError(PpcalcError):
    """A height forest description is malformed."""


class FormulaParseError(PpcalcError):
    """Syntax error in the formula language, with a source position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
