"""Exception types shared across the package."""


class SubtilingError(Exception):
    """Base class for all package-specific errors."""


class InvalidWord(SubtilingError):
    """A word contains a letter outside the declared alphabet."""


class LengthCapExceeded(SubtilingError):
    """An iteration would produce a word longer than the configured cap."""


class NoSeedFound(SubtilingError):
    """No legal two-sided fixed-point seed exists within the search bound."""


class FactorizationFailed(SubtilingError):
    """The bounded integer factor search was exhausted without a certificate."""


class DegreeCapExceeded(SubtilingError):
    """Polynomial degree exceeds the configured irreducibility-test limit."""


class EigenvectorDefect(SubtilingError):
    """The dominant eigenspace is not one-dimensional over the base field."""


class WindowNotCovered(SubtilingError):
    """A requested window sticks out of the available patch support."""


class EmptyWindow(SubtilingError):
    """A window contains no reference points at all."""


class NotASubmodule(SubtilingError):
    """Quotient requested for a lattice that is not contained in the other."""


class SpecSyntaxError(SubtilingError):
    """Substitution spec text failed to parse."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class UnknownCorpusEntry(SubtilingError):
    """Requested built-in substitution id does not exist."""
