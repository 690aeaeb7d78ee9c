"""Exception hierarchy shared by every module."""


class InfoAlgError(Exception):
    """Base class for all errors raised by :mod:`infoalg`."""


class MalformedInputError(InfoAlgError, ValueError):
    """Tables, relations or documents that are structurally invalid."""


class ResourceLimitError(InfoAlgError):
    """An exhaustive enumeration would exceed a configured cap."""


class ContractError(InfoAlgError):
    """An operation was called outside its precondition."""


class AxiomViolation(InfoAlgError):
    """A construction detected that its input breaks the algebra axioms."""
