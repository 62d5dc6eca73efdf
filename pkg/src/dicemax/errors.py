"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""

    code = "E_DOMAIN"


class ResourceError(RuntimeError):
    """A request would exceed a configured work bound."""

    code = "E_RESOURCE"


class DegenerateExperimentWarning(UserWarning):
    """Advantage/disadvantage with a single roll, i.e. the base experiment."""
