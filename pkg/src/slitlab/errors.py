"""Exception types raised by slitlab."""


class SlitlabError(Exception):
    """Base class for all slitlab errors."""


class DomainError(SlitlabError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ContractError(SlitlabError, ValueError):
    """A caller violated an input contract (bad grid, bad cutoff list, ...)."""


class GeometryError(SlitlabError, ValueError):
    """Invalid slit geometry."""


class OverlapError(GeometryError):
    """Neighbouring slits overlap (spacing smaller than width)."""


class NoMinimumError(SlitlabError, ValueError):
    """The diffraction envelope has no zero at a real angle."""


class ConfigError(SlitlabError, ValueError):
    """Invalid run configuration."""
