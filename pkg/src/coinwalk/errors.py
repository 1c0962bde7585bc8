"""Exception hierarchy for coinwalk."""


class CoinwalkError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CoinwalkError, ValueError):
    """A parameter lies outside its admissible domain."""


class SizeMismatchError(CoinwalkError, ValueError):
    """State vector and operator disagree on the lattice size."""


class DenseLimitError(CoinwalkError, ValueError):
    """Requested dense realization exceeds the configured size limit."""


class DegeneracyError(CoinwalkError, ValueError):
    """The requested construction does not apply to this degeneracy structure."""


class GaugeError(CoinwalkError, ValueError):
    """Gauge weight outside the admissible open interval."""


class NotUniqueError(CoinwalkError, ValueError):
    """Wavenumber does not carry a unique (unpaired) eigenvalue."""


class OracleError(CoinwalkError, RuntimeError):
    """Dense eigendecomposition failed or produced an inconsistent result."""
