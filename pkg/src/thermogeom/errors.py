"""Exception types shared across the package."""


class ThermoGeomError(ValueError):
    """Base class for all validation and domain errors raised here."""


class NonHermitian(ThermoGeomError):
    """Matrix is not Hermitian within tolerance."""


class InvalidDim(ThermoGeomError):
    """Dimension or size argument out of range."""


class TraceError(ThermoGeomError):
    """Density operator trace differs from one beyond tolerance."""


class NotPSD(ThermoGeomError):
    """Density operator has an eigenvalue below the PSD tolerance."""


class DimMismatch(ThermoGeomError):
    """Operands live on Hilbert spaces of different dimension."""


class NotNormalized(ThermoGeomError):
    """Probability vector does not sum to one."""


class AlphaOne(ThermoGeomError):
    """Renyi order alpha = 1 requested; use relative_entropy instead."""


class SigmaSingular(ThermoGeomError):
    """Reference state is singular but a negative matrix power is needed."""


class NonPositiveTemperature(ThermoGeomError):
    """Temperature must be strictly positive."""


class TemperatureOrder(ThermoGeomError):
    """Temperature pair violates the required ordering."""


class ApproxSingular(ThermoGeomError):
    """Free-energy approximation denominator vanishes."""


class InvalidLevels(ThermoGeomError):
    """Invalid harmonic-oscillator level specification."""


class InvalidSpins(ThermoGeomError):
    """Invalid spin-ensemble size."""


class NegativeWork(ThermoGeomError):
    """Work bound requested for a cycle with negative net work."""


class ConfigError(ThermoGeomError):
    """Invalid experiment configuration."""
