"""Exception and warning types shared across the package."""


class ParameterError(ValueError):
    """An exponent or parameter set is outside its admissible range."""


class BandError(ValueError):
    """A frequency band, dilation or shift is not representable on the grid."""


class ExperimentAbort(RuntimeError):
    """A divergence experiment failed partway through a size sweep.

    Carries the records computed before the failure so callers can keep
    partial results.
    """

    def __init__(self, reason: str, records: list):
        super().__init__(reason)
        self.reason = reason
        self.records = records


class ModelFidelityWarning(UserWarning):
    """A sampled field strains the periodic grid model.

    Raised (as a warning, never an error) when spectral mass leaks outside
    the feasible dyadic band, or when a field is not numerically negligible
    near the box boundary, so the continuum interpretation of grid sums
    carries extra error.
    """
