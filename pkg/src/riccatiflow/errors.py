"""Exception types shared across the solver layers."""


class RiccatiflowError(Exception):
    """Base class for all package-specific failures."""


class ConfigError(RiccatiflowError):
    """Run configuration is malformed or inconsistent."""


class PatchBreakdown(RiccatiflowError):
    """The flow left the canonical coordinate chart.

    Raised when the regularized determinant of the auxiliary operator drops
    below the working floor, or the Fredholm/projection solve is numerically
    singular.  Carries the offending diagnostics where known.
    """

    def __init__(self, message, *, det2=None, rcond=None, t=None):
        super().__init__(message)
        self.det2 = det2
        self.rcond = rcond
        self.t = t


class PoleCrossing(RiccatiflowError):
    """A per-mode denominator of the closed-form solution crosses zero.

    ``mode`` is the frequency (cycles per unit length) of the offending mode
    and ``t_critical`` the estimated crossing time.
    """

    def __init__(self, message, *, mode=None, t_critical=None):
        super().__init__(message)
        self.mode = mode
        self.t_critical = t_critical


class NonPositiveQ(RiccatiflowError):
    """The auxiliary profile for the rank-one (Burgers) route is not positive."""

    def __init__(self, message, *, min_value=None):
        super().__init__(message)
        self.min_value = min_value


class InstabilityError(RiccatiflowError):
    """A time integration became unstable or its stability precheck failed."""

    def __init__(self, message, *, t=None, growth=None):
        super().__init__(message)
        self.t = t
        self.growth = growth


class InadmissibleSymbolError(RiccatiflowError):
    """Propagating with this symbol would overflow (growth rate too large)."""

    def __init__(self, message, *, max_growth=None):
        super().__init__(message)
        self.max_growth = max_growth


class BlowupError(RiccatiflowError):
    """A direct nonlinear integration blew up in finite time.

    ``time`` estimates the blow-up time; ``states`` holds the trajectory up
    to the last finite state.
    """

    def __init__(self, message, *, time=None, states=None):
        super().__init__(message)
        self.time = time
        self.states = states
