"""Exception types shared across the package."""


class EitmError(Exception):
    """Base class for all package-specific errors."""


class PoleError(EitmError):
    """Evaluation landed on (or numerically too close to) a resonance pole."""


class DegenerateInput(EitmError):
    """Input is structurally unusable: zero vector, zero coupling, F <= 0."""


class StepTooLarge(EitmError):
    """Finite-difference levels disagree too much; shrink the step."""


class InvalidSpec(EitmError):
    """A scan specification is malformed or inconsistent with the model."""


class AllPoles(EitmError):
    """More than half the grid points of some quantity hit poles."""


class InvalidConfig(EitmError):
    """A run configuration (CLI or config file) cannot be interpreted."""
