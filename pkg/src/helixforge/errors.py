"""Exception hierarchy shared by all helixforge modules."""


class HelixforgeError(Exception):
    """Base class for every error raised by the package."""


class DescriptorMismatchError(HelixforgeError, ValueError):
    """Operands live in different groups."""


class InvalidGroupError(HelixforgeError, ValueError):
    """A group descriptor or element violates its invariants."""


class CapacityError(HelixforgeError):
    """Exhaustive enumeration would exceed the configured cap."""


class InvalidEmbeddingError(HelixforgeError, ValueError):
    pass


class WindowTooShortError(HelixforgeError, ValueError):
    pass


class DegenerateTranslationError(HelixforgeError, ValueError):
    """The translation is too small (e.g. tau is the identity) for the construction."""


class OrbitConditionError(HelixforgeError, ValueError):
    """Base points share a tau-orbit."""


class CollinearPointsError(HelixforgeError, ValueError):
    pass


class NoRootError(HelixforgeError):
    """A required k-th root of a translation does not exist in the finite group."""


class NoSquareRootError(NoRootError):
    pass


class NoCubeRootError(NoRootError):
    pass


class NotSpecifiedRegionError(HelixforgeError, ValueError):
    """grid_dim was asked for a region no dimension statement covers."""


class ConfigError(HelixforgeError, ValueError):
    """Configuration problem, optionally anchored to a line of the config text."""

    def __init__(self, message, line=None, rule=None):
        self.line = line
        self.rule = rule
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
