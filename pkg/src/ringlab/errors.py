"""Exception types shared across the package."""


class RingLabError(Exception):
    """Base class for errors raised by this package."""


class ConstructionError(RingLabError):
    """A ring, map, or instance description is malformed or inconsistent."""


class CapExceeded(RingLabError):
    """An enumeration grew past its configured size cap."""


class IncompatibleInstance(RingLabError):
    """An instance does not fit the requested check (wrong shape of data)."""


class SampleInadequate(RingLabError):
    """A probe or sample set cannot support the requested certificate."""
