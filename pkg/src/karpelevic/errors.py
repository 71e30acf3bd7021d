"""Exception types shared across the package."""


class KarpelevicError(ValueError):
    """Base class for domain and validation errors."""


class InvalidOrderError(KarpelevicError):
    """Matrix/region order outside the supported range."""


class MultipleRootError(KarpelevicError):
    """A tangent or continuation step hit a multiple root."""


class ArcTraceError(KarpelevicError):
    """Root continuation along an arc could not be resolved."""

    def __init__(self, message: str, alpha: float):
        super().__init__(f"{message} (alpha={alpha!r})")
        self.alpha = alpha
