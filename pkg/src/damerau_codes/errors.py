"""Exception types shared across the package."""


class DecodeError(Exception):
    """Raised when a received word is inconsistent with the channel model.

    ``phase`` identifies the decoding stage that failed for the multi-phase
    burst/block decoders; it is ``None`` for single-stage decoders.
    """

    def __init__(self, message: str, phase: str | None = None):
        super().__init__(message if phase is None else f"{phase}: {message}")
        self.phase = phase


class BallSizeError(Exception):
    """Raised when an error-ball computation exceeds its size cap."""
