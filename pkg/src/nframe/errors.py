"""Exception types shared across the package."""


class NFrameError(Exception):
    """Base class for all nframe errors."""


class DimensionMismatchError(NFrameError, ValueError):
    """Vector or matrix shapes are inconsistent with the ambient space."""


class DegenerateAnchorError(NFrameError, ValueError):
    """Anchor vectors are linearly dependent (Gram determinant at zero)."""


class UnstableNormError(NFrameError, ArithmeticError):
    """A squared norm came out negative beyond the round-off clamp."""


class SingularFrameOperatorError(NFrameError, ArithmeticError):
    """The family is not a frame, so the frame operator cannot be inverted."""


class GenerationError(NFrameError, RuntimeError):
    """A random generator exhausted its retry budget."""


class InstanceFormatError(NFrameError, ValueError):
    """An instance document is malformed or internally inconsistent."""
