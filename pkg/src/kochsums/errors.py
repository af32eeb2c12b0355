"""Exception types shared across the package."""


class DomainError(ValueError):
    """A value is outside the mathematical domain of an operation."""


class ResourceError(RuntimeError):
    """A requested computation exceeds the configured size budget."""


class RenderError(ValueError):
    """Input cannot be rendered (empty or degenerate)."""


class DecompositionError(DomainError):
    """A word does not decompose into the requested blocks.

    ``index`` is the 0-based chunk that matched neither the block nor its
    letter-swapped form.
    """

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index
