class NilpiecesError(ValueError):
    """Domain error: invalid input or violated precondition."""


class HypothesisError(NilpiecesError):
    """The standing hypotheses (special, even, even dual) fail."""


class DataNotShipped(NilpiecesError, LookupError):
    """Requested exceptional data is not part of the shipped tables."""


class GenericityError(NilpiecesError):
    """Random trials of the matrix oracle disagree."""
