"""Exception hierarchy shared by every module.

Anything deriving from :class:`InputError` means the caller handed us data
that cannot come from a genuine knot/manifold pair (or is malformed).
:class:`InternalError` means a produced certificate failed its own
re-verification, which is a bug.
"""


class SliceCertError(Exception):
    """Base class."""


class InputError(SliceCertError):
    pass


class InternalError(SliceCertError):
    pass


class DimensionMismatch(InputError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class NotSymmetric(InputError):
    pass


class NotSkew(InputError):
    pass


class NotUnimodular(InputError):
    pass


class OddRank(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class SearchBudgetExceeded(InputError):
    pass


class WrongParity(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class NotUnimodularResult(InputError):
    pass


class KEven(InputError):
    pass


class LayoutMismatch(InputError):
    pass


class MiddleBlockNonEmpty(InputError):
    pass


class NonzeroSignature(InputError):
    pass


class OddSize(InputError):
    pass


class SizeExceedsBudget(InputError):
    pass


class DocumentError(InputError):
    pass


class DocumentSyntaxError(DocumentError):
    def __init__(self, msg, line, column):
        super().__init__(f"{msg} (line {line}, column {column})")
        self.line = line
        self.column = column


class SchemaError(DocumentError):
    def __init__(self, field, msg):
        super().__init__(f"{field}: {msg}")
        self.field = field
