class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """The requested computation exceeds a configured guardrail."""


class ParseError(ValueError):
    """Malformed input text or document.

    ``where`` is a line number for text input or a JSON path for documents.
    """

    def __init__(self, message: str, where=None):
        self.where = where
        if where is not None:
            message = f"{where}: {message}"
        super().__init__(message)


class PrefixViolation(ValueError):
    def __init__(self, prefix: str, word: str):
        self.prefix = prefix
        self.word = word
        super().__init__(f"{prefix} is a prefix of {word}")


class DuplicateWord(ValueError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"duplicate codeword {word}")


class KraftViolation(ValueError):
    """Lengths whose Kraft sum exceeds one; ``total`` is the exact sum."""

    def __init__(self, total):
        self.total = total
        super().__init__(f"KraftViolation {format_rational(total)}")


def format_rational(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
