"""Exception types shared across the package."""


class PpnError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PpnError):
    """Syntax error in a presentation file; carries line/column info."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {column}" if column is not None else "") + ")"
        super().__init__(message + loc)


class PresentationError(PpnError):
    """Structurally invalid presentation: bad prime, tail out of range, non-triangular."""


class ConsistencyError(PresentationError):
    """Presentation fails a consistency test; records the failing word pair."""

    def __init__(self, test_name, left_word, right_word, left_nf, right_nf):
        self.test_name = test_name
        self.left_word = left_word
        self.right_word = right_word
        self.left_nf = left_nf
        self.right_nf = right_nf
        super().__init__(
            f"inconsistent presentation: {test_name}: "
            f"{left_word} collects to {left_nf} but {right_word} collects to {right_nf}"
        )


class CapExceeded(PpnError):
    """An enumeration or lattice bound was exceeded."""


class NotNormal(PpnError):
    """Quotient requested by a subgroup that is not normal."""
