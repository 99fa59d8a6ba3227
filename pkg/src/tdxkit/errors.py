"""Exception hierarchy shared by all modules."""


class TdxError(Exception):
    """Base class for all errors raised by tdxkit."""


class InputError(TdxError):
    """Malformed or incompatible input: bad symbols, bad schemas, partial maps."""


class AlphabetMismatch(InputError):
    """Two values that must share an alphabet do not."""


class FrameMismatch(InputError):
    """Cells or matrices whose boundary data (states, alphabets) disagree."""


class NotReducedError(TdxError):
    """Restricted star applied to a language containing the empty word."""


class StateCapExceeded(TdxError):
    """Subset construction exceeded the configured state cap."""


class NoTabulator(TdxError):
    """Tabulator requested for a transducer with more than one state."""


class NoCommonSection(InputError):
    """Reflexive coequalizer requested for a pair of cells with no common section."""
