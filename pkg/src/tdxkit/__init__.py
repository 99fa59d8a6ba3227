"""tdxkit: finite-state transducer algebra over the free quantale of regular languages."""

from .errors import (
    AlphabetMismatch,
    FrameMismatch,
    InputError,
    NoCommonSection,
    NoTabulator,
    NotReducedError,
    StateCapExceeded,
    TdxError,
)
from .lang import Alphabet, RegularLanguage, parse_regex

__all__ = [
    "Alphabet",
    "RegularLanguage",
    "parse_regex",
    "TdxError",
    "InputError",
    "AlphabetMismatch",
    "FrameMismatch",
    "NotReducedError",
    "StateCapExceeded",
    "NoTabulator",
    "NoCommonSection",
]

__version__ = "0.1.0"
