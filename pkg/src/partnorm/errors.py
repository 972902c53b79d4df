"""Exception hierarchy.

Every error raised by the package derives from :class:`PartnormError`, so the
CLI can map the whole family onto a nonzero exit status.
"""


class PartnormError(Exception):
    """Base class for all package errors."""


# ingestion / validation


class ValidationError(PartnormError, ValueError):
    pass


class DuplicateJournal(ValidationError):
    def __init__(self, journal):
        super().__init__(f"duplicate journal id {journal!r}")
        self.journal = journal


class UnknownJournalInStats(ValidationError):
    def __init__(self, journal, year=None):
        where = f" (year {year})" if year is not None else ""
        super().__init__(f"stats row references unclassified journal {journal!r}{where}")
        self.journal = journal
        self.year = year


class EmptyCategorySet(ValidationError):
    def __init__(self, journal, line=None):
        at = f" at line {line}" if line is not None else ""
        super().__init__(f"journal {journal!r} has no subject categories{at}")
        self.journal = journal
        self.line = line


class DuplicateStatsRow(ValidationError):
    def __init__(self, journal, year, line=None):
        at = f" at line {line}" if line is not None else ""
        super().__init__(f"duplicate stats row for ({journal!r}, {year}){at}")
        self.journal = journal
        self.year = year
        self.line = line


class NegativeCount(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None, path=None):
        prefix = ""
        if path is not None:
            prefix += f"{path}:"
        if line is not None:
            prefix += f"{line}:"
        super().__init__(f"{prefix} {message}" if prefix else message)
        self.line = line
        self.path = path


class UnknownJournal(PartnormError, KeyError):
    def __init__(self, journal):
        super().__init__(journal)
        self.journal = journal

    def __str__(self):
        return f"unknown journal {self.journal!r}"


class UnknownKey(PartnormError, KeyError):
    """A cell key or subject category absent from the universe."""

    def __str__(self):
        return f"unknown key {self.args[0]!r}"


# expected rates


class UndefinedRate(PartnormError, ArithmeticError):
    """Zero item mass behind an expected rate."""


class HarmonicZero(UndefinedRate):
    """A zero category rate makes the harmonic mean undefined."""


# indicators


class AllExcluded(PartnormError, ArithmeticError):
    pass


class ZeroExpectedMass(PartnormError, ArithmeticError):
    pass


class DivisionUndefined(PartnormError, ArithmeticError):
    pass


class VariantMismatch(PartnormError, ValueError):
    pass


class DivisionByZero(PartnormError, ZeroDivisionError):
    pass


# statistics


class LengthMismatch(PartnormError, ValueError):
    pass


class ConstantVector(PartnormError, ValueError):
    pass


class TooFewPoints(PartnormError, ValueError):
    pass


class EmptyTarget(PartnormError, ValueError):
    pass


class DegenerateR(UserWarning):
    """|r| == 1: the p-value is reported as 0 by convention."""
