"""Exception hierarchy shared by the library and the CLI.

Every error carries the process exit code the CLI should use, the same way an
HTTP error carries its status code.
"""

EXIT_REPRESENTED = 0
EXIT_REFUTED = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70


class RepWordsError(Exception):
    exit_code = EXIT_INTERNAL

    def __init__(self, detail: str, exit_code: int | None = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class GraphParseError(RepWordsError):
    exit_code = EXIT_USAGE


class WordError(RepWordsError, ValueError):
    exit_code = EXIT_USAGE


class ForbiddenPatternError(RepWordsError):
    """A builder precondition failed; `witness` is the offending PatternWitness."""

    exit_code = EXIT_REFUTED

    def __init__(self, detail: str, witness):
        super().__init__(detail)
        self.witness = witness


class BudgetExceededError(RepWordsError):
    exit_code = EXIT_UNKNOWN


class InvariantViolation(RepWordsError):
    exit_code = EXIT_INTERNAL


class CrossValidationError(RepWordsError):
    exit_code = EXIT_REFUTED

    def __init__(self, detail: str, disagreements: list):
        super().__init__(detail)
        self.disagreements = disagreements
