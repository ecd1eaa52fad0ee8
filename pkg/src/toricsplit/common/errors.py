class ToricSplitError(ValueError):
    pass


class DimensionMismatchError(ToricSplitError):
    pass


class FanError(ToricSplitError):
    pass


class GraphError(ToricSplitError):
    pass


class ScopeError(ToricSplitError):
    pass


class OracleWindowError(ToricSplitError):
    pass


class BundleDataError(ToricSplitError):

    def __init__(self, violations: list[str]) -> None:
        self.violations: list[str] = list(violations)

        summary: str = self.violations[0] if len(self.violations) > 0 else 'invalid bundle data'
        if len(self.violations) > 1:
            summary = f"{summary} (and {len(self.violations) - 1} more)"

        super().__init__(summary)


class ParseError(ToricSplitError):

    def __init__(self, message: str, line_number: int|None = None) -> None:
        self.line_number: int|None = line_number

        if line_number is not None:
            message = f"line {line_number}: {message}"

        super().__init__(message)


class SingularMatrixError(ToricSplitError):
    pass
