"""Exception types shared across the package."""


class InputError(ValueError):
    """Bad argument: unknown edge, wrong graph shape, violated precondition."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(RuntimeError):
    """An exhaustive search would exceed a configured limit."""

    def __init__(self, limit_name, required, limit):
        self.limit_name = limit_name
        self.required = required
        self.limit = limit
        super().__init__(f"{limit_name} exceeded: need {required}, limit is {limit}")
