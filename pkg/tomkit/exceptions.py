class TomkitError(Exception):
    pass


# ---------------------------------------------------------------------------------------------
# Bus errors
# ---------------------------------------------------------------------------------------------
class CommandAlreadyRegistered(TomkitError):
    pass


class DependencyAlreadyRegistered(TomkitError):
    pass


class UnknownCommand(TomkitError):
    pass


class TomkitNotBuilt(TomkitError):
    pass


# ---------------------------------------------------------------------------------------------
# Domain errors
# ---------------------------------------------------------------------------------------------
class InputError(TomkitError):
    pass


class ResourceLimitExceeded(TomkitError):
    pass


class CatalogSyntaxError(TomkitError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class CatalogValidationError(TomkitError):
    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message if line_number is None else f"line {line_number}: {message}")
        self.line_number = line_number


class MarksFormatError(TomkitError):
    pass


class UnknownGroup(TomkitError):
    pass


class VerificationFailed(TomkitError):
    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair
