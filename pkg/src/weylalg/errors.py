"""Exception hierarchy shared by every module."""


class WeylError(Exception):
    pass


class ArgumentError(WeylError, ValueError):
    """Inputs are malformed or mutually incompatible."""


class StateError(WeylError, RuntimeError):
    """Inputs are well-formed but violate a structural precondition."""


class UnsupportedArityError(ArgumentError):
    pass


class MaurerCartanError(StateError):
    pass
