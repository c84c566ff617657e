"""Exception types raised across the package."""


class QtCatalanError(Exception):
    """Base class for all errors raised by qtcatalan."""


class NotPolynomial(QtCatalanError, ArithmeticError):
    """A fraction that was expected to be a polynomial left a nonzero remainder."""


class DivisionByZero(QtCatalanError, ZeroDivisionError):
    pass


class InvalidChainMap(QtCatalanError, ValueError):
    """The chain map is not a bijection W\\T -> W\\I with the (-1, +1) statistic shift."""


class NoSuchBijection(QtCatalanError, ValueError):
    pass


class MidlineViolation(QtCatalanError, ValueError):
    pass


class NotInDomain(QtCatalanError, ValueError):
    pass


class Unsupported(QtCatalanError, ValueError):
    pass


class WrongPart(QtCatalanError, ValueError):
    pass


class CaseMismatch(QtCatalanError, ValueError):
    pass


class BadParameters(QtCatalanError, ValueError):
    pass
