"""Exception taxonomy shared across the package.

Every domain precondition failure has its own class so callers (and the
CLI) can map failures to specific messages and exit codes.
"""


class LocredError(Exception):
    """Base class for all domain errors raised by this package."""


# -- polynomial arithmetic ------------------------------------------------

class ZeroPolynomial(LocredError):
    pass


class ConstantPolynomial(LocredError):
    pass


class ExactDivisionFailed(LocredError):
    pass


class NotAPerfectSquare(LocredError):
    pass


class DegenerateResolvent(LocredError):
    pass


# -- number theory / finite fields ----------------------------------------

class NotPrime(LocredError):
    pass


class NotCoprime(LocredError):
    pass


class NotDividing(LocredError):
    pass


class Ramified(LocredError):
    pass


class SearchExhausted(LocredError):
    pass


# -- factorization over the rationals -------------------------------------

class MonicRequired(LocredError):
    pass


class LeadingCoefficientDivisible(LocredError):
    pass


class NotSquarefree(LocredError):
    pass


# -- groups ----------------------------------------------------------------

class NotASubgroup(LocredError):
    pass


class DifferentParents(LocredError):
    pass


class TooLarge(LocredError):
    pass


class DegenerateModule(LocredError):
    pass


# -- constructions / certificates ------------------------------------------

class NotComposite(LocredError):
    pass


class PrimitiveElementSearchFailed(LocredError):
    pass


class MalformedCertificate(LocredError):
    pass


# -- function field case -----------------------------------------------------

class NotCoprimeExponent(LocredError):
    pass


class DenominatorVanishes(LocredError):
    pass
