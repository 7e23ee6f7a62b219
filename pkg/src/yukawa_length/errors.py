"""Exception hierarchy. Everything a user can trigger with bad input is an InvalidInput."""


class InvalidInput(ValueError):
    code = "invalid-input"


class InvalidParams(InvalidInput):
    code = "invalid-params"


class NotDivisible(InvalidParams):
    pass


class TooSmall(InvalidParams):
    pass


class InvalidPoint(InvalidInput):
    code = "invalid-point"


class BadCoordinate(InvalidPoint):
    pass


class Collision(InvalidPoint):
    pass


class WrongLength(InvalidInput):
    code = "wrong-length"


class ShapeMismatch(InvalidInput):
    code = "shape-mismatch"


class TooDeep(InvalidInput):
    code = "too-deep"


class DependentBasis(RuntimeError):
    """The y_0^{br} y_1^{cr} monomials failed to be independent in the source piece."""
