class NotInImageError(ValueError):
    """A combinant-shaped family is not the image of any subspace."""


class NotInSpanError(ValueError):
    """Target form is not a linear combination of the candidates."""


class IdentityViolation(ArithmeticError):
    """An exact identity that must hold failed; indicates a bug."""
