"""Exception types raised by ilokit.

Every error is a ``ValueError`` subclass so callers that only care about
"bad input" can catch one thing.
"""


class AlgebraError(ValueError):
    pass


class NonInvertibleTranslation(AlgebraError):
    """Some right translation ``z -> d(z, x)`` is not a permutation."""

    def __init__(self, x):
        super().__init__(f"d(-, {x}) is not a permutation of the carrier")
        self.element = x


class NotSlominski(AlgebraError):
    pass


class NotHypersubtraction(AlgebraError):
    pass


class NotAutomorphism(AlgebraError):
    pass


class NotAbelian(AlgebraError):
    pass


class NotLatin(AlgebraError):
    pass


class NotPrequandle(AlgebraError):
    pass


class NotInternal(AlgebraError):
    pass


class NotHomomorphism(AlgebraError):
    pass


class NotBihomomorphism(NotHomomorphism):
    pass


class NotSection(AlgebraError):
    pass


class NotMorphismOfSplitEpis(AlgebraError):
    pass


class UnitMismatch(AlgebraError):
    pass


class OrderTooLarge(AlgebraError):
    pass


class InvalidTable(AlgebraError):
    pass


class FlagMismatch(AlgebraError):
    """Declared flags differ from the ones the table actually satisfies."""
