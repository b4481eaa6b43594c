class CertificationFailed(AssertionError):
    """An internal consistency check failed; a bug or a false mathematical claim."""


class NotMultiplicative(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class PreconditionFailed(ValueError):
    pass


class NotEndomorphism(PreconditionFailed):
    pass


class NotAnIdeal(PreconditionFailed):
    pass


class NotAssociative(PreconditionFailed):
    pass


class CharacteristicTwo(PreconditionFailed):
    pass


class UnsupportedCharacteristic(ValueError):
    pass


class NotAutomorphism(PreconditionFailed):
    pass


class RadicalNonzero(ValueError):
    pass


class NotSemisimple(ValueError):
    def __init__(self, reason: str, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


class EquivarianceFailed(PreconditionFailed):
    pass


class IntertwiningFailed(PreconditionFailed):
    pass


class NotIdealIso(PreconditionFailed):
    pass


class NotSimple(ValueError):
    pass
