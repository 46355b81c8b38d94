class AngSpecError(Exception):
    pass


# block matrix layer
class BlockMatrixError(AngSpecError):
    pass


class NotHermitian(BlockMatrixError):
    pass


class LambdaInSpectrumOfT22(BlockMatrixError):
    pass


class ZeroVector(BlockMatrixError):
    pass


class NoZero(BlockMatrixError):
    pass


class DegenerateInstance(BlockMatrixError):
    pass


class HypothesisViolated(BlockMatrixError):
    def __init__(self, failed):
        self.failed = list(failed)
        super().__init__(f"hypotheses violated: {', '.join(self.failed)}")


# angular operator layer
class AngularError(AngSpecError):
    pass


class RadicandNegativeUpper(AngularError):
    pass


class EmptyIntersection(AngularError):
    pass


class EnclosureViolation(AngularError):
    pass


class IntegratorFailure(AngularError):
    pass


class SuspectedDoubleRoot(AngularError):
    pass


class QuadratureBreakdown(AngularError):
    pass


class ContinuationAmbiguity(AngularError):
    pass


class WindowTooSmall(AngularError):
    pass
