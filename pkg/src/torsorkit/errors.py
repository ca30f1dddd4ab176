"""Exception hierarchy.

Usage errors are programming mistakes (shape mismatch, wrong field).  The
``InconsistencyError`` family marks places where a construction that must
succeed for a valid torsor did not; they carry a human-readable witness.
"""


class TorsorkitError(Exception):
    pass


class UsageError(TorsorkitError, ValueError):
    pass


class InconsistencyError(TorsorkitError):
    pass


class ClosureFailure(InconsistencyError):
    pass


class MembershipFailure(InconsistencyError):
    pass


class CounitNotScalar(InconsistencyError):
    pass


class AntipodeMissing(InconsistencyError):
    pass


class GaloisFailure(InconsistencyError):
    pass


class CoinvariantMismatch(InconsistencyError):
    pass


class SpecFileError(TorsorkitError):
    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class ParseError(SpecFileError):
    pass


class ValidationError(SpecFileError):
    pass
