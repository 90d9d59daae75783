"""Exception hierarchy shared by all modules."""


class NilsemiError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(NilsemiError, ValueError):
    def __init__(self, i, j, value, n):
        self.i, self.j, self.value, self.n = i, j, value, n
        super().__init__(f"entry ({i},{j}) = {value} is not an element index below {n}")


class NotAssociative(NilsemiError, ValueError):
    def __init__(self, i, j, k, lhs, rhs):
        self.i, self.j, self.k = i, j, k
        self.lhs, self.rhs = lhs, rhs
        super().__init__(
            f"not associative at ({i},{j},{k}): ({i}*{j})*{k} = {lhs} but {i}*({j}*{k}) = {rhs}"
        )


class PremiseNotSatisfied(NilsemiError, ValueError):
    pass


class NotNilpotent(NilsemiError, ValueError):
    pass


class GeneratorBound(NilsemiError, ValueError):
    pass


class UnsupportedOrder(NilsemiError, ValueError):
    pass


class InvalidParams(NilsemiError, ValueError):
    pass


class RewriteDiverged(NilsemiError, RuntimeError):
    pass


class CertificationFailed(NilsemiError, RuntimeError):
    def __init__(self, presentation, reason):
        self.presentation = presentation
        self.reason = reason
        super().__init__(f"{presentation}: {reason}")


class OrderTooLarge(NilsemiError, ValueError):
    pass


class OutOfDomain(NilsemiError, ValueError):
    pass


class NotTabulated(NilsemiError, KeyError):
    pass


class ParseError(NilsemiError, ValueError):
    pass
