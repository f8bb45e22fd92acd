class SemigroupError(Exception):
    pass


class ParseError(SemigroupError):
    def __init__(self, line_number: int, message: str) -> None:
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class MalformedTable(SemigroupError):
    pass


class NonAssociative(SemigroupError):
    def __init__(self, a, b, c) -> None:
        self.triple = (a, b, c)
        super().__init__(f"({a}*{b})*{c} != {a}*({b}*{c})")


class BadIdentity(SemigroupError):
    def __init__(self, identity, witness) -> None:
        self.identity = identity
        self.witness = witness
        super().__init__(f"{identity} is not a two-sided identity (fails on {witness})")


class BadZero(SemigroupError):
    def __init__(self, zero, witness) -> None:
        self.zero = zero
        self.witness = witness
        super().__init__(f"{zero} is not a two-sided zero (fails on {witness})")


class NotIdempotent(SemigroupError):
    def __init__(self, element) -> None:
        self.element = element
        super().__init__(f"{element} is not an idempotent")


class EmptySubset(SemigroupError):
    pass


class SizeGuardExceeded(SemigroupError):
    def __init__(self, requested: int, guard: int) -> None:
        self.requested = requested
        self.guard = guard
        super().__init__(f"{requested} elements requested, size guard is {guard}")


class InvalidParameters(SemigroupError):
    pass


class CarrierMismatch(SemigroupError):
    pass


class ForeignElement(SemigroupError):
    pass


class InfiniteCarrier(SemigroupError):
    pass


class NotAnInversePair(SemigroupError):
    def __init__(self, s, t) -> None:
        self.pair = (s, t)
        super().__init__(f"{s} and {t} are not inverses of each other")


class BaseHasNoZero(SemigroupError):
    pass


class BaseNotMonoid(SemigroupError):
    pass


class NotACongruence(SemigroupError):
    def __init__(self, alpha, beta, gamma, side: str) -> None:
        self.witness = (alpha, beta, gamma, side)
        super().__init__(
            f"related pair {alpha}, {beta} separated by {side} multiplication with {gamma}"
        )


class DuplicatePoints(SemigroupError):
    pass


class RankExceeded(SemigroupError):
    pass


class ArityMismatch(SemigroupError):
    pass


class ParameterTooSmall(SemigroupError):
    pass


class NotAnIdeal(SemigroupError):
    pass


class NotProperSubset(SemigroupError):
    pass


class NotKSymmetric(SemigroupError):
    pass


class BaseSeriesInvalid(SemigroupError):
    pass
