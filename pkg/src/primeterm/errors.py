"""Exception hierarchy shared by every module."""


class PrimeTermError(Exception):
    """Base class for all library errors."""


class TermSyntaxError(PrimeTermError, ValueError):
    """Malformed term text. ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


def _size(bits) -> str:
    bits = int(bits)
    if bits.bit_length() <= 64:
        return str(bits)
    return f"2^{bits.bit_length() - 1}"


class BitLimitExceeded(PrimeTermError, ArithmeticError):
    def __init__(self, required_bits, max_bits, what="intermediate"):
        super().__init__(
            f"{what} needs about {_size(required_bits)} bits, budget is {max_bits} bits"
        )
        self.required_bits = required_bits
        self.max_bits = max_bits


class DomainError(PrimeTermError, ValueError):
    pass


class UnboundVariable(PrimeTermError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unbound variable {self.name!r}"


class ExactDivisionViolated(PrimeTermError, ArithmeticError):
    """A division that must be exact left a remainder (construction bug)."""


class NoWitness(PrimeTermError, ValueError):
    pass


class SlotCollision(PrimeTermError, ValueError):
    pass


class NonLinearExponent(PrimeTermError, ValueError):
    pass


class RangeExceeded(PrimeTermError, ValueError):
    pass
