"""Exception types for validation failures, caps and internal consistency checks."""


class ActaError(Exception):
    """Base class for all package errors."""


class ValidationError(ActaError):
    """An input object violates a structural axiom."""


class NotAssociative(ValidationError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"multiplication not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class NotIdentity(ValidationError):
    def __init__(self, a: int):
        self.element = a
        super().__init__(f"identity law fails at element {a}")


class IndexOutOfRange(ValidationError):
    def __init__(self, where: str, value, bound: int):
        self.where = where
        self.value = value
        self.bound = bound
        super().__init__(f"{where}: value {value!r} not in range 0..{bound - 1}")


class IdentityActViolation(ValidationError):
    def __init__(self, a: int):
        self.element = a
        super().__init__(f"identity does not fix act element {a}")


class AssociativityActViolation(ValidationError):
    def __init__(self, s: int, t: int, a: int):
        self.triple = (s, t, a)
        super().__init__(f"action not associative at monoid elements {s},{t} on act element {a}")


class NotASubmonoid(ValidationError):
    def __init__(self, reason: str):
        super().__init__(f"not a submonoid: {reason}")


class NotIdempotent(ValidationError):
    def __init__(self, e: int):
        self.element = e
        super().__init__(f"element {e} is not idempotent")


class IdentityIdempotent(ValidationError):
    def __init__(self):
        super().__init__("the identity is excluded here; pass a non-identity idempotent")


class SideMismatch(ValidationError):
    def __init__(self, expected: str, got: str):
        super().__init__(f"expected a {expected} act, got a {got} act")


class MonoidMismatch(ValidationError):
    def __init__(self):
        super().__init__("acts are not over the same monoid")


class OrderExceedsCap(ActaError):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"monoid order {order} exceeds cap {cap}")


class BoundTooLargeForBudget(ActaError):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"search would visit {needed} skeletons, budget is {budget}")


class BudgetExceeded(ActaError):
    pass


class Cancelled(ActaError):
    pass


class ParseError(ActaError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = ""
        if line is not None:
            where += f" at line {line}"
        if field is not None:
            where += f" in field {field!r}"
        super().__init__(message + where)


class ConsistencyFailure(ActaError):
    """A fact that holds for every finite monoid failed; indicates an implementation bug."""


class InjectionFailure(ActaError):
    """The submonoid-to-idempotent assignment collided; indicates an implementation bug."""


class NoCover(ActaError):
    def __init__(self, e: int, a: int):
        self.idempotent = e
        self.element = a
        super().__init__(f"element {a} admits no good factorisation for idempotent {e}")
