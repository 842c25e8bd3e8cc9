"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the CLI can map
problems to exit codes without string matching.  Input problems (bad file,
malformed graph) are ``InputError`` subclasses; misuse of an operation
(wrong parity, vertex not forced, ...) is a ``PreconditionError``.
"""

from __future__ import annotations


class UbxError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class InputError(UbxError):
    """A graph could not be read or fails a structural invariant."""

    code = "input"


class ParseError(InputError):
    code = "parse"


class SelfLoopError(InputError):
    code = "self-loop"


class DuplicateEdgeError(InputError):
    code = "duplicate-edge"


class DisconnectedError(InputError):
    code = "disconnected"


class NotUnicyclicError(InputError):
    """Raised when |E| != |V| for an operation that needs the unique cycle."""

    code = "not-unicyclic"


class PreconditionError(UbxError):
    """An operation was called outside its stated domain."""

    code = "precondition"


class NoActiveVertexError(PreconditionError):
    code = "no-active-vertex"


class NotReducedError(PreconditionError):
    code = "not-reduced"


class WrongParityError(PreconditionError):
    """Even-girth operation on an odd cycle or vice versa."""

    code = "wrong-parity"


class NotForcedError(PreconditionError):
    code = "not-forced"


class CapExceededError(UbxError):
    """An exhaustive computation was asked to run above its size cap."""

    code = "cap-exceeded"

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class BoundsInfeasibleError(UbxError):
    code = "bounds-infeasible"
