"""Exception taxonomy shared by the whole package."""


class KwaycutError(Exception):
    """Base class for all package errors."""


class InputError(KwaycutError, ValueError):
    """Malformed arguments: bad vertex ids, missing edges, invalid partitions."""


class ParseError(InputError):
    """Instance text could not be parsed; the message carries a line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class CapacityError(KwaycutError):
    """Instance exceeds the configured limit for an exhaustive method."""


class GadgetConstructionError(KwaycutError):
    """A built gadget violated one of its structural invariants.

    The offending invariants are listed so that interpretation bugs surface
    instead of being hidden.
    """

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("gadget invariants violated: " + "; ".join(self.violations))


class SelfCheckError(KwaycutError):
    """A result failed re-evaluation against its own instance."""
