"""Exception hierarchy.

Everything a caller can trigger with bad input derives from
:class:`FintopError`; the CLI maps those to exit status 2.
"""


def _fmt(m: int) -> str:
    out, i = [], 0
    while m:
        if m & 1:
            out.append(str(i))
        m >>= 1
        i += 1
    return "{" + ",".join(out) + "}"


class FintopError(ValueError):
    pass


class IndexOutOfRange(FintopError):
    pass


class TopologyAxiomError(FintopError):
    pass


class MissingEmpty(TopologyAxiomError):
    def __init__(self):
        super().__init__("family does not contain the empty set")


class MissingFull(TopologyAxiomError):
    def __init__(self):
        super().__init__("family does not contain the full point set")


class NotClosedUnderUnion(TopologyAxiomError):
    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"union of {_fmt(a)} and {_fmt(b)} is not in the family")


class NotClosedUnderIntersection(TopologyAxiomError):
    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"intersection of {_fmt(a)} and {_fmt(b)} is not in the family")


class SamePoint(FintopError):
    def __init__(self, x: int):
        super().__init__(f"points must be distinct, got {x} twice")


class NotContinuous(FintopError):
    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"preimage of open set {_fmt(witness)} is not open")


class CodomainMismatch(FintopError):
    pass


class PartitionError(FintopError):
    pass


class PartitionMismatch(FintopError):
    pass


class NotClosed(FintopError):
    pass


class EmptyCollapseSet(FintopError):
    pass


class NotHausdorff(FintopError):
    pass


class NotHausdorffDomain(NotHausdorff):
    pass


class NotHausdorffCodomain(NotHausdorff):
    pass


class CodomainNotHausdorff(NotHausdorff):
    pass


class DomainMismatch(FintopError):
    pass


class NotConstantOnBlock(FintopError):
    """A map separates two points the reflection identified.

    Raised only when the partition inside a reflection is wrong.
    """

    def __init__(self, block: int):
        self.block = block
        super().__init__(f"map is not constant on block {_fmt(block)}")


class InvalidParameter(FintopError):
    pass


class LimitExceeded(FintopError):
    pass


class DocumentError(FintopError):
    """Malformed space or map document; ``position`` locates the problem."""

    def __init__(self, message: str, position: str = ""):
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


class BoundTooSmallWarning(UserWarning):
    """Brute-force search bound is below the completeness threshold."""


class LargeEnumerationWarning(UserWarning):
    pass
