class InputError(ValueError):
    """Malformed input or a violated precondition."""


class HypothesisViolation(Exception):
    """A lemma's hypothesis does not hold; ``witness`` carries the failing quantity."""

    def __init__(self, hypothesis: str, witness: dict):
        super().__init__(f"{hypothesis}: {witness}")
        self.hypothesis = hypothesis
        self.witness = witness


class LiftError(RuntimeError):
    """A certificate could not be carried back through a graph surgery."""


class NoAdmissibleMerge(RuntimeError):
    """No color merge satisfies the reduction's guarantees."""
