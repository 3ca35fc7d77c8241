"""Exception hierarchy shared by all crownmagic modules."""


class CrownMagicError(Exception):
    """Base class for all package errors."""


class InvalidInput(CrownMagicError):
    """A precondition on arguments was violated (bad size, parity, range...)."""


class NotBijective(CrownMagicError):
    """A candidate label map is not a bijection onto the required range."""


class NonConstantValence(CrownMagicError):
    """Two edges of a candidate labeling have different label sums."""

    def __init__(self, edge_a, sum_a, edge_b, sum_b):
        self.edge_a, self.sum_a = edge_a, sum_a
        self.edge_b, self.sum_b = edge_b, sum_b
        super().__init__(
            f"edge {edge_a} has sum {sum_a} but edge {edge_b} has sum {sum_b}"
        )


class NotConsecutiveSums(CrownMagicError):
    """Vertex-label sums over the edges do not form consecutive integers."""

    def __init__(self, message, sums):
        self.sums = sorted(sums)
        super().__init__(f"{message}; sum multiset: {self.sums}")


class NotACrownShape(CrownMagicError):
    """The graph is not a 2-regular core with an equal number of pendants per core vertex."""


class GuardExceeded(CrownMagicError):
    """An exhaustive search was refused because its estimated size exceeds the guard."""

    def __init__(self, estimated, guard):
        self.estimated = estimated
        self.guard = guard
        super().__init__(f"search space ~{estimated} exceeds guard {guard}")


class EmptyInterval(CrownMagicError):
    """The feasible-valence interval is empty (ceil(min) > floor(max))."""


class CoverConstructionError(CrownMagicError):
    """A cover construction that is guaranteed by theory failed at runtime.

    Raised instead of silently skipping a valence: it means either an
    implementation bug or a genuine counterexample, and must surface.
    """


class InvalidCertificate(CrownMagicError):
    """A serialized certificate failed structural or magic-sum re-verification."""
