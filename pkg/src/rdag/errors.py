"""Exception types shared across the package."""


class RdagError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(RdagError):
    """Invalid graph structure or graph document."""


class CycleDetected(GraphError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"graph contains a cycle: {' -> '.join(map(str, self.cycle))}")


class SelfLoop(GraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class DuplicateEdge(GraphError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"duplicate edge {source} -> {target}")


class UnknownVertexReference(GraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"edge references undeclared vertex {vertex}")


class UnknownColour(RdagError):
    def __init__(self, colour):
        self.colour = colour
        super().__init__(f"unknown vertex colour {colour!r}")


class IncompatibleColouring(RdagError):
    def __init__(self, violations=None):
        self.violations = violations or []
        super().__init__(
            "colouring is not compatible"
            + (f" ({len(self.violations)} violation(s))" if self.violations else "")
        )


class DimensionMismatch(RdagError):
    pass


class NoMleError(RdagError):
    """The likelihood is unbounded from above; no MLE exists."""

    def __init__(self, colour):
        self.colour = colour
        super().__init__(
            f"no MLE: top row of the augmented matrix for colour {colour!r} "
            "lies in the span of the remaining rows"
        )


class NotPositiveDefinite(RdagError):
    pass


class NotPolystable(RdagError):
    pass


class SampleFormatError(RdagError):
    """Malformed sample CSV input."""


class RaggedRows(SampleFormatError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} has a different number of columns")


class NonNumericCell(SampleFormatError):
    def __init__(self, row, col, value):
        self.row = row
        self.col = col
        self.value = value
        super().__init__(f"non-numeric cell at row {row}, column {col}: {value!r}")
