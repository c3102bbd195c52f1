"""Exception hierarchy shared by all orchardkit modules."""

from __future__ import annotations


class OrchardError(Exception):
    """Base class for all domain errors raised by orchardkit."""


# --- network validation ---

class NetworkInvalid(OrchardError):
    """A raw vertex/arc description violates a network invariant."""


class CycleDetected(NetworkInvalid):
    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        super().__init__(f"directed cycle through {', '.join(self.vertices)}")


class ParallelArcs(NetworkInvalid):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"parallel arcs {arc[0]} -> {arc[1]}")


class BadDegree(NetworkInvalid):
    def __init__(self, vertex, in_degree, out_degree):
        self.vertex = vertex
        self.in_degree = in_degree
        self.out_degree = out_degree
        super().__init__(
            f"vertex {vertex} has in-degree {in_degree}, out-degree {out_degree}"
        )


class MultipleRoots(NetworkInvalid):
    def __init__(self, roots):
        self.roots = tuple(roots)
        super().__init__(f"multiple in-degree-zero vertices: {', '.join(self.roots)}")


class UnlabeledLeaf(NetworkInvalid):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"out-degree-zero vertex {vertex} has no leaf label")


class DuplicateLeafLabel(NetworkInvalid):
    def __init__(self, label):
        self.label = label
        super().__init__(f"leaf label {label} used more than once")


class UnknownVertex(OrchardError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex}")


# --- parsing / serialization ---

class ParseError(OrchardError):
    """Syntax error in a text document, with position information."""

    def __init__(self, message, line=None, col=None, expected=None):
        self.line = line
        self.col = col
        self.expected = expected
        where = "" if line is None else f" at line {line}" + (
            "" if col is None else f", col {col}"
        )
        hint = "" if expected is None else f" (expected {expected})"
        super().__init__(f"{message}{where}{hint}")


class HybridTagMismatch(ParseError):
    def __init__(self, tag, count):
        self.tag = tag
        self.count = count
        super(ParseError, self).__init__(
            f"hybrid tag {tag} appears {count} time(s), exactly 2 required"
        )


class RaggedRow(ParseError):
    def __init__(self, line, got, want):
        self.got = got
        self.want = want
        super(ParseError, self).__init__(
            f"row at line {line} has {got} column(s), header has {want}"
        )
        self.line = line


class NegativeEntry(ParseError):
    def __init__(self, line, value):
        self.value = value
        super(ParseError, self).__init__(f"negative count {value} at line {line}")
        self.line = line


# --- profile / cherry operations ---

class LeafSetMismatch(OrchardError):
    def __init__(self, first, second):
        self.first = frozenset(first)
        self.second = frozenset(second)
        super().__init__(
            f"leaf sets differ: {sorted(self.first)} vs {sorted(self.second)}"
        )


class NotACherry(OrchardError):
    def __init__(self, a, b):
        super().__init__(f"{{{a}, {b}}} is not a cherry")


class NotAReticulatedCherry(OrchardError):
    def __init__(self, a, b):
        super().__init__(f"{{{a}, {b}}} is not a reticulated cherry with leaf {b}")


class NoCandidateCoordinate(OrchardError):
    def __init__(self, detail):
        super().__init__(detail)


class NegativeEntryAfterCut(OrchardError):
    def __init__(self, leaf, coord):
        self.leaf = leaf
        self.coord = coord
        super().__init__(
            f"cut would drive entry ({leaf}, {coord}) below zero; "
            "input is not the profile of a network"
        )


# --- reconstruction ---

class NotReconstructible(OrchardError):
    """The input profile cannot be produced by any orchard network."""

    def __init__(self, step, reason):
        self.step = step
        self.reason = reason
        super().__init__(f"stuck at step {step}: {reason}")


# --- generation / search ---

class InvalidParameters(OrchardError):
    pass


class ScriptViolation(OrchardError):
    pass


class GenerationBudgetExceeded(OrchardError):
    pass


class BudgetExceeded(OrchardError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"state budget {budget} exhausted")


class NotFound(OrchardError):
    pass
