class RankMismatch(ValueError):
    pass


class LevelMismatch(ValueError):
    pass


class NotCovered(Exception):
    """No admissibility condition (plain, Theta or blocks) applies to w."""

    def __init__(self, w, witness=None):
        self.w = w
        self.witness = witness
        super().__init__(f"w = {w} is not covered")


class AxiomViolation(Exception):
    def __init__(self, axiom, elements):
        self.axiom = axiom
        self.elements = elements
        super().__init__(f"{axiom} fails on {elements}")


class ZeroVector(ArithmeticError):
    pass


class NotComparable(ValueError):
    pass


class AlreadyStandard(ValueError):
    pass


class NoSolution(ArithmeticError):
    pass


class NonUniqueSolution(ArithmeticError):
    pass
