"""Exception hierarchy.

``CapExceeded`` is not a failure of the input: it means an enumeration or a
reflection descent ran out of budget, and callers must not read it as a
negative answer.
"""


class WeylFacesError(Exception):
    pass


class GcmViolation(WeylFacesError, ValueError):
    def __init__(self, i, j, reason):
        self.i = i
        self.j = j
        self.reason = reason
        super().__init__(f"entry ({i}, {j}): {reason}")


class NotSymmetrizable(WeylFacesError, ValueError):
    pass


class NotDominant(WeylFacesError, ValueError):
    pass


class CapExceeded(WeylFacesError):
    def __init__(self, what, cap):
        self.what = what
        self.cap = cap
        super().__init__(f"{what}: budget of {cap} exhausted")


class RankTooLarge(WeylFacesError):
    pass


class RegularityRequired(WeylFacesError, ValueError):
    pass


class Unclosed(WeylFacesError):
    pass


class NotApplicable(WeylFacesError):
    pass


class TooLarge(WeylFacesError):
    pass
