"""Exception hierarchy shared by every module."""


class ScrewError(Exception):
    """Base class for all library errors."""


class Singular(ScrewError):
    pass


class IdenticallyZero(ScrewError):
    """Raised when a root query is made on the zero polynomial."""


class ZeroTwist(ScrewError):
    pass


class NoPseudoinverse(ScrewError):
    pass


class RankDeficient(ScrewError):
    pass


class UnclassifiableRank(ScrewError):
    pass


class NotLines(ScrewError):
    pass


class Dependent(ScrewError):
    pass


class NotInInvolution(ScrewError):
    pass


class NotComplementary(ScrewError):
    pass


class NotDual(ScrewError):
    pass


class ZeroDirection(ScrewError):
    pass
