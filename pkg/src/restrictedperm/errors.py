"""Exception types raised across the package."""


class RestrictedPermError(Exception):
    """Base class for every error raised by this package."""


class CapacityError(RestrictedPermError, ValueError):
    """An argument exceeds a configured size limit."""


class IndexOutOfRangeError(RestrictedPermError, IndexError):
    """A rank lies outside ``1..total_count``."""


class NotAMemberError(RestrictedPermError, ValueError):
    """A word does not belong to the family it was ranked against."""


class InvalidPrefixError(RestrictedPermError, ValueError):
    pass


class WordRangeError(RestrictedPermError, ValueError):
    """A word operation would leave the alphabet or exceed its maximum length."""


class NotDisjointError(RestrictedPermError, ValueError):
    pass


class InconsistentInputError(RestrictedPermError, ValueError):
    pass


class EmptyFamilyError(RestrictedPermError, ValueError):
    pass


class InsufficientDataError(RestrictedPermError, ValueError):
    pass
