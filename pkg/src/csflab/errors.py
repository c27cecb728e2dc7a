"""Exception hierarchy and resource guards."""

from __future__ import annotations

import os


class CsfLabError(Exception):
    """Base class for all library errors."""


class DomainError(CsfLabError, ValueError):
    """An input violates a mathematical precondition."""


class ResourceGuardError(CsfLabError):
    """A computation was refused because it exceeds a size guard."""


class ParseError(DomainError):
    pass


class MalformedHeaderError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class StepError(DomainError):
    """The vertex triple handed to a step is not a valid witness."""


class NotABasisError(DomainError):
    pass


class VerificationError(CsfLabError):
    """An identity that must hold exactly did not."""


ENV_OVERRIDE = "CSF_LAB_MAX_N"


def check_limit(what: str, value: int, limit: int) -> None:
    # CSF_LAB_MAX_N can only raise a guard, never lower it; explicitly unsafe.
    override = os.environ.get(ENV_OVERRIDE)
    if override:
        limit = max(limit, int(override))
    if value > limit:
        raise ResourceGuardError(f"{what}={value} exceeds the guard {limit} (set {ENV_OVERRIDE} to override)")
