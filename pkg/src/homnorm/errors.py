#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exception hierarchy for homnorm.

Three families are kept apart because the CLI maps them to different exit codes:

- InputError: the value handed in is malformed (exit 2)
- PropertyFailure: the value is well formed but a property does not hold (exit 1)
- ConfigError: settings or search limits are unusable (exit 2)
"""

from typing import Any, Optional, Tuple


class HomnormError(Exception):
    """
    Base class for every error raised by homnorm.

    Attributes:
        witness (Optional[Tuple[Any, ...]]): element or simplex indices exhibiting the problem
    """

    def __init__(self, message: str, witness: Optional[Tuple[Any, ...]] = None):
        super().__init__(message)
        self.witness = witness


class InputError(HomnormError, ValueError):
    """Malformed input value."""


class PropertyFailure(HomnormError):
    """A checked property does not hold."""


class ConfigError(HomnormError):
    """Unusable configuration."""


# groups

class OutOfRange(InputError):
    pass


class NonAssociative(InputError):
    pass


class NoIdentity(InputError):
    pass


class NoInverse(InputError):
    pass


class NotHomomorphism(InputError):
    pass


class IdentityNotPreserved(InputError):
    pass


class InvalidAction(InputError):
    pass


class ImageNotNormal(InputError):
    pass


class NotInjective(InputError):
    pass


class UnknownGroup(InputError):
    pass


# simplicial

class IndexOutOfRange(InputError):
    pass


class DegreeOutOfRange(InputError):
    pass


class BoundarySquareNonzero(InputError):
    pass


# bar / crossed / actions

class NotHomogeneous(InputError):
    pass


class MismatchedGroups(InputError):
    pass


class InvalidCrossedModule(InputError):
    pass


class SegalFailed(PropertyFailure):
    pass


class NotHomotopyAction(PropertyFailure):
    pass


class AxiomFailure(PropertyFailure):
    pass


class InvariantMismatch(PropertyFailure):
    pass


class SearchBudgetExceeded(ConfigError):
    pass
