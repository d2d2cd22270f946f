"""Wonderful models of toric arrangements and type-A companion computations."""

from ._core import *  # noqa: F401,F403
from ._core import MathError, ParseError, ToricError, ValidationError  # noqa: F401
