"""Exact computations with Lie conformal algebras."""

from ._lcalg import *  # noqa: F401,F403
from ._lcalg import __doc__  # noqa: F401
