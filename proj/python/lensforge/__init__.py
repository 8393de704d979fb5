"""Lens spaces, Hopf-link covers and cyclic quotient singularities."""

from ._core import *  # noqa: F401,F403
from ._core import LensforgeError, __version__  # noqa: F401
