"""Coprime terms in arithmetic progressions over Z and norm-Euclidean quadratic rings."""

from ._apcoprime import *  # noqa: F401,F403
from ._apcoprime import __doc__  # noqa: F401
